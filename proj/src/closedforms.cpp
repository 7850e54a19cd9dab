#include "finecat/closedforms.hpp"

#include <stdexcept>

namespace finecat::closedforms {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_cell(long n, long k) {
  require(n >= 1, "triangle cell: n must be positive");
  require(k >= 1 && k <= n, "triangle cell: k must lie in 1..n");
}

Int sign(long parity) { return (parity % 2 == 0) ? Int(1) : Int(-1); }

}  // namespace

Int double_factorial(long m) {
  require(m >= -1, "double_factorial: argument below -1");
  Int r = 1;
  for (long i = m; i >= 2; i -= 2) r *= i;
  return r;
}

Int g1_explicit(long n, long k) {
  check_cell(n, k);
  Int sum = 0;
  for (long i = k; i <= n; ++i) {
    sum += pow_int(Int(-2), i - k) * binomial(i, k) * binomial(2 * n, n - i);
  }
  return exact_div(Int(k) * sum, Int(n));
}

Int g2_dfact(long n, long k) {
  check_cell(n, k);
  Int sum = 0;
  for (long j = 1; 2 * j - 1 <= k; ++j) {
    sum += sign(j - 1) * binomial(k, 2 * j - 1) * double_factorial(2 * j - 1) *
           double_factorial(2 * n - 2 * j - 1);
  }
  return exact_div(pow_int(Int(2), n - k) * sum, factorial(n));
}

Int g2_closed(long n, long k) {
  check_cell(n, k);
  if (k == n) return 1;
  return exact_div(Int(k) * binomial(2 * n - k - 1, n), Int(n - k));
}

Int g2_rising(long n, long k) {
  check_cell(n, k);
  require(k < n, "g2_rising: defined below the diagonal only");
  Int prod = k;
  for (long i = 1; i <= n - k - 1; ++i) prod *= n + i;
  return exact_div(prod, factorial(n - k));
}

Int g2_alternating(long n, long k) {
  check_cell(n, k);
  Int sum = 0;
  for (long i = k; i <= n; ++i) {
    sum += sign(i - k) * binomial(i, k) * binomial(2 * n, n - i);
  }
  return exact_div(Int(k) * sum, Int(n));
}

Int g2_from_g3(long n, long k) {
  check_cell(n, k);
  require(k < n, "g2_from_g3: defined below the diagonal only");
  Int sum = 0;
  for (long i = 0; i <= k - 1; ++i) {
    if (k - i > n - k) continue;
    sum += binomial(k, i) * g3_closed(n - k, k - i);
  }
  return sum;
}

Int mirror_a(long n, long k) {
  check_cell(n, k);
  return g2_closed(n, n - k + 1);
}

Int g3_closed(long n, long k) {
  check_cell(n, k);
  return exact_div(Int(k) * binomial(2 * n, n - k), Int(n));
}

Int g4_explicit(long n, long k) {
  check_cell(n, k);
  Int sum = 0;
  for (long i = 0; i <= k; ++i) {
    Int prod = 1;
    for (long j = 0; j < n; ++j) prod *= i + 2 * j;
    sum += sign(k - i) * binomial(k, i) * prod;
  }
  return exact_div(pow_int(Int(2), n - k) * sum, factorial(n));
}

Int f3_closed(long n) {
  require(n >= 1, "f3_closed: n must be positive");
  return binomial(2 * n - 1, n);
}

Int euler_catalan(long n) {
  require(n >= 1, "euler_catalan: n must be positive");
  return exact_div(pow_int(Int(2), n - 1) * double_factorial(2 * n - 3),
                   factorial(n));
}

Int partial_bell(long n, long k, const std::vector<Int>& x) {
  require(n >= 0 && k >= 0, "partial_bell: indices must be nonnegative");
  if (k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  require(static_cast<long>(x.size()) >= n - k + 1,
          "partial_bell: not enough arguments");
  // column DP; column j only ever reads rows j..j+(n-k)
  std::vector<Int> prev(n + 1, Int(0)), cur(n + 1, Int(0));
  prev[0] = 1;
  for (long j = 1; j <= k; ++j) {
    for (long a = j; a <= j + (n - k); ++a) {
      Int s = 0;
      for (long i = 1; i <= a - j + 1; ++i) {
        if (prev[a - i] == 0) continue;
        s += binomial(a - 1, i - 1) * x[i - 1] * prev[a - i];
      }
      cur[a] = s;
    }
    std::swap(prev, cur);
    std::fill(cur.begin(), cur.end(), Int(0));
  }
  return prev[n];
}

std::vector<Int> partial_bell_row(long n, const std::vector<Int>& x) {
  require(n >= 0, "partial_bell_row: n must be nonnegative");
  require(static_cast<long>(x.size()) >= n,
          "partial_bell_row: not enough arguments");
  // full table B[a][j] for 0 <= j <= a <= n
  std::vector<std::vector<Int>> b(n + 1, std::vector<Int>(n + 1, Int(0)));
  b[0][0] = 1;
  for (long a = 1; a <= n; ++a) {
    for (long j = 1; j <= a; ++j) {
      Int s = 0;
      for (long i = 1; i <= a - j + 1; ++i) {
        if (b[a - i][j - 1] == 0) continue;
        s += binomial(a - 1, i - 1) * x[i - 1] * b[a - i][j - 1];
      }
      b[a][j] = s;
    }
  }
  std::vector<Int> row(n + 1, Int(0));
  if (n == 0) row[0] = 1;
  for (long j = 1; j <= n; ++j) row[j] = b[n][j];
  return row;
}

}  // namespace finecat::closedforms
