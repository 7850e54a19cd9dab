#include "finecat/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace finecat::core {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Int catalan(long n) {
  require(n >= 0, "catalan: negative index");
  Int c = 1;
  for (long i = 1; i <= n; ++i) c = exact_div(c * 2 * (2 * i - 1), Int(i + 1));
  return c;
}

Sequence catalan_shifted(int N) {
  require(N >= 0, "catalan_shifted: negative length");
  Sequence s{"catalan_shifted", {}};
  s.values.reserve(static_cast<std::size_t>(N));
  Int c = 1;  // C_{n-1} when pushing term n
  for (int n = 1; n <= N; ++n) {
    s.values.push_back(c);
    c = exact_div(c * 2 * (2 * n - 1), Int(n + 1));
  }
  return s;
}

Sequence fine_sequence(int N) {
  require(N >= 0, "fine_sequence: negative length");
  Sequence cat = catalan_shifted(N);
  Sequence f{"f0", {}};
  f.values.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    Int v = cat.at(n);
    for (int i = 1; i < n; ++i) v -= f.at(i) * cat.at(n - i);
    f.values.push_back(v);
  }
  return f;
}

Sequence invert_transform(const Sequence& f, int N) {
  require(N >= 0, "invert_transform: negative length");
  require(f.length() >= N, "invert_transform: input shorter than requested prefix");
  if (N >= 1) require(f.at(1) == 1, "invert_transform: f(1) must be 1");
  Sequence g{f.label.empty() ? "invert" : "invert(" + f.label + ")", {}};
  g.values.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    Int v = f.at(n);
    for (int i = 1; i < n; ++i) v += f.at(i) * g.at(n - i);
    g.values.push_back(v);
  }
  return g;
}

Sequence tower_sequence(int m, int N) {
  require(m >= 0 && m <= 4, "tower_sequence: m outside 0..4");
  Sequence s = fine_sequence(N);
  for (int level = 1; level <= m; ++level) {
    s = invert_transform(s, N);
    s.label = "f" + std::to_string(level);
  }
  return s;
}

Triangle convolution_triangle(const Sequence& f, int N) {
  require(N >= 0, "convolution_triangle: negative order");
  require(f.length() >= N, "convolution_triangle: input shorter than requested order");
  if (N >= 1) require(f.at(1) == 1, "convolution_triangle: f(1) must be 1");
  Triangle t(N);
  for (int n = 1; n <= N; ++n) t.at(n, 1) = f.at(n);
  for (int k = 2; k <= N; ++k) {
    for (int n = k; n <= N; ++n) {
      Int v = 0;
      for (int i = 1; i <= n - k + 1; ++i) v += f.at(i) * t.at(n - i, k - 1);
      t.at(n, k) = v;
    }
  }
  return t;
}

const Int& PascalPower::entry(int i, int j) const {
  static const Int zero = 0;
  if (i < 1 || i > order || j < 1 || j > order)
    throw std::out_of_range("PascalPower::entry: index outside matrix");
  if (j > i) return zero;
  return rows[i - 1][j - 1];
}

Triangle PascalPower::as_triangle() const {
  Triangle t(order);
  for (int i = 1; i <= order; ++i)
    for (int j = 1; j <= i; ++j) t.at(i, j) = rows[i - 1][j - 1];
  return t;
}

PascalPower pascal_power(int N, long p) {
  require(N >= 0, "pascal_power: negative order");
  PascalPower L;
  L.order = N;
  L.exponent = p;
  L.rows.resize(static_cast<std::size_t>(N));
  Int base(p);
  for (int i = 1; i <= N; ++i) {
    L.rows[i - 1].reserve(static_cast<std::size_t>(i));
    for (int j = 1; j <= i; ++j)
      L.rows[i - 1].push_back(pow_int(base, i - j) * binomial(i - 1, j - 1));
  }
  return L;
}

Triangle triangle_product(const Triangle& a, const Triangle& b) {
  require(a.order() == b.order(), "triangle_product: order mismatch");
  int N = a.order();
  Triangle out(N);
  for (int n = 1; n <= N; ++n) {
    for (int k = 1; k <= n; ++k) {
      Int v = 0;
      for (int i = k; i <= n; ++i) v += a.at(n, i) * b.at(i, k);
      out.at(n, k) = v;
    }
  }
  return out;
}

Triangle triangle_times_pascal_power(const Triangle& t, long p) {
  return triangle_product(t, pascal_power(t.order(), p).as_triangle());
}

SeriesPoly series_from_sequence(const Sequence& f, int N) {
  require(N >= 0, "series_from_sequence: negative degree bound");
  require(f.length() >= N, "series_from_sequence: input too short");
  SeriesPoly s;
  s.c.assign(static_cast<std::size_t>(N) + 1, Int(0));
  for (int i = 1; i <= N; ++i) s.c[static_cast<std::size_t>(i)] = f.at(i);
  return s;
}

SeriesPoly truncated_mul(const SeriesPoly& a, const SeriesPoly& b, int N) {
  require(N >= 0, "truncated_mul: negative degree bound");
  SeriesPoly r;
  r.c.assign(static_cast<std::size_t>(N) + 1, Int(0));
  int da = std::min(N, a.degree_bound());
  for (int i = 0; i <= da; ++i) {
    if (a.c[static_cast<std::size_t>(i)] == 0) continue;
    int db = std::min(N - i, b.degree_bound());
    for (int j = 0; j <= db; ++j) {
      if (b.c[static_cast<std::size_t>(j)] == 0) continue;
      r.c[static_cast<std::size_t>(i + j)] +=
          a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

Int series_power_coefficient(const Sequence& f, int k, int n) {
  require(k >= 1 && k <= n, "series_power_coefficient: need 1 <= k <= n");
  require(f.length() >= n, "series_power_coefficient: input too short");
  SeriesPoly base = series_from_sequence(f, n);
  SeriesPoly acc = base;
  for (int t = 2; t <= k; ++t) acc = truncated_mul(acc, base, n);
  return acc.c[static_cast<std::size_t>(n)];
}

}  // namespace finecat::core
