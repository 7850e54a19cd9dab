#include "finecat/identities.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <utility>

#include "finecat/closedforms.hpp"
#include "finecat/core.hpp"
#include "finecat/oracle.hpp"

namespace finecat::identities {

namespace cf = finecat::closedforms;

Formulas Formulas::standard() {
  Formulas f;
  f.catalan = core::catalan;
  f.fine = [](long n) {
    return core::fine_sequence(static_cast<int>(n)).at(static_cast<int>(n));
  };
  f.partial_bell_row = cf::partial_bell_row;
  f.g1_explicit = cf::g1_explicit;
  f.g2_dfact = cf::g2_dfact;
  f.g2_closed = cf::g2_closed;
  f.g2_rising = cf::g2_rising;
  f.g2_alternating = cf::g2_alternating;
  f.g2_from_g3 = cf::g2_from_g3;
  f.g3_closed = cf::g3_closed;
  f.g4_explicit = cf::g4_explicit;
  f.mirror_a = cf::mirror_a;
  f.f3_closed = cf::f3_closed;
  f.euler_catalan = cf::euler_catalan;
  return f;
}

const char* formula_name(int i) {
  static const char* const names[kFormulaCount] = {
      "catalan",        "fine",        "partial_bell_row", "g1_explicit",
      "g2_dfact",       "g2_closed",   "g2_rising",        "g2_alternating",
      "g2_from_g3",     "g3_closed",   "g4_explicit",      "mirror_a",
      "f3_closed",      "euler_catalan"};
  if (i < 0 || i >= kFormulaCount) {
    throw std::out_of_range("formula_name: index outside 0..13");
  }
  return names[i];
}

namespace {

std::function<Int(long)> bump1(std::function<Int(long)> g) {
  return [g](long n) -> Int { return g(n) + 1; };
}

std::function<Int(long, long)> bump2(std::function<Int(long, long)> g) {
  return [g](long n, long k) -> Int { return g(n, k) + 1; };
}

Int sign(long parity) { return (parity % 2 == 0) ? Int(1) : Int(-1); }

}  // namespace

Formulas perturbed(const Formulas& base, int i) {
  Formulas f = base;
  switch (i) {
    case 0: f.catalan = bump1(f.catalan); break;
    case 1: f.fine = bump1(f.fine); break;
    case 2: {
      auto g = f.partial_bell_row;
      f.partial_bell_row = [g](long n, const std::vector<Int>& x) {
        std::vector<Int> row = g(n, x);
        for (Int& v : row) v += 1;
        return row;
      };
      break;
    }
    case 3: f.g1_explicit = bump2(f.g1_explicit); break;
    case 4: f.g2_dfact = bump2(f.g2_dfact); break;
    case 5: f.g2_closed = bump2(f.g2_closed); break;
    case 6: f.g2_rising = bump2(f.g2_rising); break;
    case 7: f.g2_alternating = bump2(f.g2_alternating); break;
    case 8: f.g2_from_g3 = bump2(f.g2_from_g3); break;
    case 9: f.g3_closed = bump2(f.g3_closed); break;
    case 10: f.g4_explicit = bump2(f.g4_explicit); break;
    case 11: f.mirror_a = bump2(f.mirror_a); break;
    case 12: f.f3_closed = bump1(f.f3_closed); break;
    case 13: f.euler_catalan = bump1(f.euler_catalan); break;
    default: throw std::out_of_range("perturbed: index outside 0..13");
  }
  return f;
}

namespace {

// Grow-on-demand prefix of one tower sequence.
struct TowerCache {
  int level;
  Sequence seq;

  explicit TowerCache(int level_in) : level(level_in) {}

  const Int& at(long n) {
    if (static_cast<long>(seq.length()) < n) {
      long target = std::max<long>(2L * seq.length(), n);
      seq = core::tower_sequence(level, static_cast<int>(target));
    }
    return seq.at(static_cast<int>(n));
  }
};

// Grow-on-demand convolution triangle of the hill-free path counts.
struct ConvCache {
  Triangle tri{0};

  const Int& at(long n, long k) {
    if (static_cast<long>(tri.order()) < n) {
      long target = std::max<long>(2L * tri.order(), n);
      int t = static_cast<int>(target);
      tri = core::convolution_triangle(core::fine_sequence(t), t);
    }
    return tri.at(static_cast<int>(n), static_cast<int>(k));
  }
};

// Per-row pair of Bell tables, one per argument list, keyed by n.
struct BellCache {
  std::function<std::vector<Int>(long, const std::vector<Int>&)> row_fn;
  std::function<Int(long)> lhs_arg;
  std::function<Int(long)> rhs_arg;
  std::map<long, std::pair<std::vector<Int>, std::vector<Int>>> rows;

  const std::pair<std::vector<Int>, std::vector<Int>>& get(long n) {
    auto it = rows.find(n);
    if (it == rows.end()) {
      std::vector<Int> xl, xr;
      xl.reserve(n);
      xr.reserve(n);
      for (long j = 1; j <= n; ++j) {
        xl.push_back(lhs_arg(j));
        xr.push_back(rhs_arg(j));
      }
      it = rows.emplace(n, std::make_pair(row_fn(n, xl), row_fn(n, xr))).first;
    }
    return it->second;
  }
};

struct TernaryCache {
  std::map<long, std::vector<Int>> hists;

  const std::vector<Int>& get(long n) {
    auto it = hists.find(n);
    if (it == hists.end()) {
      it = hists.emplace(n, oracle::ternary_histogram(static_cast<int>(n)))
               .first;
    }
    return it->second;
  }
};

bool full_triangle(long n, long k) { return n >= 1 && k >= 1 && k <= n; }
bool below_diagonal(long n, long k) { return k >= 1 && k < n; }
bool whole_row(long n, long) { return n >= 1; }

// (k-1)! * B(n,k) on the left against sum_{i=k}^n C(i,k) (i-1)! B(n, index)
// on the right, where the summed index is k as transcribed or i as derived.
IdentityRecord make_bell_record(const Formulas& f, std::string id,
                                std::string text, Expectation expected,
                                std::function<Int(long)> lhs_arg,
                                std::function<Int(long)> rhs_arg,
                                bool index_runs_with_i) {
  auto cache = std::make_shared<BellCache>();
  cache->row_fn = f.partial_bell_row;
  cache->lhs_arg = std::move(lhs_arg);
  cache->rhs_arg = std::move(rhs_arg);
  IdentityRecord rec;
  rec.id = std::move(id);
  rec.statement = std::move(text);
  rec.expected = expected;
  rec.in_domain = full_triangle;
  rec.lhs = [cache](long n, long k) -> Int {
    return factorial(k - 1) * cache->get(n).first[k];
  };
  rec.rhs = [cache, index_runs_with_i](long n, long k) {
    const std::vector<Int>& row = cache->get(n).second;
    Int s = 0;
    for (long i = k; i <= n; ++i) {
      s += binomial(i, k) * factorial(i - 1) * row[index_runs_with_i ? i : k];
    }
    return s;
  };
  return rec;
}

Int alternating_weighted_sum(long n) {
  Int s = 0;
  for (long i = 1; i <= n; ++i) {
    s += sign(i - 1) * Int(i) * binomial(2 * n, n - i);
  }
  return s;
}

Int product_shifted_by_two(long i, long n) {
  Int p = 1;
  for (long j = 0; j < n; ++j) p *= i + 2 * j;
  return p;
}

}  // namespace

std::vector<IdentityRecord> build_registry(const Formulas& f) {
  std::vector<IdentityRecord> out;
  out.reserve(32);

  auto cat0_arg = [f](long j) -> Int { return factorial(j) * f.catalan(j - 1); };
  auto cat1_arg = [f](long j) -> Int { return factorial(j) * f.catalan(j); };
  auto cat1_arg_printed = [f](long j) -> Int {
    if (j == 2) return Int(2) * f.catalan(1);
    return factorial(j) * f.catalan(j);
  };
  auto fine_arg = [f](long j) -> Int { return factorial(j) * f.fine(j); };

  out.push_back(make_bell_record(
      f, "I-bell-fine.as_printed",
      "Bell-table relation between Catalan and hill-free argument rows, "
      "transcribed with the summed Bell index pinned at k",
      Expectation::kFailAsPrinted, cat0_arg, fine_arg, false));
  out.push_back(make_bell_record(
      f, "I-bell-fine.corrected",
      "Bell-table relation between Catalan and hill-free argument rows, "
      "summed Bell index running with i",
      Expectation::kPass, cat0_arg, fine_arg, true));
  out.push_back(make_bell_record(
      f, "I-bell-catalan.as_printed",
      "Bell-table relation between shifted-Catalan and Catalan argument "
      "rows, transcribed with second argument 2!*C_1 and Bell index pinned "
      "at k",
      Expectation::kFailAsPrinted, cat1_arg_printed, cat0_arg, false));
  out.push_back(make_bell_record(
      f, "I-bell-catalan.corrected",
      "Bell-table relation between shifted-Catalan and Catalan argument "
      "rows, arguments j!*C_j, summed Bell index running with i",
      Expectation::kPass, cat1_arg, cat0_arg, true));

  {
    IdentityRecord rec;
    rec.id = "I-vanish";
    rec.statement =
        "alternating binomial-product sum vanishes above the diagonal";
    rec.in_domain = [](long n, long k) { return n >= 1 && n < k; };
    rec.lhs = [](long n, long k) {
      Int s = 0;
      for (long i = 0; i <= k; ++i) {
        Int prod = 1;
        for (long t = 0; t < n; ++t) prod *= i - 2 * t;
        s += sign(i + n) * binomial(k, i) * prod;
      }
      return s;
    };
    rec.rhs = [](long, long) { return Int(0); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "I-vertical";
    rec.statement =
        "two-color closed form equals its vertical accumulation plus one";
    rec.in_domain = [](long n, long k) { return k > 1 && k < n; };
    rec.lhs = [](long n, long k) {
      return exact_div(Int(k) * binomial(2 * n - k - 1, n), Int(n - k));
    };
    rec.rhs = [](long n, long k) {
      Int s = 1;
      for (long i = k - 1; i <= n - 2; ++i) {
        s += exact_div(Int(i) * binomial(2 * n - 3 - i, n - 1), Int(n - i - 1));
      }
      return s;
    };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "I-card-ballot";
    rec.statement =
        "exhaustive ballot-word count equals the mirrored two-color triangle";
    rec.max_n = 10;
    rec.in_domain = full_triangle;
    rec.lhs = [](long n, long k) {
      return oracle::count_ballot(static_cast<int>(n), static_cast<int>(k));
    };
    rec.rhs = [f](long n, long k) { return f.mirror_a(n, k); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "I-binom";
    rec.statement =
        "C(2n,n+k) split over the position of the (k+1)st chosen element";
    rec.in_domain = full_triangle;
    rec.lhs = [](long n, long k) { return binomial(2 * n, n + k); };
    rec.rhs = [](long n, long k) {
      Int s = 0;
      for (long i = k; i <= n; ++i) {
        s += binomial(i, k) * binomial(2 * n - i - 1, n - 1);
      }
      return s;
    };
    out.push_back(std::move(rec));
  }

  {
    auto tern = std::make_shared<TernaryCache>();
    IdentityRecord rec;
    rec.id = "I-card-ternary";
    rec.statement =
        "exhaustive ternary-word count equals the four-color closed form";
    rec.max_n = 7;
    rec.in_domain = full_triangle;
    rec.lhs = [tern](long n, long k) { return tern->get(n)[k - 1]; };
    rec.rhs = [f](long n, long k) { return f.g4_explicit(n, k); };
    out.push_back(std::move(rec));
  }

  {
    auto tern = std::make_shared<TernaryCache>();
    auto tower4 = std::make_shared<TowerCache>(4);
    IdentityRecord rec;
    rec.id = "I-card-ternary-sum";
    rec.statement =
        "ternary-word row totals equal the fourth tower sequence";
    rec.max_n = 7;
    rec.row_only = true;
    rec.in_domain = whole_row;
    rec.lhs = [tern](long n, long) {
      Int s = 0;
      for (const Int& v : tern->get(n)) s += v;
      return s;
    };
    rec.rhs = [tower4](long n, long) { return tower4->at(n); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "I-fine-alt";
    rec.statement =
        "alternating binomial formula for the hill-free path counts";
    rec.row_only = true;
    rec.in_domain = whole_row;
    rec.lhs = [f](long n, long) { return f.fine(n); };
    rec.rhs = [](long n, long) {
      Int s = 0;
      for (long i = 1; i <= n; ++i) {
        s += pow_int(Int(-2), i - 1) * Int(i) * binomial(2 * n, n - i);
      }
      return exact_div(s, Int(n));
    };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "I-central-alt";
    rec.statement =
        "central binomial coefficient as an alternating weighted sum";
    rec.row_only = true;
    rec.in_domain = whole_row;
    rec.lhs = [](long n, long) { return binomial(2 * n - 2, n - 1); };
    rec.rhs = [](long n, long) { return alternating_weighted_sum(n); };
    out.push_back(std::move(rec));
  }

  {
    auto alt_sum = [](long n, long k) {
      Int s = 0;
      for (long i = k; i <= n; ++i) {
        s += sign(i - k) * binomial(i, k) * binomial(2 * n, n - i);
      }
      return s;
    };
    IdentityRecord rec;
    rec.id = "I-g2-alt.as_printed";
    rec.statement =
        "binomial coefficient against the alternating two-color sum, "
        "transcribed with prefactor (n-k)/k";
    rec.expected = Expectation::kFailAsPrinted;
    rec.in_domain = below_diagonal;
    rec.lhs = [](long n, long k) { return binomial(2 * n - k - 1, n); };
    rec.rhs = [alt_sum](long n, long k) {
      return exact_div(Int(n - k) * alt_sum(n, k), Int(k));
    };
    out.push_back(std::move(rec));

    IdentityRecord fixed;
    fixed.id = "I-g2-alt.corrected";
    fixed.statement =
        "binomial coefficient against the alternating two-color sum, "
        "prefactor (n-k)/n";
    fixed.in_domain = below_diagonal;
    fixed.lhs = [](long n, long k) { return binomial(2 * n - k - 1, n); };
    fixed.rhs = [alt_sum](long n, long k) {
      return exact_div(Int(n - k) * alt_sum(n, k), Int(n));
    };
    out.push_back(std::move(fixed));
  }

  {
    IdentityRecord rec;
    rec.id = "I-catalan-alt";
    rec.statement = "n times a Catalan number as an alternating weighted sum";
    rec.row_only = true;
    rec.in_domain = whole_row;
    rec.lhs = [f](long n, long) -> Int { return Int(n) * f.catalan(n - 1); };
    rec.rhs = [](long n, long) { return alternating_weighted_sum(n); };
    out.push_back(std::move(rec));
  }

  {
    auto rising_lhs = [](long n, long k) {
      Int p = k;
      for (long i = 1; i <= n - k - 1; ++i) p *= n + i;
      return p;
    };
    auto strictly_inside = [](long n, long k) { return k >= 1 && k <= n - 2; };

    IdentityRecord rec;
    rec.id = "I-exotic-8.as_printed";
    rec.statement =
        "eight-item identity, transcribed with binomial lower index n+2k-i";
    rec.expected = Expectation::kFailAsPrinted;
    rec.in_domain = strictly_inside;
    rec.lhs = rising_lhs;
    rec.rhs = [](long n, long k) -> Int {
      Int s = 0;
      for (long i = 0; i <= k - 1; ++i) {
        s += Int(k - i) * binomial(k, i) *
             binomial(2 * n - 2 * k, n + 2 * k - i);
      }
      return factorial(n - k - 1) * s;
    };
    out.push_back(std::move(rec));

    IdentityRecord fixed;
    fixed.id = "I-exotic-8.corrected";
    fixed.statement = "eight-item identity with binomial lower index n-i";
    fixed.in_domain = strictly_inside;
    fixed.lhs = rising_lhs;
    fixed.rhs = [](long n, long k) -> Int {
      Int s = 0;
      for (long i = 0; i <= k - 1; ++i) {
        s += Int(k - i) * binomial(k, i) * binomial(2 * n - 2 * k, n - i);
      }
      return factorial(n - k - 1) * s;
    };
    out.push_back(std::move(fixed));
  }

  {
    IdentityRecord rec;
    rec.id = "I-exotic-10";
    rec.statement =
        "ten-item identity tying the weighted three-color row to the "
        "four-color alternating sum";
    rec.in_domain = full_triangle;
    rec.lhs = [](long n, long k) {
      Int s = 0;
      for (long i = k; i <= n; ++i) {
        s += Int(i) * binomial(i - 1, k - 1) * binomial(2 * n, n - i);
      }
      return s;
    };
    rec.rhs = [](long n, long k) {
      Int s = 0;
      for (long i = 1; i <= k; ++i) {
        s += sign(k + i) * binomial(k, i) * product_shifted_by_two(i, n);
      }
      return exact_div(pow_int(Int(2), n - k) * s, factorial(n - 1));
    };
    out.push_back(std::move(rec));
  }

  {
    auto tower2 = std::make_shared<TowerCache>(2);
    IdentityRecord rec;
    rec.id = "P-segner";
    rec.statement = "second tower sequence is the Catalan numbers shifted once";
    rec.row_only = true;
    rec.in_domain = whole_row;
    rec.lhs = [tower2](long n, long) { return tower2->at(n); };
    rec.rhs = [f](long n, long) { return f.catalan(n); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-cik";
    rec.statement = "two-term recurrence of the two-color triangle";
    rec.in_domain = below_diagonal;
    rec.lhs = [f](long n, long k) { return f.g2_closed(n + 1, k + 1); };
    rec.rhs = [f](long n, long k) -> Int {
      return f.g2_closed(n + 1, k + 2) + f.g2_closed(n, k);
    };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-rr1";
    rec.statement = "vertical recurrence of the two-color triangle";
    rec.in_domain = [](long n, long k) { return n > 1 && k > 1 && k <= n; };
    rec.lhs = [f](long n, long k) { return f.g2_closed(n, k); };
    rec.rhs = [f](long n, long k) {
      Int s = 1;
      for (long i = k - 1; i <= n - 2; ++i) s += f.g2_closed(n - 1, i);
      return s;
    };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-mirror.rec";
    rec.statement = "Pascal-style recurrence of the mirrored triangle";
    rec.in_domain = below_diagonal;
    rec.lhs = [f](long n, long k) { return f.mirror_a(n + 1, k + 1); };
    rec.rhs = [f](long n, long k) -> Int {
      return f.mirror_a(n + 1, k) + f.mirror_a(n, k + 1);
    };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-mirror.first";
    rec.statement = "first column of the mirrored triangle is constant one";
    rec.in_domain = [](long n, long k) { return n >= 1 && k == 1; };
    rec.lhs = [f](long n, long k) { return f.mirror_a(n, k); };
    rec.rhs = [](long, long) { return Int(1); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-mirror.diag";
    rec.statement = "diagonal of the mirrored triangle is Catalan";
    rec.in_domain = [](long n, long k) { return n >= 1 && k == n; };
    rec.lhs = [f](long n, long k) { return f.mirror_a(n, k); };
    rec.rhs = [f](long n, long) { return f.catalan(n - 1); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-mirror.subdiag";
    rec.statement = "subdiagonal of the mirrored triangle is Catalan";
    rec.in_domain = [](long n, long k) { return n >= 2 && k == n - 1; };
    rec.lhs = [f](long n, long k) { return f.mirror_a(n, k); };
    rec.rhs = [f](long n, long) { return f.catalan(n - 1); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-f3";
    rec.statement = "row sums of the three-color triangle equal C(2n-1,n)";
    rec.row_only = true;
    rec.in_domain = whole_row;
    rec.lhs = [f](long n, long) {
      Int s = 0;
      for (long k = 1; k <= n; ++k) s += f.g3_closed(n, k);
      return s;
    };
    rec.rhs = [f](long n, long) { return f.f3_closed(n); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-euler";
    rec.statement =
        "double-factorial product formula reproduces the Catalan numbers";
    rec.row_only = true;
    rec.in_domain = whole_row;
    rec.lhs = [f](long n, long) { return f.euler_catalan(n); };
    rec.rhs = [f](long n, long) { return f.catalan(n - 1); };
    out.push_back(std::move(rec));
  }

  {
    auto conv = std::make_shared<ConvCache>();
    IdentityRecord rec;
    rec.id = "P-g1";
    rec.statement =
        "alternating explicit form of the one-color triangle equals its "
        "convolution";
    rec.in_domain = full_triangle;
    rec.lhs = [f](long n, long k) { return f.g1_explicit(n, k); };
    rec.rhs = [conv](long n, long k) { return conv->at(n, k); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-g2-dfact";
    rec.statement =
        "double-factorial form of the two-color triangle equals its closed "
        "form";
    rec.in_domain = full_triangle;
    rec.lhs = [f](long n, long k) { return f.g2_dfact(n, k); };
    rec.rhs = [f](long n, long k) { return f.g2_closed(n, k); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-g2-alt-form";
    rec.statement =
        "alternating form of the two-color triangle equals its closed form";
    rec.in_domain = full_triangle;
    rec.lhs = [f](long n, long k) { return f.g2_alternating(n, k); };
    rec.rhs = [f](long n, long k) { return f.g2_closed(n, k); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-g2-from-g3";
    rec.statement =
        "binomial mixture of the three-color triangle reproduces the "
        "two-color triangle";
    rec.in_domain = below_diagonal;
    rec.lhs = [f](long n, long k) { return f.g2_from_g3(n, k); };
    rec.rhs = [f](long n, long k) { return f.g2_closed(n, k); };
    out.push_back(std::move(rec));
  }

  {
    IdentityRecord rec;
    rec.id = "P-g2-rising";
    rec.statement =
        "rising-product form of the two-color triangle equals its closed form";
    rec.in_domain = below_diagonal;
    rec.lhs = [f](long n, long k) { return f.g2_rising(n, k); };
    rec.rhs = [f](long n, long k) { return f.g2_closed(n, k); };
    out.push_back(std::move(rec));
  }

  return out;
}

EvalResult run_record(const IdentityRecord& rec, int max_n) {
  EvalResult r;
  r.id = rec.id;
  r.expected = rec.expected;
  r.max_n_used = std::min(max_n, rec.max_n);
  auto t0 = std::chrono::steady_clock::now();

  auto check = [&r, &rec](long n, long k) {
    ++r.cells;
    Int lv, rv;
    bool lok = false, rok = false;
    std::string lerr, rerr;
    try {
      lv = rec.lhs(n, k);
      lok = true;
    } catch (const std::exception& e) {
      lerr = std::string("<error: ") + e.what() + ">";
    }
    try {
      rv = rec.rhs(n, k);
      rok = true;
    } catch (const std::exception& e) {
      rerr = std::string("<error: ") + e.what() + ">";
    }
    if (lok && rok && lv == rv) return;
    ++r.mismatches;
    if (static_cast<int>(r.counterexamples.size()) < kMaxCounterexamples) {
      r.counterexamples.push_back(
          {n, k, lok ? to_decimal(lv) : lerr, rok ? to_decimal(rv) : rerr});
    }
  };

  for (long n = 1; n <= r.max_n_used; ++n) {
    if (rec.row_only) {
      if (rec.in_domain(n, 0)) check(n, 0);
    } else {
      for (long k = 1; k <= r.max_n_used; ++k) {
        if (rec.in_domain(n, k)) check(n, k);
      }
    }
  }

  r.vacuous = (r.cells == 0);
  r.matched = (r.mismatches == 0);
  auto t1 = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

EvalResult run_identity(const std::vector<IdentityRecord>& registry,
                        const std::string& id, int max_n) {
  for (const IdentityRecord& rec : registry) {
    if (rec.id == id) return run_record(rec, max_n);
  }
  throw unknown_identity(id);
}

std::vector<EvalResult> run_matching(const std::vector<IdentityRecord>& registry,
                                     const std::string& token, int max_n) {
  std::vector<EvalResult> out;
  const std::string prefix = token + ".";
  for (const IdentityRecord& rec : registry) {
    bool hit = rec.id == token || rec.id.rfind(prefix, 0) == 0;
    if (hit) out.push_back(run_record(rec, max_n));
  }
  if (out.empty()) throw unknown_identity(token);
  return out;
}

std::vector<EvalResult> run_all(const std::vector<IdentityRecord>& registry,
                                int max_n) {
  std::vector<EvalResult> out;
  out.reserve(registry.size());
  for (const IdentityRecord& rec : registry) {
    out.push_back(run_record(rec, max_n));
  }
  return out;
}

bool all_matched(const std::vector<EvalResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const EvalResult& r) { return r.as_expected(); });
}

}  // namespace finecat::identities
