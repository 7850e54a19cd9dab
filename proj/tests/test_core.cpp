#include <vector>

#include "doctest.h"

#include "finecat/core.hpp"
#include "finecat/ints.hpp"
#include "finecat/sequence.hpp"
#include "finecat/triangle.hpp"

using finecat::Int;
using finecat::Sequence;
using finecat::Triangle;
namespace core = finecat::core;

TEST_CASE("catalan numbers") {
  CHECK(core::catalan(0) == 1);
  CHECK(core::catalan(1) == 1);
  CHECK(core::catalan(2) == 2);
  CHECK(core::catalan(3) == 5);
  CHECK(core::catalan(5) == 42);
  CHECK(core::catalan(10) == 16796);
  CHECK(finecat::to_decimal(core::catalan(30)) == "3814986502092304");
}

TEST_CASE("fine sequence prefix") {
  Sequence f = core::fine_sequence(8);
  std::vector<Int> want{1, 0, 1, 2, 6, 18, 57, 186};
  REQUIRE(f.length() == 8);
  for (int n = 1; n <= 8; ++n) CHECK(f.at(n) == want[n - 1]);
}

TEST_CASE("invert transform basics") {
  SUBCASE("delta sequence maps to all ones") {
    // f = 1,0,0,... gives g(n) = g(n-1): only the i = 1 summand survives.
    Sequence f{"delta", {Int(1), Int(0), Int(0), Int(0)}};
    Sequence g = core::invert_transform(f, 4);
    CHECK(g.at(1) == 1);
    CHECK(g.at(2) == 1);
    CHECK(g.at(3) == 1);
    CHECK(g.at(4) == 1);
  }
  SUBCASE("all ones invert to powers of two") {
    Sequence f{"ones", {Int(1), Int(1), Int(1), Int(1), Int(1)}};
    Sequence g = core::invert_transform(f, 5);
    CHECK(g.at(1) == 1);
    CHECK(g.at(2) == 2);
    CHECK(g.at(3) == 4);
    CHECK(g.at(4) == 8);
    CHECK(g.at(5) == 16);
  }
  SUBCASE("leading term must be one") {
    Sequence f{"bad", {Int(2), Int(1)}};
    CHECK_THROWS_AS(core::invert_transform(f, 2), std::invalid_argument);
  }
}

TEST_CASE("tower of iterated inverts") {
  const int N = 12;
  Sequence f0 = core::tower_sequence(0, N);
  Sequence f1 = core::tower_sequence(1, N);
  Sequence f2 = core::tower_sequence(2, N);
  Sequence f3 = core::tower_sequence(3, N);
  Sequence f4 = core::tower_sequence(4, N);

  SUBCASE("level zero is the fine sequence") {
    Sequence fine = core::fine_sequence(N);
    for (int n = 1; n <= N; ++n) CHECK(f0.at(n) == fine.at(n));
  }
  SUBCASE("level one is catalan shifted down") {
    for (int n = 1; n <= N; ++n) CHECK(f1.at(n) == core::catalan(n - 1));
  }
  SUBCASE("level two is catalan") {
    for (int n = 1; n <= N; ++n) CHECK(f2.at(n) == core::catalan(n));
  }
  SUBCASE("level three counts half of central binomials") {
    for (int n = 1; n <= N; ++n) {
      CHECK(f3.at(n) == finecat::binomial(2 * n - 1, n));
    }
  }
  SUBCASE("level four prefix") {
    std::vector<Int> want{1, 4, 17, 74, 326};
    for (int n = 1; n <= 5; ++n) CHECK(f4.at(n) == want[n - 1]);
  }
  SUBCASE("each level inverts to the next") {
    Sequence levels[5] = {f0, f1, f2, f3, f4};
    for (int lvl = 0; lvl < 4; ++lvl) {
      Sequence g = core::invert_transform(levels[lvl], N);
      for (int n = 1; n <= N; ++n) CHECK(g.at(n) == levels[lvl + 1].at(n));
    }
  }
}

TEST_CASE("convolution triangle") {
  const int N = 10;
  Sequence cat1 = core::tower_sequence(1, N);
  Triangle t = core::convolution_triangle(cat1, N);

  SUBCASE("first column restates the sequence") {
    for (int n = 1; n <= N; ++n) CHECK(t.at(n, 1) == cat1.at(n));
  }
  SUBCASE("diagonal is all ones") {
    for (int n = 1; n <= N; ++n) CHECK(t.at(n, n) == 1);
  }
  SUBCASE("small interior cells") {
    CHECK(t.at(3, 2) == 2);
    CHECK(t.at(4, 2) == 5);
    CHECK(t.at(4, 3) == 3);
    CHECK(t.at(5, 2) == 14);
  }
  SUBCASE("row sums equal the invert transform") {
    Sequence g = core::invert_transform(cat1, N);
    for (int n = 1; n <= N; ++n) CHECK(t.row_sum(n) == g.at(n));
  }
  SUBCASE("cells match power series coefficients") {
    for (int k = 1; k <= N; ++k) {
      for (int n = k; n <= N; ++n) {
        CHECK(core::series_power_coefficient(cat1, k, n) == t.at(n, k));
      }
    }
  }
}

TEST_CASE("pascal powers") {
  const int N = 8;
  SUBCASE("exponent zero is the identity") {
    core::PascalPower id = core::pascal_power(N, 0);
    for (int i = 1; i <= N; ++i) {
      for (int j = 1; j <= i; ++j) {
        CHECK(id.entry(i, j) == (i == j ? 1 : 0));
      }
    }
  }
  SUBCASE("entries scale binomials by powers of the exponent") {
    core::PascalPower l2 = core::pascal_power(N, 2);
    CHECK(l2.entry(3, 1) == 4);
    CHECK(l2.entry(4, 2) == 12);
    CHECK(l2.entry(5, 5) == 1);
    core::PascalPower lm1 = core::pascal_power(N, -1);
    CHECK(lm1.entry(3, 1) == 1);
    CHECK(lm1.entry(4, 1) == -1);
  }
  SUBCASE("powers compose as a group") {
    for (long p : {-2L, -1L, 1L, 2L}) {
      core::PascalPower lp = core::pascal_power(N, p);
      core::PascalPower lq = core::pascal_power(N, -p);
      Triangle prod = core::triangle_product(lp.as_triangle(), lq.as_triangle());
      for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= i; ++j) {
          CHECK(prod.at(i, j) == (i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("triangle times pascal power moves along the tower") {
  const int N = 9;
  Sequence fine = core::fine_sequence(N);
  Triangle g1 = core::convolution_triangle(fine, N);

  SUBCASE("multiplying by the identity changes nothing") {
    CHECK(core::triangle_times_pascal_power(g1, 0) == g1);
  }
  SUBCASE("one pascal factor per tower step") {
    for (int m = 2; m <= 4; ++m) {
      Triangle conv =
          core::convolution_triangle(core::tower_sequence(m - 1, N), N);
      Triangle prod = core::triangle_times_pascal_power(g1, m - 1);
      CHECK(prod == conv);
    }
  }
  SUBCASE("negative powers walk back down") {
    Triangle g3 = core::convolution_triangle(core::tower_sequence(2, N), N);
    CHECK(core::triangle_times_pascal_power(g3, -2) == g1);
  }
}

TEST_CASE("value type helpers") {
  CHECK(finecat::factorial(0) == 1);
  CHECK(finecat::factorial(5) == 120);
  CHECK(finecat::binomial(4, 2) == 6);
  CHECK(finecat::binomial(4, 5) == 0);
  CHECK(finecat::binomial(4, -1) == 0);
  CHECK(finecat::pow_int(Int(0), 0) == 1);
  CHECK(finecat::pow_int(Int(-2), 3) == -8);
  CHECK_THROWS_AS(finecat::pow_int(Int(2), -1), std::invalid_argument);
  CHECK(finecat::exact_div(Int(12), Int(4)) == 3);
  CHECK_THROWS_AS(finecat::exact_div(Int(12), Int(5)),
                  finecat::exact_division_error);
  CHECK_THROWS_AS(finecat::exact_div(Int(1), Int(0)),
                  finecat::exact_division_error);

  Triangle t(3);
  t.at(2, 1) = 7;
  CHECK(t.at(2, 1) == 7);
  CHECK_THROWS_AS(t.at(4, 1), std::out_of_range);
  CHECK_THROWS_AS(t.at(2, 3), std::out_of_range);

  Sequence s{"s", {Int(1), Int(2)}};
  CHECK(s.at(2) == 2);
  CHECK_THROWS_AS(s.at(0), std::out_of_range);
  CHECK_THROWS_AS(s.at(3), std::out_of_range);
}
