#include <string>
#include <vector>

#include "doctest.h"

#include "finecat/identities.hpp"
#include "finecat/ints.hpp"

using finecat::Int;
namespace ids = finecat::identities;

namespace {

const ids::EvalResult& find_result(const std::vector<ids::EvalResult>& rs,
                                   const std::string& id) {
  for (const ids::EvalResult& r : rs) {
    if (r.id == id) return r;
  }
  REQUIRE_MESSAGE(false, "no result for ", id);
  return rs.front();
}

bool has_counterexample(const ids::EvalResult& r, long n, long k,
                        const std::string& lhs, const std::string& rhs) {
  for (const ids::Counterexample& c : r.counterexamples) {
    if (c.n == n && c.k == k && c.lhs == lhs && c.rhs == rhs) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("registry catalogue") {
  ids::Formulas f = ids::Formulas::standard();
  std::vector<ids::IdentityRecord> registry = ids::build_registry(f);
  const std::vector<std::string> want{
      "I-bell-fine.as_printed",   "I-bell-fine.corrected",
      "I-bell-catalan.as_printed", "I-bell-catalan.corrected",
      "I-vanish",                 "I-vertical",
      "I-card-ballot",            "I-binom",
      "I-card-ternary",           "I-card-ternary-sum",
      "I-fine-alt",               "I-central-alt",
      "I-g2-alt.as_printed",      "I-g2-alt.corrected",
      "I-catalan-alt",            "I-exotic-8.as_printed",
      "I-exotic-8.corrected",     "I-exotic-10",
      "P-segner",                 "P-cik",
      "P-rr1",                    "P-mirror.rec",
      "P-mirror.first",           "P-mirror.diag",
      "P-mirror.subdiag",         "P-f3",
      "P-euler",                  "P-g1",
      "P-g2-dfact",               "P-g2-alt-form",
      "P-g2-from-g3",             "P-g2-rising"};
  REQUIRE(registry.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    CHECK(registry[i].id == want[i]);
    CHECK_FALSE(registry[i].statement.empty());
  }
}

TEST_CASE("full run matches every expectation") {
  std::vector<ids::IdentityRecord> registry =
      ids::build_registry(ids::Formulas::standard());
  std::vector<ids::EvalResult> results = ids::run_all(registry, 12);
  REQUIRE(results.size() == registry.size());
  for (const ids::EvalResult& r : results) {
    INFO("record ", r.id);
    CHECK(r.as_expected());
  }
  CHECK(ids::all_matched(results));

  SUBCASE("expected failures fail at the documented cells") {
    const ids::EvalResult& bell_fine =
        find_result(results, "I-bell-fine.as_printed");
    CHECK_FALSE(bell_fine.matched);
    REQUIRE_FALSE(bell_fine.counterexamples.empty());
    CHECK(bell_fine.counterexamples[0].n == 2);
    CHECK(bell_fine.counterexamples[0].k == 1);
    CHECK(bell_fine.counterexamples[0].lhs == "2");
    CHECK(bell_fine.counterexamples[0].rhs == "0");

    const ids::EvalResult& bell_cat =
        find_result(results, "I-bell-catalan.as_printed");
    CHECK_FALSE(bell_cat.matched);
    REQUIRE_FALSE(bell_cat.counterexamples.empty());
    CHECK(bell_cat.counterexamples[0].n == 2);
    CHECK(bell_cat.counterexamples[0].k == 1);
    CHECK(bell_cat.counterexamples[0].lhs == "2");
    CHECK(bell_cat.counterexamples[0].rhs == "6");

    const ids::EvalResult& g2alt = find_result(results, "I-g2-alt.as_printed");
    CHECK_FALSE(g2alt.matched);
    REQUIRE_FALSE(g2alt.counterexamples.empty());
    CHECK(g2alt.counterexamples[0].n == 2);
    CHECK(g2alt.counterexamples[0].k == 1);
    CHECK(g2alt.counterexamples[0].lhs == "1");
    CHECK(g2alt.counterexamples[0].rhs == "2");
    CHECK(has_counterexample(g2alt, 3, 1, "4", "12"));

    const ids::EvalResult& exotic = find_result(results, "I-exotic-8.as_printed");
    CHECK_FALSE(exotic.matched);
    CHECK(has_counterexample(exotic, 3, 1, "4", "0"));
    CHECK(has_counterexample(exotic, 4, 1, "30", "2"));
  }

  SUBCASE("every intended statement verifies") {
    for (const char* id :
         {"I-bell-fine.corrected", "I-bell-catalan.corrected", "I-vanish",
          "I-vertical", "I-card-ballot", "I-binom", "I-card-ternary",
          "I-card-ternary-sum", "I-fine-alt", "I-central-alt",
          "I-g2-alt.corrected", "I-catalan-alt", "I-exotic-8.corrected",
          "I-exotic-10"}) {
      const ids::EvalResult& r = find_result(results, id);
      INFO("record ", id);
      CHECK(r.matched);
      CHECK_FALSE(r.vacuous);
      CHECK(r.mismatches == 0);
    }
  }
}

TEST_CASE("domains clip and can be vacuous") {
  std::vector<ids::IdentityRecord> registry =
      ids::build_registry(ids::Formulas::standard());
  SUBCASE("a strict-subdiagonal record has no cells at order one") {
    ids::EvalResult r = ids::run_identity(registry, "P-cik", 1);
    CHECK(r.vacuous);
    CHECK(r.matched);
    CHECK(r.cells == 0);
    CHECK(r.as_expected());
  }
  SUBCASE("per-record caps hold even for large requests") {
    ids::EvalResult r = ids::run_identity(registry, "I-card-ternary", 50);
    CHECK(r.max_n_used == 7);
    CHECK(r.cells == 7 * 8 / 2);
    CHECK(r.matched);
  }
  SUBCASE("row-only records evaluate once per row") {
    ids::EvalResult r = ids::run_identity(registry, "I-fine-alt", 9);
    CHECK(r.cells == 9);
    CHECK(r.matched);
  }
}

TEST_CASE("lookup errors and family selection") {
  std::vector<ids::IdentityRecord> registry =
      ids::build_registry(ids::Formulas::standard());
  CHECK_THROWS_AS(ids::run_identity(registry, "I-nonsense", 5),
                  ids::unknown_identity);
  CHECK_THROWS_AS(ids::run_matching(registry, "Q", 5), ids::unknown_identity);

  std::vector<ids::EvalResult> fam = ids::run_matching(registry, "I-g2-alt", 6);
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].id == "I-g2-alt.as_printed");
  CHECK(fam[1].id == "I-g2-alt.corrected");

  std::vector<ids::EvalResult> mirror = ids::run_matching(registry, "P-mirror", 6);
  CHECK(mirror.size() == 4);

  std::vector<ids::EvalResult> exact =
      ids::run_matching(registry, "P-segner", 6);
  REQUIRE(exact.size() == 1);
  CHECK(exact[0].id == "P-segner");
}

TEST_CASE("counterexample harvesting is capped") {
  ids::IdentityRecord rec;
  rec.id = "always-wrong";
  rec.statement = "zero equals one everywhere";
  rec.in_domain = [](long n, long k) { return k >= 1 && k <= n; };
  rec.lhs = [](long, long) { return Int(0); };
  rec.rhs = [](long, long) { return Int(1); };
  ids::EvalResult r = ids::run_record(rec, 8);
  CHECK(r.cells == 36);
  CHECK(r.mismatches == 36);
  CHECK(static_cast<int>(r.counterexamples.size()) == ids::kMaxCounterexamples);
  CHECK_FALSE(r.matched);
  CHECK_FALSE(r.as_expected());
}

TEST_CASE("evaluation errors are reported, not propagated") {
  ids::IdentityRecord rec;
  rec.id = "throwing";
  rec.statement = "lhs throws on every cell";
  rec.in_domain = [](long n, long k) { return k >= 1 && k <= n; };
  rec.lhs = [](long, long) -> Int { throw std::runtime_error("boom"); };
  rec.rhs = [](long, long) { return Int(1); };
  ids::EvalResult r = ids::run_record(rec, 2);
  CHECK(r.cells == 3);
  CHECK(r.mismatches == 3);
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK(r.counterexamples[0].lhs == "<error: boom>");
  CHECK(r.counterexamples[0].rhs == "1");
}

TEST_CASE("each replaceable formula is load bearing") {
  ids::Formulas base = ids::Formulas::standard();
  std::vector<ids::EvalResult> clean =
      ids::run_all(ids::build_registry(base), 6);
  REQUIRE(ids::all_matched(clean));

  for (int i = 0; i < ids::kFormulaCount; ++i) {
    ids::Formulas broken = ids::perturbed(base, i);
    std::vector<ids::EvalResult> results =
        ids::run_all(ids::build_registry(broken), 6);
    INFO("perturbed member ", ids::formula_name(i));
    CHECK_FALSE(ids::all_matched(results));
  }
}
