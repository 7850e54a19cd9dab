#pragma once

// A declarative registry of equality checks over (n,k) ranges. Each record
// names one published identity or proposition-level invariant; records that
// transcribe a misprinted statement come in pairs, the transcription expected
// to fail and a derived correction expected to hold, so a fully green run
// still documents the misprint.
//
// Every formula a record evaluates is routed through a Formulas bundle of
// replaceable closures. Swapping one closure for a broken variant must flip
// at least one verdict; the self-test below run_all relies on this.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "finecat/ints.hpp"

namespace finecat::identities {

// The replaceable formula surface. standard() wires every member to the real
// implementation; tests substitute deliberately wrong members to prove the
// registry would catch them.
struct Formulas {
  std::function<Int(long)> catalan;
  std::function<Int(long)> fine;
  std::function<std::vector<Int>(long, const std::vector<Int>&)>
      partial_bell_row;
  std::function<Int(long, long)> g1_explicit;
  std::function<Int(long, long)> g2_dfact;
  std::function<Int(long, long)> g2_closed;
  std::function<Int(long, long)> g2_rising;
  std::function<Int(long, long)> g2_alternating;
  std::function<Int(long, long)> g2_from_g3;
  std::function<Int(long, long)> g3_closed;
  std::function<Int(long, long)> g4_explicit;
  std::function<Int(long, long)> mirror_a;
  std::function<Int(long)> f3_closed;
  std::function<Int(long)> euler_catalan;

  static Formulas standard();
};

inline constexpr int kFormulaCount = 14;

// Name of the i-th replaceable member, 0 <= i < kFormulaCount.
const char* formula_name(int i);

// Copy of base with the i-th member wrapped to return off-by-one values.
Formulas perturbed(const Formulas& base, int i);

enum class Expectation { kPass, kFailAsPrinted };

struct Counterexample {
  long n = 0;
  long k = 0;
  std::string lhs;  // decimal value, or "<error: ...>" if evaluation threw
  std::string rhs;
};

struct IdentityRecord {
  std::string id;
  std::string statement;
  Expectation expected = Expectation::kPass;
  int max_n = 1000000;  // per-record hard cap on n (exhaustive oracles)
  bool row_only = false;  // evaluate once per row, at (n, 0)
  std::function<bool(long, long)> in_domain;
  std::function<Int(long, long)> lhs;
  std::function<Int(long, long)> rhs;
};

inline constexpr int kMaxCounterexamples = 8;

struct EvalResult {
  std::string id;
  Expectation expected = Expectation::kPass;
  bool matched = false;  // no mismatching cell found (vacuously true if none)
  bool vacuous = false;  // no cell fell inside the domain
  int max_n_used = 0;
  long cells = 0;
  long mismatches = 0;
  std::vector<Counterexample> counterexamples;  // first kMaxCounterexamples
  double wall_ms = 0.0;

  bool as_expected() const {
    return matched == (expected == Expectation::kPass);
  }
};

struct unknown_identity : std::runtime_error {
  explicit unknown_identity(const std::string& id)
      : std::runtime_error("unknown identity: " + id) {}
};

// All records, in fixed registration order. The closures capture a copy of f.
std::vector<IdentityRecord> build_registry(const Formulas& f);

// Evaluates one record over its domain clipped to n <= min(max_n, record cap).
EvalResult run_record(const IdentityRecord& rec, int max_n);

// Exact id lookup; throws unknown_identity.
EvalResult run_identity(const std::vector<IdentityRecord>& registry,
                        const std::string& id, int max_n);

// Records whose id equals the token or starts with token + "."; throws
// unknown_identity when nothing matches.
std::vector<EvalResult> run_matching(const std::vector<IdentityRecord>& registry,
                                     const std::string& token, int max_n);

std::vector<EvalResult> run_all(const std::vector<IdentityRecord>& registry,
                                int max_n);

// True iff every result matched its record's expectation.
bool all_matched(const std::vector<EvalResult>& results);

}  // namespace finecat::identities
