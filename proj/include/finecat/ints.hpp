#pragma once

// Exact integer layer. Every quantity in this library is an exact integer;
// divisions that the surrounding mathematics promises to be exact are checked,
// and a remainder is treated as a falsified formula rather than something to
// round away.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace finecat {

using Int = mpz_class;

// A division that had to be exact left a remainder.
class exact_division_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration was asked to exceed its hard size bound.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Out-of-range k (or negative n) gives 0, matching the summation conventions
// used by the identity statements.
inline Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// 0^0 == 1; the empty-product convention carries the Pascal-matrix diagonal
// and the one-color hill weights.
inline Int pow_int(const Int& base, long e) {
  if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline Int pow_int(long base, long e) { return pow_int(Int(base), e); }

inline Int exact_div(const Int& num, const Int& den) {
  if (den == 0) throw exact_division_error("exact_div: zero divisor");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw exact_division_error("exact_div: " + num.get_str() +
                               " is not divisible by " + den.get_str());
  Int r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

}  // namespace finecat
