#pragma once

// Transform machinery: Catalan and Fine generators, the invert transform
// G = F/(1-F) on ordinary generating functions, k-fold convolution triangles,
// Pascal-matrix powers, and truncated series powers.
//
// Triangles built from a sequence with f(1) = 1 satisfy t(n,1) = f(n) and
// t(n,n) = 1, and row sums reproduce the invert transform of f.

#include <vector>

#include "finecat/sequence.hpp"
#include "finecat/triangle.hpp"

namespace finecat::core {

// C_0 = 1, C_n = C_{n-1} * 2(2n-1)/(n+1); the division is exact at every step.
Int catalan(long n);

// 1-indexed prefix whose term n is C_{n-1}.
Sequence catalan_shifted(int N);

// Counts of Dyck paths with no hill, recovered by inverting the invert
// transform against the shifted Catalan sequence:
//   F_n = C_{n-1} - sum_{i=1}^{n-1} F_i * C_{n-i-1}.
// Starts 1, 0, 1, 2, 6, 18, 57, ...
Sequence fine_sequence(int N);

// g(n) = f(n) + sum_{i=1}^{n-1} f(i) g(n-i); requires f(1) = 1.
Sequence invert_transform(const Sequence& f, int N);

// The m-fold invert transform of the Fine sequence, m = 0..4:
// f_0 = Fine, f_1(n) = C_{n-1}, f_2(n) = C_n, f_3(n) = C(2n-1, n).
Sequence tower_sequence(int m, int N);

// t(n,k) = sum over compositions i_1+...+i_k = n of f(i_1)...f(i_k),
// computed by t(n,1) = f(n), t(n,k) = sum_{i=1}^{n-k+1} f(i) t(n-i, k-1).
// Requires f(1) = 1.
Triangle convolution_triangle(const Sequence& f, int N);

// Power of the unit lower-triangular Pascal matrix:
// entry(i,j) = p^(i-j) * C(i-1, j-1) for j <= i. p = 0 gives the identity
// (0^0 = 1 on the diagonal), and exponents add under multiplication.
struct PascalPower {
  int order = 0;
  long exponent = 0;
  std::vector<std::vector<Int>> rows;  // rows[i-1][j-1] for j <= i

  const Int& entry(int i, int j) const;  // 0 above the diagonal
  Triangle as_triangle() const;
};

PascalPower pascal_power(int N, long p);

// Product of lower-triangular arrays of equal order.
Triangle triangle_product(const Triangle& a, const Triangle& b);

// T * L^p where L is the unit Pascal matrix of T's order.
Triangle triangle_times_pascal_power(const Triangle& t, long p);

// Dense polynomial truncated at a degree bound; c[i] is the coefficient of x^i.
struct SeriesPoly {
  std::vector<Int> c;

  int degree_bound() const { return static_cast<int>(c.size()) - 1; }
};

// x*f(1) + x^2*f(2) + ... + x^N*f(N) as a SeriesPoly.
SeriesPoly series_from_sequence(const Sequence& f, int N);

SeriesPoly truncated_mul(const SeriesPoly& a, const SeriesPoly& b, int N);

// [x^n] (sum_{i>=1} f(i) x^i)^k for 1 <= k <= n <= f.length().
Int series_power_coefficient(const Sequence& f, int k, int n);

}  // namespace finecat::core
