#pragma once

// Closed-form evaluators for the colored-hill triangles and their boundary
// sequences. Each function computes one published formula directly, with no
// recourse to the recurrence layer, so the two can be played against each
// other. All divisions are checked exact divisions.

#include <vector>

#include "finecat/ints.hpp"

namespace finecat::closedforms {

// (2m)!! = 2*4*...*2m and (2m-1)!! = 1*3*...*(2m-1), with (-1)!! = 0!! = 1.
Int double_factorial(long m);

// (k/n) * sum_{i=k}^{n} (-2)^(i-k) C(i,k) C(2n, n-i), for 1 <= k <= n.
Int g1_explicit(long n, long k);

// (2^(n-k)/n!) * sum_{j : 2j-1 <= k} (-1)^(j-1) C(k,2j-1) (2j-1)!! (2n-2j-1)!!
// for 1 <= k <= n.
Int g2_dfact(long n, long k);

// 1 on the diagonal, else (k/(n-k)) C(2n-k-1, n), for 1 <= k <= n.
Int g2_closed(long n, long k);

// k * (n+1)(n+2)...(2n-k-1) / (n-k)!, defined only for 1 <= k < n.
Int g2_rising(long n, long k);

// (k/n) * sum_{i=k}^{n} (-1)^(i-k) C(i,k) C(2n, n-i), for 1 <= k <= n.
Int g2_alternating(long n, long k);

// sum_{i=0}^{k-1} C(k,i) g3(n-k, k-i), terms outside the triangle dropped,
// for 1 <= k < n.
Int g2_from_g3(long n, long k);

// Mirror of the g2 triangle: column k holds g2(n, n-k+1), for 1 <= k <= n.
Int mirror_a(long n, long k);

// (k/n) C(2n, n-k), for 1 <= k <= n.
Int g3_closed(long n, long k);

// (2^(n-k)/n!) * sum_{i=0}^{k} (-1)^(k-i) C(k,i) i(i+2)(i+4)...(i+2n-2),
// for 1 <= k <= n.
Int g4_explicit(long n, long k);

// C(2n-1, n), for n >= 1.
Int f3_closed(long n);

// 2^(n-1) (2n-3)!! / n!, for n >= 1; equals the (n-1)st Catalan number.
Int euler_catalan(long n);

// Partial Bell polynomial B(n,k) at arguments x1, x2, ... (x[0] holds x1),
// via B(n,k) = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B(n-i, k-1) from B(0,0) = 1.
// Needs at least n-k+1 arguments when 1 <= k <= n.
Int partial_bell(long n, long k, const std::vector<Int>& x);

// Row n of the same table: result[k] = B(n,k) for 0 <= k <= n. Needs at
// least n arguments.
std::vector<Int> partial_bell_row(long n, const std::vector<Int>& x);

}  // namespace finecat::closedforms
