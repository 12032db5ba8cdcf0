#pragma once

#include <vector>

#include "qv/record.hpp"

namespace qv {

enum class ZeilVariant { direct, inverted };
enum class NrstVariant { q, q_inverse };

/// The single-index alternating q-sum
///   sum_k (-1)^k q^{binom(k,2)} [n-k, k]
/// against its closed form: 0 when n = 2 (mod 3), else
/// (-1)^{floor(n/3)} q^{n(n-1)/6}. The inverted variant is the q -> 1/q image
/// with per-term exponent k^2 + binom(n-k, 2) and sign (-1)^{n-k}.
VerificationRecord verify_zeil(int n, ZeilVariant variant);

/// Finite pentagonal-number sums: both variants telescope to the constant 1.
VerificationRecord verify_finite_euler(int L, int variant);

/// Truncated limit form of the pentagonal number theorem: the pentagonal
/// exponent sum up to degree D equals prod_{i=1..D}(1 - q^i) mod q^{D+1}.
VerificationRecord verify_pentagonal_limit(int degree_bound);

/// The two q-Chu-Vandermonde variations: the s-sum against
/// q^{(n-r)(n-t)} [r, n-t] (q variant) or [r, n-t] (q-inverse variant).
VerificationRecord verify_nrst(int n, int r, int t, NrstVariant variant);

/// The q-Chu-Vandermonde formula at monomial parameters a = q^alpha,
/// c = q^gamma, verified with all Pochhammer denominators cleared; restricted
/// to gamma <= -N so no denominator factor vanishes.
VerificationRecord verify_chu_vandermonde(int alpha, int gamma, int N);

/// The 3m-index weighted cyclic sum against the divided-difference closed form
///   h_n(a, b) q^{m binom(n,2)},  a = x_1 x_4 ... x_{3m-2}, b = x_2 x_5 ... x_{3m-1},
/// with a = b handled by the removable-singularity form (n+1) a^n.
/// Requires x_{3k} = -1 for all k.
VerificationRecord verify_multi_3m(int m, int n, const std::vector<Rational>& x);

/// The m-index all-(-1) cyclic q-sum for m not divisible by 3.
VerificationRecord verify_multi_zeil(int m, int n);

/// The shifted j-indexed sums with cross-term exponents; variant 0 has RHS
/// {1, 3L+1}, variant 1 has RHS {(-1)^{floor(m^2/3)}, (-1)^{m/3}(3L+2)}.
VerificationRecord verify_3ell(int L, int m, int variant);

/// The z-refined theorems: the z^{r_1 - r_s}-weighted sum is z-independent and
/// equals the multi-zeil closed form; checked over max(2n+2, 5) z samples.
VerificationRecord verify_z_refined(int m, int n, int s);

/// The 4-to-1 reduction used in the induction: the open 4-fold sum with fixed
/// boundary index r5 equals (-1)^n q^{binom(n,2)} times the single sum.
VerificationRecord verify_four_to_one_reduction(int n, int r5);

}  // namespace qv
