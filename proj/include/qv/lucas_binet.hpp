#pragma once

#include <vector>

#include "qv/record.hpp"

namespace qv {

/// Evaluation lattice for proving bivariate polynomial identities by grid
/// fullness: a nonzero polynomial of degree <= (d1, d2) cannot vanish on a
/// (d1+1) x (d2+1) grid of distinct points.
struct BivariateGrid {
    std::vector<Rational> x_points;
    std::vector<Rational> y_points;

    /// Disjoint integer grids x = 0..n, y = n+1..2n+1, so variant 1 never
    /// meets its x = y singularity off the dedicated diagonal check.
    static BivariateGrid for_degree(int n);
};

/// Lucas' two formulas, proven exactly at grid scale. Variant 1 compares
/// against the divided difference (x^{n+1} - y^{n+1})/(x - y) off the diagonal
/// and against the limit (n+1) x^n on it; variant 2 against x^n + y^n.
VerificationRecord verify_lucas(int n, int variant, const BivariateGrid& grid);
VerificationRecord verify_lucas(int n, int variant);

enum class LucasTopology { line, cycle };

/// The rational-function forms, cleared of denominators: both sides times
/// (1+x)^n give Sum_k C(n-k,k)(-x)^k (1+x)^{n-2k} against Sum_{i<=n} x^i
/// (line) or 1 + x^n (cycle), compared as exact univariate polynomials.
VerificationRecord verify_rational_lucas(int n, LucasTopology variant);

/// The integer-m Binet forms as polynomial identities in a formal m.
/// Variant 1 divides (m+1)^{n+1} - (-m)^{n+1} exactly by 2m+1 (the
/// divisibility is part of the claim; a nonzero remainder throws); variant 2
/// compares with (m+1)^n + (-m)^n.
VerificationRecord verify_binet_integer_m(int n, int variant);

/// The omega = (-1 +- sqrt(-3))/2 evaluations: both alternating binomial sums
/// as integers, both closed forms computed in Q(sqrt(-3)) for both sign
/// choices of omega, checked to be rational and to match the 6-periodic case
/// tables.
VerificationRecord verify_omega_cases(int n);

/// The sqrt(5) identity: the plain cyclic binomial sum as an integer versus
/// (2^{m(n+1)} - (sqrt5-3)^{m(n+1)}) / ((2^m - (sqrt5-3)^m)(sqrt5-1)^{mn})
/// computed entirely in Q(sqrt 5); the quotient must have zero irrational part.
VerificationRecord verify_sqrt5(int m, int n);

/// The two omega-sum values for direct table use in tests.
long omega_sum_first(int n);
Rational omega_sum_second(int n);

}  // namespace qv
