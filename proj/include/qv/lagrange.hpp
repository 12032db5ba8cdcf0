#pragma once

#include <cstdint>
#include <vector>

#include "qv/record.hpp"
#include "qv/trunc_series.hpp"

namespace qv {

/// A functional system x_i = u_i phi_i(x), i = 1..m, with polynomial phi_i
/// (nonzero constant term) and a series f to expand, all truncated at a total
/// degree bound.
struct FunctionalSystem {
    int m = 1;
    std::vector<TruncSeries> phi;       // in x_1..x_m, phi_i(0) != 0
    TruncSeries f = TruncSeries(1, 0);  // in x_1..x_m
    int bound = 0;

    void validate() const;
};

/// The unique solution x_i(u) with zero constant term, by fixed-point
/// iteration x^{(t+1)}_i = u_i phi_i(x^{(t)}); each step fixes one more total
/// degree, so `bound` iterations suffice.
std::vector<TruncSeries> solve_functional_system(const FunctionalSystem& sys);

/// Delta_m = det(delta_ij - (x_j / phi_i) d phi_i / d x_j), as a series in x.
TruncSeries compute_delta(const FunctionalSystem& sys);

/// [x^r] { f phi_1^{r_1} ... phi_m^{r_m} Delta_m }; requires |r| <= bound.
Rational lagrange_coefficient(const FunctionalSystem& sys, const std::vector<int>& r);

/// The inversion formula itself: [u^r] f(x(u)) equals lagrange_coefficient for
/// every r with |r| <= bound.
VerificationRecord verify_lagrange(const FunctionalSystem& sys, const std::string& label);

/// The cyclic functional system: phi_i = (1+x_{i-1})(1+x_i)
/// with x_0 = x_m, and f the closed form
///   (sum_{i<=n} (x_1...x_m)^i) * prod_k (1+x_k)^{-n}
/// expanded exactly as a truncated series.
FunctionalSystem cyclic_phi_system(int m, int n, int bound);

/// The f above, available separately for tests.
TruncSeries dejavu_rhs_series(int m, int n, int bound);

/// The main rational identity at exact sample points: the cyclic rational sum
/// equals (1 - t^{n+1})/(1 - t) * prod (1+x_k)^{-n} with t = x_1...x_m, the
/// t = 1 face handled by the polynomial form sum_{i<=n} t^i.
VerificationRecord verify_dejavu(int m, int n, const std::vector<std::vector<Rational>>& points);

/// Seeded sample vectors for verify_dejavu: positive rationals away from the
/// poles, plus two points on the x_1...x_m = 1 face.
std::vector<std::vector<Rational>> dejavu_sample_points(int m, std::uint64_t seed,
                                                        std::size_t count);

}  // namespace qv
