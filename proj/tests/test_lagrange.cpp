#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qv/cyclic_sum.hpp"
#include "qv/lagrange.hpp"
#include "qv/sampler.hpp"

#include "test_util.hpp"

using namespace qv;

namespace {

TruncSeries one_plus_var(int nv, int bound, int i) {
    return TruncSeries::constant(nv, bound, Rational(1)) + TruncSeries::variable(nv, bound, i);
}

FunctionalSystem catalan_system(int bound) {
    FunctionalSystem sys;
    sys.m = 1;
    sys.bound = bound;
    sys.phi = {one_plus_var(1, bound, 0) * one_plus_var(1, bound, 0)};  // (1+x)^2
    sys.f = TruncSeries::variable(1, bound, 0);
    return sys;
}

}  // namespace

TEST_CASE("fixed-point solve: Catalan numbers") {
    const auto x = solve_functional_system(catalan_system(4));
    REQUIRE(x.size() == 1);
    CHECK(x[0].coefficient({0}) == Rational(0));
    CHECK(x[0].coefficient({1}) == Rational(1));
    CHECK(x[0].coefficient({2}) == Rational(2));
    CHECK(x[0].coefficient({3}) == Rational(5));
    CHECK(x[0].coefficient({4}) == Rational(14));
}

TEST_CASE("fixed-point solve: phi = 1 gives x = u") {
    FunctionalSystem sys;
    sys.m = 1;
    sys.bound = 5;
    sys.phi = {TruncSeries::constant(1, 5, Rational(1))};
    sys.f = TruncSeries::variable(1, 5, 0);
    const auto x = solve_functional_system(sys);
    CHECK(x[0] == TruncSeries::variable(1, 5, 0));
}

TEST_CASE("fixed-point solve: two-variable cyclic system by hand") {
    const auto sys = cyclic_phi_system(2, 1, 2);
    const auto x = solve_functional_system(sys);
    // x_1 = u_1 + u_1^2 + u_1 u_2 + O(3), symmetric in x_2
    CHECK(x[0].coefficient({1, 0}) == Rational(1));
    CHECK(x[0].coefficient({2, 0}) == Rational(1));
    CHECK(x[0].coefficient({1, 1}) == Rational(1));
    CHECK(x[0].coefficient({0, 1}) == Rational(0));
    CHECK(x[1].coefficient({0, 1}) == Rational(1));
    CHECK(x[1].coefficient({0, 2}) == Rational(1));
    CHECK(x[1].coefficient({1, 1}) == Rational(1));
}

TEST_CASE("solutions satisfy the defining equations") {
    for (int m : {1, 2}) {
        const auto sys = cyclic_phi_system(m, 2, 4);
        const auto x = solve_functional_system(sys);
        for (int i = 0; i < m; ++i) {
            const TruncSeries residual =
                x[i] - TruncSeries::variable(m, 4, i) * sys.phi[i].compose(x);
            CHECK(residual.is_zero());
        }
    }
    // a random polynomial system too
    qvtest::Rng rng(41);
    FunctionalSystem sys;
    sys.m = 2;
    sys.bound = 4;
    for (int i = 0; i < 2; ++i) {
        TruncSeries p = rng.series(2, 4, 5);
        p.add_term({0, 0}, Rational(1) - p.constant_term());  // unit constant term
        sys.phi.push_back(p);
    }
    sys.f = rng.series(2, 4, 5);
    const auto x = solve_functional_system(sys);
    for (int i = 0; i < 2; ++i) {
        const TruncSeries residual =
            x[i] - TruncSeries::variable(2, 4, i) * sys.phi[i].compose(x);
        CHECK(residual.is_zero());
    }
}

TEST_CASE("delta for the cyclic phi family matches the closed form") {
    for (int m : {1, 2, 3}) {
        for (int D : {3, 5}) {
            const auto sys = cyclic_phi_system(m, 1, D);
            TruncSeries closed = TruncSeries::constant(m, D, Rational(1));
            std::vector<int> ones(m, 1);
            closed -= TruncSeries::monomial(m, D, ones, Rational(1));  // 1 - x_1...x_m
            for (int k = 0; k < m; ++k) closed *= one_plus_var(m, D, k).inverse();
            CHECK(compute_delta(sys) == closed);
        }
    }
}

TEST_CASE("delta of a constant system is 1") {
    FunctionalSystem sys;
    sys.m = 2;
    sys.bound = 3;
    sys.phi.assign(2, TruncSeries::constant(2, 3, Rational(7)));
    sys.f = TruncSeries::constant(2, 3, Rational(1));
    CHECK(compute_delta(sys) == TruncSeries::constant(2, 3, Rational(1)));
}

TEST_CASE("lagrange coefficient extraction") {
    auto sys = catalan_system(4);

    // r = 0 pulls out f(0) (here f = x, so 0)
    CHECK(lagrange_coefficient(sys, {0}) == Rational(0));
    // [u^3] x(u) = 5
    CHECK(lagrange_coefficient(sys, {3}) == Rational(5));

    // constant f = 1: [x^3](1+x)^6 (1-x)/(1+x) = C(5,3) - C(5,2) = 0
    sys.f = TruncSeries::constant(1, 4, Rational(1));
    CHECK(lagrange_coefficient(sys, {0}) == Rational(1));
    CHECK(lagrange_coefficient(sys, {3}) == Rational(0));

    CHECK_THROWS_AS(lagrange_coefficient(sys, {5}), BoundExceeded);
}

TEST_CASE("solve with phi = 1 + x: geometric-series coefficients") {
    FunctionalSystem sys;
    sys.m = 1;
    sys.bound = 5;
    sys.phi = {one_plus_var(1, 5, 0)};
    sys.f = TruncSeries::variable(1, 5, 0);
    const auto x = solve_functional_system(sys);
    // x = u(1+x) solves to x(u) = u/(1-u): all coefficients 1
    for (int d = 1; d <= 5; ++d) CHECK(x[0].coefficient({d}) == Rational(1));
    CHECK(verify_lagrange(sys, "geometric").pass);
}

TEST_CASE("the inversion formula holds") {
    for (int m : {1, 2}) CHECK(verify_lagrange(cyclic_phi_system(m, 2, 4), "cyclic").pass);

    FunctionalSystem constant_sys;
    constant_sys.m = 2;
    constant_sys.bound = 4;
    constant_sys.phi.assign(2, TruncSeries::constant(2, 4, Rational(3)));
    constant_sys.f = TruncSeries::variable(2, 4, 0) * TruncSeries::variable(2, 4, 1);
    CHECK(verify_lagrange(constant_sys, "constant").pass);

    // f = 1: only the r = 0 coefficient survives on both sides
    FunctionalSystem unit = catalan_system(4);
    unit.f = TruncSeries::constant(1, 4, Rational(1));
    CHECK(verify_lagrange(unit, "unit").pass);

    // seeded random polynomial system
    qvtest::Rng rng(43);
    FunctionalSystem sys;
    sys.m = 2;
    sys.bound = 4;
    for (int i = 0; i < 2; ++i) {
        TruncSeries p = rng.series(2, 4, 6);
        p.add_term({0, 0}, Rational(2) - p.constant_term());  // nonzero constant term
        sys.phi.push_back(p);
    }
    sys.f = rng.series(2, 4, 6);
    CHECK(verify_lagrange(sys, "random").pass);
}

namespace {

// generalized binomial coefficient: integer upper index of either sign
Rational gen_binomial(long a, long k) {
    if (k < 0) return Rational(0);
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= Rational(a - i, i + 1);
    return r;
}

}  // namespace

TEST_CASE("coefficient extraction steps of the main proof") {
    // first display:
    //   [x^r] prod_k (1+x_k)^{-(n+1-r_k-r_{k+1})} = prod_k (-1)^{r_k} C(n-r_k, r_{k+1})
    // (with the generalized binomial once r leaves the support)
    const int n = 2, m = 2, D = 8;
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 3; ++r2) {
            TruncSeries prod = TruncSeries::constant(m, D, Rational(1));
            prod *= one_plus_var(m, D, 0).pow(-(n + 1 - r1 - r2));
            prod *= one_plus_var(m, D, 1).pow(-(n + 1 - r2 - r1));
            const Rational got = prod.coefficient({r1, r2});
            Rational expect = gen_binomial(n - r1, r2) * gen_binomial(n - r2, r1);
            if ((r1 + r2) % 2) expect = -expect;
            CHECK(got == expect);
            // in range the generalized and ordinary binomials agree
            if (r1 <= n && r2 <= n) {
                Rational plain = Rational(binomial(n - r1, r2)) * Rational(binomial(n - r2, r1));
                if ((r1 + r2) % 2) plain = -plain;
                CHECK(got == plain);
            }
        }

    // second display: the x^{n+1}-weighted product contributes only on the
    //   all-indices-large tail r_1, ..., r_m >= n+1
    const int n2 = 1, D2 = 8;
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 3; ++r2) {
            TruncSeries prod = TruncSeries::monomial(m, D2, {n2 + 1, n2 + 1}, Rational(1));
            prod *= one_plus_var(m, D2, 0).pow(-(n2 + 1 - r1 - r2));
            prod *= one_plus_var(m, D2, 1).pow(-(n2 + 1 - r2 - r1));
            const Rational got = prod.coefficient({r1, r2});
            Rational expect(0);
            if (r1 >= n2 + 1 && r2 >= n2 + 1) {
                expect = gen_binomial(n2 - r1, r2) * gen_binomial(n2 - r2, r1);
                if ((r1 + r2) % 2) expect = -expect;
            }
            CHECK(got == expect);
        }
}

TEST_CASE("dejavu at exact sample points") {
    // all-zero point
    CHECK(verify_dejavu(3, 2, {std::vector<Rational>(3, Rational(0))}).pass);

    // frozen oracle value 43/144 at m=2, n=2, x=(2,3)
    CHECK(eval_cyclic_rational_sum(2, 2, {Rational(2), Rational(3)}) == Rational(43, 144));
    CHECK(verify_dejavu(2, 2, {{Rational(2), Rational(3)}}).pass);

    // seeded grids with the product-one face included
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            CHECK(verify_dejavu(m, n, dejavu_sample_points(m, 99, 6)).pass);
}

TEST_CASE("dejavu m = 1 agrees with the line identity") {
    for (int n = 1; n <= 8; ++n) {
        for (const Rational& x : {Rational(2), Rational(1, 3), Rational(-3)}) {
            const Rational lhs = eval_cyclic_rational_sum(1, n, {x});
            const Rational rhs = (Rational(1) - x.pow(n + 1)) /
                                 ((Rational(1) - x) * (Rational(1) + x).pow(n));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("dejavu with equal coordinates reproduces the single-variable form") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const Rational& x : {Rational(2), Rational(3, 5)}) {
                const Rational lhs = eval_cyclic_rational_sum(m, n, std::vector<Rational>(m, x));
                const Rational rhs =
                    (Rational(1) - x.pow(static_cast<long>(m) * (n + 1))) /
                    ((Rational(1) - x.pow(m)) * (Rational(1) + x).pow(static_cast<long>(m) * n));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("dejavu sample builder puts points on the product-one face") {
    for (int m = 1; m <= 4; ++m) {
        const auto pts = dejavu_sample_points(m, 4242, 10);
        CHECK(pts.size() == 10);
        int on_face = 0;
        for (const auto& p : pts) {
            Rational t(1);
            for (const auto& c : p) t *= c;
            if (t == Rational(1)) ++on_face;
        }
        CHECK(on_face >= 2);
    }
}
