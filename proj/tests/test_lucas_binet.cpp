#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qv/cyclic_sum.hpp"
#include "qv/lucas_binet.hpp"
#include "qv/qbinomial.hpp"

using namespace qv;

namespace {

QPoly make_poly(std::initializer_list<std::pair<long, long>> terms) {
    QPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
    return p;
}

// test-side direct evaluation of the Lucas left side
Rational lucas_sum(int n, int variant, const Rational& x, const Rational& y) {
    Rational acc(0);
    for (int k = 0; 2 * k <= n; ++k) {
        Rational c(binomial(n - k, k));
        if (variant == 2) c *= Rational(n, n - k);
        acc += c * (x + y).pow(n - 2 * k) * (-(x * y)).pow(k);
    }
    return acc;
}

}  // namespace

TEST_CASE("lucas on the default grids") {
    for (int n = 1; n <= 8; ++n)
        for (int variant : {1, 2}) CHECK(verify_lucas(n, variant).pass);
}

TEST_CASE("lucas spot values") {
    // n = 2, variant 1: x^2 + xy + y^2
    const Rational x(3), y(5);
    CHECK(lucas_sum(2, 1, x, y) == x * x + x * y + y * y);
    CHECK(lucas_sum(2, 2, x, y) == x * x + y * y);
    // diagonal limit for variant 1
    CHECK(lucas_sum(4, 1, x, x) == Rational(5) * x.pow(4));
}

TEST_CASE("lucas grid validation") {
    BivariateGrid tiny;
    tiny.x_points = {Rational(0), Rational(1)};
    tiny.y_points = {Rational(2), Rational(3)};
    CHECK_THROWS_AS(verify_lucas(3, 1, tiny), GridTooSmall);

    BivariateGrid overlapping;
    for (int i = 0; i <= 4; ++i) {
        overlapping.x_points.push_back(Rational(i));
        overlapping.y_points.push_back(Rational(i));
    }
    CHECK_THROWS_AS(verify_lucas(3, 1, overlapping), DegenerateParameters);
    CHECK(verify_lucas(3, 2, overlapping).pass);  // variant 2 has no singularity

    BivariateGrid duplicated;
    duplicated.x_points = {Rational(0), Rational(0), Rational(1), Rational(2)};
    duplicated.y_points = {Rational(3), Rational(4), Rational(5), Rational(6)};
    CHECK_THROWS_AS(verify_lucas(3, 1, duplicated), Error);
}

TEST_CASE("rational lucas cleared polynomials") {
    const auto line2 = verify_rational_lucas(2, LucasTopology::line);
    CHECK(line2.pass);
    CHECK(std::get<QPoly>(line2.lhs) == make_poly({{0, 1}, {1, 1}, {2, 1}}));

    const auto cycle1 = verify_rational_lucas(1, LucasTopology::cycle);
    CHECK(cycle1.pass);
    CHECK(std::get<QPoly>(cycle1.rhs) == make_poly({{0, 1}, {1, 1}}));

    const auto cycle3 = verify_rational_lucas(3, LucasTopology::cycle);
    CHECK(cycle3.pass);
    CHECK(std::get<QPoly>(cycle3.lhs) == make_poly({{0, 1}, {3, 1}}));  // 1 + x^3

    for (int n = 1; n <= 12; ++n) {
        CHECK(verify_rational_lucas(n, LucasTopology::line).pass);
        CHECK(verify_rational_lucas(n, LucasTopology::cycle).pass);
    }
}

TEST_CASE("binet integer-m forms") {
    const auto v1 = verify_binet_integer_m(2, 1);
    CHECK(v1.pass);
    CHECK(std::get<QPoly>(v1.lhs) == make_poly({{0, 1}, {1, 1}, {2, 1}}));  // m^2 + m + 1

    const auto v2 = verify_binet_integer_m(2, 2);
    CHECK(v2.pass);
    CHECK(std::get<QPoly>(v2.lhs) == make_poly({{0, 1}, {1, 2}, {2, 2}}));  // 2m^2 + 2m + 1

    const auto n1 = verify_binet_integer_m(1, 1);
    CHECK(n1.pass);
    CHECK(std::get<QPoly>(n1.lhs) == QPoly::constant(Rational(1)));

    for (int n = 1; n <= 12; ++n)
        for (int variant : {1, 2}) CHECK(verify_binet_integer_m(n, variant).pass);
}

TEST_CASE("lucas variant 1 at (m+1, -m) matches the binet polynomial") {
    for (int n = 1; n <= 8; ++n) {
        const QPoly binet = std::get<QPoly>(verify_binet_integer_m(n, 1).lhs);
        for (long m0 = 1; m0 <= 5; ++m0) {
            const Rational expected = lucas_sum(n, 1, Rational(m0 + 1), Rational(-m0));
            CHECK(binet.eval(Rational(m0)) == expected);
        }
    }
}

TEST_CASE("omega case tables") {
    CHECK(omega_sum_first(2) == 0);
    CHECK(omega_sum_second(6) == Rational(2));
    CHECK(omega_sum_second(3) == Rational(-2));
    for (int n = 1; n <= 24; ++n) CHECK(verify_omega_cases(n).pass);
    // 6-periodicity of both sums
    for (int n = 1; n <= 18; ++n) {
        CHECK(omega_sum_first(n) == omega_sum_first(n + 6));
        CHECK(omega_sum_second(n) == omega_sum_second(n + 6));
    }
}

TEST_CASE("sqrt5 identity") {
    const long expected[3][3] = {{1, 2, 3}, {3, 8, 21}, {4, 17, 72}};
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            const auto rec = verify_sqrt5(m, n);
            CHECK(rec.pass);
            CHECK(std::get<Rational>(rec.lhs) == Rational(expected[m - 1][n - 1]));
            CHECK(std::get<QuadExt>(rec.rhs).is_rational());
        }
}

TEST_CASE("sqrt5 left side at n = 1 counts cycle-independent sets") {
    // at n = 1 every binomial factor is 1, so the sum counts the support
    for (int m = 1; m <= 8; ++m) {
        const auto rec = verify_sqrt5(m, 1);
        CHECK(rec.pass);
        CHECK(std::get<Rational>(rec.lhs) ==
              Rational(static_cast<long>(enumerate_support(1, m).size())));
    }
}
