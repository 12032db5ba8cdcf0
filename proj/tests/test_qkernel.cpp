#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "qv/qbinomial.hpp"

using namespace qv;

namespace {

// Independent Pascal-triangle oracle for plain binomials.
Integer pascal(long n, long k) {
    if (k < 0 || k > n) return Integer(0);
    static std::map<std::pair<long, long>, Integer> memo;
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
    Integer v = (k == 0 || k == n) ? Integer(1) : pascal(n - 1, k - 1) + pascal(n - 1, k);
    memo[{n, k}] = v;
    return v;
}

QPoly make_poly(std::initializer_list<std::pair<long, long>> terms) {
    QPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
    return p;
}

}  // namespace

TEST_CASE("gauss binomial base cases") {
    for (long n = 0; n <= 6; ++n) CHECK(gauss_binomial(n, 0) == QPoly::constant(Rational(1)));
    CHECK(gauss_binomial(2, 3).is_zero());   // out of range is the zero polynomial
    CHECK(gauss_binomial(4, -1).is_zero());
    CHECK_THROWS_AS(gauss_binomial(-1, 0), Error);
}

TEST_CASE("gauss binomial (4,2)") {
    // product formula (1-q^3)(1-q^4) / ((1-q)(1-q^2)) expanded
    CHECK(gauss_binomial(4, 2) == make_poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
}

TEST_CASE("gauss binomial symmetry and degree") {
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(gauss_binomial(n, k) == gauss_binomial(n, n - k));
            CHECK(gauss_binomial(n, k).degree() == k * (n - k));
            CHECK(gauss_binomial(n, k).valuation() == 0);
        }
}

TEST_CASE("gauss binomial specializes to the binomial coefficient at q = 1") {
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(laurent_eval(gauss_binomial(n, k), Rational(1)) == Rational(binomial(n, k)));
}

TEST_CASE("both Pascal recurrences agree") {
    // the table uses [n,k] = [n-1,k] + q^{n-k} [n-1,k-1]; check the
    // q^k-weighted twin [n,k] = q^k [n-1,k] + [n-1,k-1]
    for (long n = 1; n <= 10; ++n)
        for (long k = 1; k < n; ++k) {
            const QPoly lhs = gauss_binomial(n, k);
            const QPoly rhs = gauss_binomial(n - 1, k).shifted(k) + gauss_binomial(n - 1, k - 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("gauss binomial coefficients are nonnegative and unimodal up to n = 12") {
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) {
            const QPoly p = gauss_binomial(n, k);
            std::vector<Rational> coeffs;
            for (long e = 0; e <= k * (n - k); ++e) coeffs.push_back(p.coeff(e));
            bool rising = true;
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                CHECK(coeffs[i] > Rational(0));  // Gaussian binomials have no internal zeros
                if (i == 0) continue;
                if (rising && coeffs[i] < coeffs[i - 1]) rising = false;
                if (!rising) CHECK(coeffs[i] <= coeffs[i - 1]);
            }
        }
}

TEST_CASE("q-pochhammer powers") {
    CHECK(q_pochhammer_power(3, 0) == QPoly::constant(Rational(1)));  // empty product
    CHECK(q_pochhammer_power(1, 2) == make_poly({{0, 1}, {1, -1}, {2, -1}, {3, 1}}));
    CHECK(q_pochhammer_power(0, 1).is_zero());  // first factor 1 - q^0
    CHECK(q_pochhammer_power(-2, 2) == make_poly({{0, 1}, {-1, -1}, {-2, -1}, {-3, 1}}));
}

TEST_CASE("q-pochhammer vanishes iff zero lies in the exponent window") {
    for (long alpha = -4; alpha <= 4; ++alpha)
        for (long n = 0; n <= 5; ++n) {
            const bool window_has_zero = n >= 1 && alpha <= 0 && 0 <= alpha + n - 1;
            CHECK(q_pochhammer_power(alpha, n).is_zero() == window_has_zero);
        }
}

TEST_CASE("integer binomial") {
    CHECK(binomial(5, 2) == 10);
    for (long n = 0; n <= 8; ++n) CHECK(binomial(n, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK_THROWS_AS(binomial(-2, 1), Error);
    for (long n = 0; n <= 12; ++n)
        for (long k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == pascal(n, k));
}
