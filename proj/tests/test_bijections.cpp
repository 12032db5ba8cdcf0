#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "qv/bijections.hpp"
#include "qv/qbinomial.hpp"

using namespace qv;

TEST_CASE("independent subsets on a line") {
    // n = 3: points {1, 2}
    const auto sets = enumerate_independent(3, Topology::line);
    const std::set<std::vector<int>> expect{{}, {1}, {2}};
    CHECK(std::set<std::vector<int>>(sets.begin(), sets.end()) == expect);

    // counts per size match C(n-k, k)
    for (int n = 2; n <= 9; ++n) {
        std::vector<long> by_size(n, 0);
        for (const auto& s : enumerate_independent(n, Topology::line)) ++by_size[s.size()];
        for (int k = 0; 2 * k <= n; ++k) CHECK(Integer(by_size[k]) == binomial(n - k, k));
    }
}

TEST_CASE("independent subsets on a cycle") {
    const auto n4 = enumerate_independent(4, Topology::cycle);
    std::set<std::vector<int>> pairs;
    for (const auto& s : n4)
        if (s.size() == 2) pairs.insert(s);
    CHECK(pairs == std::set<std::vector<int>>{{0, 2}, {1, 3}});

    const auto n2 = enumerate_independent(2, Topology::cycle);
    CHECK(std::set<std::vector<int>>(n2.begin(), n2.end()) ==
          std::set<std::vector<int>>{{}, {0}, {1}});  // {0,1} is doubly adjacent

    // counts per size match n/(n-k) C(n-k, k)
    for (int n = 2; n <= 9; ++n) {
        std::vector<long> by_size(n + 1, 0);
        for (const auto& s : enumerate_independent(n, Topology::cycle)) ++by_size[s.size()];
        for (int k = 0; 2 * k <= n; ++k)
            CHECK(Rational(by_size[k]) == Rational(n, n - k) * Rational(binomial(n - k, k)));
    }
}

TEST_CASE("chain decomposition") {
    CHECK(chain_decompose({1, 2, 4}).chains ==
          std::vector<std::vector<int>>{{1, 2}, {4}});
    CHECK(chain_decompose({}).chains.empty());
    CHECK(chain_decompose({1, 2, 3}).chains == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(chain_decompose({7, 3, 4, 1}).chains ==
          std::vector<std::vector<int>>{{1}, {3, 4}, {7}});
}

TEST_CASE("theta on the worked n = 2, m = 1 cases") {
    // A empty
    const ColoredSubset empty = theta_forward(ColoredTriple{}, 2, 1);
    CHECK(empty.X.empty());
    CHECK(empty.h.empty());

    // A = {1}, f(1) = 1, g(1) = 2 = m+1: B empty, X = {1}
    ColoredTriple a{{1}, {{1, 1}}, {{1, 2}}};
    const ColoredSubset ca = theta_forward(a, 2, 1);
    CHECK(ca.X == std::vector<int>{1});
    CHECK(ca.h.at(1) == 1);

    // A = {1}, g(1) = 1 in [m]: B = {2}, X = {1, 2}, chain length 2 at n
    ColoredTriple b{{1}, {{1, 1}}, {{1, 1}}};
    const ColoredSubset cb = theta_forward(b, 2, 1);
    CHECK(cb.X == std::vector<int>{1, 2});
    CHECK(cb.h.at(1) == 1);
    CHECK(cb.h.at(2) == 1);

    // round trips
    CHECK(theta_inverse(ca, 2, 1) == a);
    CHECK(theta_inverse(cb, 2, 1) == b);
}

TEST_CASE("theta_inverse odd-position rule") {
    // X = {1,2} (n = 2): single chain, A = {1}, g(1) = h(2)
    ColoredSubset c{{1, 2}, {{1, 1}, {2, 1}}};
    const ColoredTriple t = theta_inverse(c, 2, 1);
    CHECK(t.A == std::vector<int>{1});
    CHECK(t.g.at(1) == 1);

    // X = {1} (n = 2): A = {1}, successor absent, g = m+1
    ColoredSubset single{{1}, {{1, 1}}};
    CHECK(theta_inverse(single, 2, 1).g.at(1) == 2);

    // X = empty
    CHECK(theta_inverse(ColoredSubset{}, 3, 2).A.empty());
}

TEST_CASE("theta is a bijection S -> T exhaustively") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m <= 2; ++m) {
            const auto S = enumerate_S(n, m);
            const auto T = enumerate_T(n, m);
            std::set<ColoredSubset> image;
            for (const auto& s : S) {
                const ColoredSubset c = theta_forward(s, n, m);
                image.insert(c);
                CHECK(theta_inverse(c, n, m) == s);
            }
            CHECK(image.size() == S.size());
            CHECK(image == std::set<ColoredSubset>(T.begin(), T.end()));
            for (const auto& t : T) CHECK(theta_forward(theta_inverse(t, n, m), n, m) == t);
        }
}

TEST_CASE("|T| matches the alternating census") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m <= 3; ++m) {
            Integer formula(0);
            for (int i = 0; i <= n; ++i) {
                Integer term(1);
                for (int j = 0; j < i; ++j) term *= -m;
                for (int j = 0; j < n - i; ++j) term *= m + 1;
                formula += term;
            }
            CHECK(Integer(enumerate_T(n, m).size()) == formula);
        }
}

TEST_CASE("phi worked examples") {
    // wraparound: n = 2, m = 1, A = {1}, g(1) = 1: B = {0}, X = Z_2
    ColoredTriple t{{1}, {{1, 1}}, {{1, 1}}};
    const ColoredSubset c = phi_forward(t, 2, 1);
    CHECK(c.X == std::vector<int>{0, 1});
    CHECK(c.h.at(1) == 1);
    CHECK(c.h.at(0) == 1);

    // g maps to m+1: B empty
    ColoredTriple u{{0}, {{0, 1}}, {{0, 2}}};
    const ColoredSubset cu = phi_forward(u, 3, 1);
    CHECK(cu.X == std::vector<int>{0});

    CHECK(phi_forward(ColoredTriple{}, 4, 2).X.empty());
}

TEST_CASE("phi preimage counts") {
    // proper subsets have exactly one preimage
    ColoredSubset proper{{0, 1}, {{0, 1}, {1, 1}}};
    CHECK(phi_preimages(proper, 3, 1).size() == 1);

    // X = Z_3: none
    ColoredSubset full3{{0, 1, 2}, {{0, 1}, {1, 1}, {2, 1}}};
    CHECK(phi_preimages(full3, 3, 1).empty());

    // X = Z_2: the two alternating preimages
    ColoredSubset full2{{0, 1}, {{0, 1}, {1, 1}}};
    const auto pre = phi_preimages(full2, 2, 1);
    CHECK(pre.size() == 2);
    CHECK(pre[0].A == std::vector<int>{0});
    CHECK(pre[1].A == std::vector<int>{1});
    for (const auto& p : pre) CHECK(phi_forward(p, 2, 1) == full2);
}

TEST_CASE("phi fiber law exhaustively") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m <= 2; ++m) {
            const auto U = enumerate_U(n, m);
            const auto V = enumerate_V(n, m);
            std::size_t total = 0;
            for (const auto& v : V) {
                const auto pre = phi_preimages(v, n, m);
                const std::size_t expect =
                    static_cast<int>(v.X.size()) == n ? (n % 2 == 0 ? 2 : 0) : 1;
                CHECK(pre.size() == expect);
                for (const auto& p : pre) CHECK(phi_forward(p, n, m) == v);
                total += pre.size();
            }
            CHECK(total == U.size());
        }
}

TEST_CASE("cardinality records") {
    const auto theta21 = check_cardinalities(2, 1, BijectionKind::theta);
    CHECK(theta21.pass);
    CHECK(std::get<std::string>(theta21.lhs).find("|S|=3") != std::string::npos);

    const auto phi21 = check_cardinalities(2, 1, BijectionKind::phi);
    CHECK(phi21.pass);
    CHECK(std::get<std::string>(phi21.lhs).find("|U|=5") != std::string::npos);

    const auto phi31 = check_cardinalities(3, 1, BijectionKind::phi);
    CHECK(phi31.pass);
    CHECK(std::get<std::string>(phi31.lhs).find("|U|=7") != std::string::npos);
}
