#include "qv/bijections.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "qv/errors.hpp"
#include "qv/qbinomial.hpp"

namespace qv {

namespace {

bool is_independent(const std::vector<int>& s, int n, Topology topology) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] - s[i - 1] <= 1) return false;
    if (topology == Topology::cycle && !s.empty()) {
        if (n == 1) return false;  // the single point is its own successor
        if (s.size() >= 2 && s.front() == 0 && s.back() == n - 1) return false;
    }
    return true;
}

// All colorings A -> {1..colors} in lexicographic order over the sorted A.
void for_each_coloring(const std::vector<int>& A, int colors,
                       const std::function<void(const std::map<int, int>&)>& visit) {
    std::map<int, int> coloring;
    for (int a : A) coloring[a] = 1;
    if (A.empty()) {
        visit(coloring);
        return;
    }
    for (;;) {
        visit(coloring);
        // odometer over A, last element fastest
        auto it = A.rbegin();
        for (; it != A.rend(); ++it) {
            int& v = coloring[*it];
            if (v < colors) {
                ++v;
                break;
            }
            v = 1;
        }
        if (it == A.rend()) return;
    }
}

// Maximal runs under cyclic adjacency; each run is listed from its start
// (the element whose predecessor mod n is absent). Requires X != Z_n.
std::vector<std::vector<int>> cyclic_chains(const std::vector<int>& X, int n) {
    std::vector<bool> in(n, false);
    for (int v : X) in[v] = true;
    std::vector<std::vector<int>> chains;
    for (int s = 0; s < n; ++s) {
        if (!in[s] || in[(s + n - 1) % n]) continue;  // not a start
        std::vector<int> chain;
        int v = s;
        while (in[v]) {
            chain.push_back(v);
            v = (v + 1) % n;
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

VerificationRecord finish(std::string family, std::vector<Param> params, Value lhs, Value rhs,
                          bool pass, const detail::Stopwatch& sw) {
    VerificationRecord rec;
    rec.family = std::move(family);
    rec.params = std::move(params);
    rec.lhs = std::move(lhs);
    rec.rhs = std::move(rhs);
    rec.pass = pass;
    rec.elapsed = sw.elapsed();
    return rec;
}

}  // namespace

std::vector<std::vector<int>> enumerate_independent(int n, Topology topology) {
    if (n < 1) throw Error("enumerate_independent needs n >= 1");
    const int points = topology == Topology::line ? n - 1 : n;
    const int lo = topology == Topology::line ? 1 : 0;
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << points); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < points; ++i)
            if (mask >> i & 1) s.push_back(lo + i);
        if (is_independent(s, n, topology)) out.push_back(std::move(s));
    }
    return out;
}

ChainDecomposition chain_decompose(const std::vector<int>& X) {
    std::vector<int> sorted = X;
    std::sort(sorted.begin(), sorted.end());
    ChainDecomposition d;
    for (int v : sorted) {
        if (!d.chains.empty() && d.chains.back().back() == v - 1)
            d.chains.back().push_back(v);
        else
            d.chains.push_back({v});
    }
    return d;
}

namespace {

void validate_triple(const ColoredTriple& t, int n, int m, Topology topology) {
    if (!std::is_sorted(t.A.begin(), t.A.end()) || !is_independent(t.A, n, topology))
        throw Error("triple carrier is not an independent set");
    const int lo = topology == Topology::line ? 1 : 0;
    const int hi = topology == Topology::line ? n - 1 : n - 1;
    for (int a : t.A)
        if (a < lo || a > hi) throw Error("triple carrier outside the ground set");
    if (t.f.size() != t.A.size() || t.g.size() != t.A.size())
        throw Error("colorings must be defined exactly on A");
    for (int a : t.A) {
        auto fit = t.f.find(a);
        auto git = t.g.find(a);
        if (fit == t.f.end() || git == t.g.end()) throw Error("coloring missing a point of A");
        if (fit->second < 1 || fit->second > m) throw Error("f-color out of range");
        if (git->second < 1 || git->second > m + 1) throw Error("g-color out of range");
    }
}

bool even_chain_at_n(const ColoredSubset& c, int n) {
    if (!std::binary_search(c.X.begin(), c.X.end(), n)) return true;  // vacuous
    for (const auto& chain : chain_decompose(c.X).chains)
        if (chain.back() == n) return chain.size() % 2 == 0;
    return true;  // unreachable
}

}  // namespace

ColoredSubset theta_forward(const ColoredTriple& t, int n, int m) {
    validate_triple(t, n, m, Topology::line);
    ColoredSubset out;
    std::map<int, int> h;
    for (int a : t.A) h[a] = t.f.at(a);
    for (int a : t.A)
        if (t.g.at(a) <= m) h[a + 1] = t.g.at(a);  // A independent, so a+1 is fresh
    for (const auto& [v, color] : h) out.X.push_back(v);
    out.h = std::move(h);
    if (!even_chain_at_n(out, n))
        throw NotInT("theta image has an odd chain at n");
    return out;
}

ColoredTriple theta_inverse(const ColoredSubset& c, int n, int m) {
    for (int v : c.X)
        if (v < 1 || v > n) throw Error("subset outside [n]");
    if (!std::is_sorted(c.X.begin(), c.X.end())) throw Error("subset must be sorted");
    if (!even_chain_at_n(c, n)) throw Error("subset not in T: odd chain at n");
    for (const auto& [v, color] : c.h)
        if (color < 1 || color > m) throw Error("h-color out of range");
    if (c.h.size() != c.X.size()) throw Error("h must be defined exactly on X");

    ColoredTriple t;
    for (const auto& chain : chain_decompose(c.X).chains)
        for (std::size_t i = 0; i < chain.size(); i += 2) t.A.push_back(chain[i]);
    std::sort(t.A.begin(), t.A.end());

    std::set<int> Xs(c.X.begin(), c.X.end());
    std::set<int> As(t.A.begin(), t.A.end());
    for (int a : t.A) {
        t.f[a] = c.h.at(a);
        const bool succ_in_B = Xs.count(a + 1) && !As.count(a + 1);
        t.g[a] = succ_in_B ? c.h.at(a + 1) : m + 1;
    }
    try {
        validate_triple(t, n, m, Topology::line);
    } catch (const Error& e) {
        throw NotInS(std::string("theta_inverse produced an invalid triple: ") + e.what());
    }
    return t;
}

ColoredSubset phi_forward(const ColoredTriple& t, int n, int m) {
    validate_triple(t, n, m, Topology::cycle);
    std::map<int, int> h;
    for (int a : t.A) h[a] = t.f.at(a);
    for (int a : t.A)
        if (t.g.at(a) <= m) h[(a + 1) % n] = t.g.at(a);  // fresh: A cyclically independent
    ColoredSubset out;
    for (const auto& [v, color] : h) out.X.push_back(v);
    out.h = std::move(h);
    return out;
}

std::vector<ColoredTriple> phi_preimages(const ColoredSubset& c, int n, int m) {
    for (int v : c.X)
        if (v < 0 || v >= n) throw Error("subset outside Z_n");
    if (!std::is_sorted(c.X.begin(), c.X.end())) throw Error("subset must be sorted");
    if (c.h.size() != c.X.size()) throw Error("h must be defined exactly on X");
    for (const auto& [v, color] : c.h)
        if (color < 1 || color > m) throw Error("h-color out of range");

    std::vector<ColoredTriple> out;
    if (static_cast<int>(c.X.size()) == n) {
        if (n % 2 != 0) return out;  // no preimage for odd n
        for (int start : {0, 1}) {
            ColoredTriple t;
            for (int a = start; a < n; a += 2) t.A.push_back(a);
            for (int a : t.A) {
                t.f[a] = c.h.at(a);
                t.g[a] = c.h.at((a + 1) % n);
            }
            out.push_back(std::move(t));
        }
        return out;
    }

    // Proper subset: every maximal cyclic chain starts in A and alternates
    // A, B, A, B, ... (a B element forces its predecessor into A).
    ColoredTriple t;
    std::set<int> As;
    for (const auto& chain : cyclic_chains(c.X, n))
        for (std::size_t i = 0; i < chain.size(); i += 2) {
            t.A.push_back(chain[i]);
            As.insert(chain[i]);
        }
    std::sort(t.A.begin(), t.A.end());
    std::set<int> Xs(c.X.begin(), c.X.end());
    for (int a : t.A) {
        t.f[a] = c.h.at(a);
        const int succ = (a + 1) % n;
        const bool succ_in_B = Xs.count(succ) && !As.count(succ);
        t.g[a] = succ_in_B ? c.h.at(succ) : m + 1;
    }
    out.push_back(std::move(t));
    return out;
}

namespace {

std::vector<ColoredTriple> enumerate_triples(int n, int m, Topology topology) {
    std::vector<ColoredTriple> out;
    for (const auto& A : enumerate_independent(n, topology)) {
        for_each_coloring(A, m, [&](const std::map<int, int>& f) {
            for_each_coloring(A, m + 1, [&](const std::map<int, int>& g) {
                out.push_back(ColoredTriple{A, f, g});
            });
        });
    }
    return out;
}

}  // namespace

std::vector<ColoredTriple> enumerate_S(int n, int m) {
    return enumerate_triples(n, m, Topology::line);
}
std::vector<ColoredTriple> enumerate_U(int n, int m) {
    return enumerate_triples(n, m, Topology::cycle);
}

std::vector<ColoredSubset> enumerate_T(int n, int m) {
    std::vector<ColoredSubset> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> X;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) X.push_back(i + 1);
        ColoredSubset probe{X, {}};
        if (!even_chain_at_n(probe, n)) continue;
        for_each_coloring(X, m, [&](const std::map<int, int>& h) {
            out.push_back(ColoredSubset{X, h});
        });
    }
    return out;
}

std::vector<ColoredSubset> enumerate_V(int n, int m) {
    std::vector<ColoredSubset> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> X;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) X.push_back(i);
        for_each_coloring(X, m, [&](const std::map<int, int>& h) {
            out.push_back(ColoredSubset{X, h});
        });
    }
    return out;
}

VerificationRecord check_cardinalities(int n, int m, BijectionKind which) {
    if (n < 2 || m < 1) throw Error("check_cardinalities needs n >= 2, m >= 1");
    detail::Stopwatch sw;
    std::string lhs_desc, rhs_desc;
    bool pass = true;

    if (which == BijectionKind::theta) {
        const auto S = enumerate_S(n, m);
        const auto T = enumerate_T(n, m);

        Integer formula_S(0);
        for (int k = 0; 2 * k <= n; ++k) {
            Integer term = binomial(n - k, k);
            for (int i = 0; i < k; ++i) term *= m;
            for (int i = 0; i < k; ++i) term *= m + 1;
            formula_S += term;
        }
        Integer formula_T(0);
        for (int i = 0; i <= n; ++i) {
            Integer term(1);
            for (int j = 0; j < i; ++j) term *= -m;
            for (int j = 0; j < n - i; ++j) term *= m + 1;
            formula_T += term;
        }

        std::set<ColoredSubset> image;
        bool roundtrip = true;
        for (const auto& s : S) {
            ColoredSubset c = theta_forward(s, n, m);
            image.insert(c);
            if (!(theta_inverse(c, n, m) == s)) roundtrip = false;
        }
        bool onto = image.size() == S.size() && image == std::set<ColoredSubset>(T.begin(), T.end());
        bool roundtrip_T = true;
        for (const auto& t : T)
            if (!(theta_forward(theta_inverse(t, n, m), n, m) == t)) roundtrip_T = false;

        pass = Integer(S.size()) == formula_S && Integer(T.size()) == formula_T &&
               formula_S == formula_T && onto && roundtrip && roundtrip_T;
        lhs_desc = "|S|=" + std::to_string(S.size()) + " |T|=" + std::to_string(T.size()) +
                   (onto ? " bijective" : " NOT-bijective") +
                   (roundtrip && roundtrip_T ? " roundtrip" : " NOT-roundtrip");
        rhs_desc = "formulas " + formula_S.get_str() + " / " + formula_T.get_str();
    } else {
        const auto U = enumerate_U(n, m);
        const auto V = enumerate_V(n, m);

        Integer formula_U(1);
        Integer negm_pow(1);
        for (int i = 0; i < n; ++i) {
            formula_U *= m + 1;
            negm_pow *= -m;
        }
        formula_U += negm_pow;

        std::map<ColoredSubset, std::vector<ColoredTriple>> fibers;
        for (const auto& u : U) fibers[phi_forward(u, n, m)].push_back(u);

        bool census_ok = true;
        std::size_t fiber_total = 0;
        for (const auto& v : V) {
            auto preimages = phi_preimages(v, n, m);
            const std::size_t expect =
                static_cast<int>(v.X.size()) == n ? (n % 2 == 0 ? 2 : 0) : 1;
            if (preimages.size() != expect) census_ok = false;
            fiber_total += preimages.size();
            // the constructed preimages must be exactly the enumerated fiber
            auto it = fibers.find(v);
            std::set<ColoredTriple> enumerated =
                it == fibers.end() ? std::set<ColoredTriple>()
                                   : std::set<ColoredTriple>(it->second.begin(), it->second.end());
            if (enumerated != std::set<ColoredTriple>(preimages.begin(), preimages.end()))
                census_ok = false;
        }

        pass = Integer(U.size()) == formula_U && census_ok && fiber_total == U.size();
        lhs_desc = "|U|=" + std::to_string(U.size()) +
                   (census_ok ? " fibers-ok" : " fibers-BAD");
        rhs_desc = "(m+1)^n+(-m)^n=" + formula_U.get_str();
    }

    return finish("bijection",
                  {Param::num("n", n), Param::num("m", m),
                   Param::str("check", which == BijectionKind::theta ? "theta" : "phi")},
                  Value(lhs_desc), Value(rhs_desc), pass, sw);
}

}  // namespace qv
