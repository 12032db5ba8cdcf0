#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "qv/record.hpp"

namespace qv {

enum class Topology { line, cycle };
enum class BijectionKind { theta, phi };

/// Independent subsets: all subsets of [n-1] = {1..n-1} with no two
/// consecutive elements (line), or of Z_n = {0..n-1} with no two cyclically
/// adjacent elements (cycle). Deterministic order (increasing bitmask).
std::vector<std::vector<int>> enumerate_independent(int n, Topology topology);

/// A triple (A; f, g): an independent set A with colorings f: A -> [m] and
/// g: A -> [m+1]. Members of S (line ground set) or U (cycle ground set).
struct ColoredTriple {
    std::vector<int> A;        // sorted
    std::map<int, int> f;      // A -> {1..m}
    std::map<int, int> g;      // A -> {1..m+1}

    friend bool operator==(const ColoredTriple& a, const ColoredTriple& b) {
        return a.A == b.A && a.f == b.f && a.g == b.g;
    }
    friend bool operator<(const ColoredTriple& a, const ColoredTriple& b) {
        return std::tie(a.A, a.f, a.g) < std::tie(b.A, b.f, b.g);
    }
};

/// A pair (X; h): a subset with one coloring h: X -> [m]. Members of T
/// (subsets of [n] whose maximal chain containing n, if any, has even length)
/// or V (arbitrary subsets of Z_n).
struct ColoredSubset {
    std::vector<int> X;        // sorted
    std::map<int, int> h;      // X -> {1..m}

    friend bool operator==(const ColoredSubset& a, const ColoredSubset& b) {
        return a.X == b.X && a.h == b.h;
    }
    friend bool operator<(const ColoredSubset& a, const ColoredSubset& b) {
        return std::tie(a.X, a.h) < std::tie(b.X, b.h);
    }
};

/// The unique decomposition of an integer set into disjoint maximal chains of
/// consecutive integers, ordered by minimum element.
struct ChainDecomposition {
    std::vector<std::vector<int>> chains;
};

ChainDecomposition chain_decompose(const std::vector<int>& X);

/// theta: S -> T.  B = {i+1 : i in A, g(i) in [m]}, X = A u B, h|_A = f,
/// h(i) = g(i-1) on B. The result is checked to lie in T (NotInT = bug).
ColoredSubset theta_forward(const ColoredTriple& t, int n, int m);

/// Inverse of theta: A takes the odd positions of each maximal chain,
/// f = h|_A, g(i) = h(i+1) when i+1 in X \ A, else m+1. The result is checked
/// to lie in S (NotInS = bug).
ColoredTriple theta_inverse(const ColoredSubset& c, int n, int m);

/// phi: U -> V, the same construction with i+1 taken mod n.
ColoredSubset phi_forward(const ColoredTriple& t, int n, int m);

/// All phi-preimages of (X; h): exactly one when X is a proper subset of Z_n;
/// for X = Z_n, none when n is odd and the two alternating triples when n is
/// even.
std::vector<ColoredTriple> phi_preimages(const ColoredSubset& c, int n, int m);

/// Exhaustive enumerations (colorings in lexicographic order over A).
std::vector<ColoredTriple> enumerate_S(int n, int m);
std::vector<ColoredTriple> enumerate_U(int n, int m);
std::vector<ColoredSubset> enumerate_T(int n, int m);
std::vector<ColoredSubset> enumerate_V(int n, int m);

/// theta: |S| = Sum_k C(n-k,k) m^k (m+1)^k = |T| = Sum_i (-m)^i (m+1)^{n-i},
/// with theta a bijection verified by exhaustion and round-trips.
/// phi: |U| = (m+1)^n + (-m)^n with the full fiber census over V.
VerificationRecord check_cardinalities(int n, int m, BijectionKind which);

}  // namespace qv
