#pragma once

#include <cstdint>
#include <vector>

#include "qv/rational.hpp"

namespace qv {

/// Deterministic rational sample points: a fixed linear-congruential generator
/// drives numerators and denominators in [2, 97]. No global state, so suites
/// are reproducible from the seed alone.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    Rational next() {
        const long num = 2 + static_cast<long>(step() % 96);
        const long den = 2 + static_cast<long>(step() % 96);
        return Rational(num, den);
    }

    /// Next sample satisfying a caller predicate (pole rejection).
    template <class Pred>
    Rational next_where(Pred&& ok) {
        for (;;) {
            Rational r = next();
            if (ok(r)) return r;
        }
    }

    std::vector<Rational> take(std::size_t count) {
        std::vector<Rational> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(next());
        return out;
    }

private:
    std::uint64_t step() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 33;
    }

    std::uint64_t state_;
};

/// The fixed z-sample list for the z-refined theorems: {2, 3, 5, 7, -2}
/// extended by successive primes. Any distinct values work (the z-degree span
/// is bounded); the list is fixed for reproducibility.
inline std::vector<Rational> z_sample_list(std::size_t count) {
    static const long base[] = {2,  3,  5,  7,  -2, 11, 13, 17, 19, 23,
                                29, 31, 37, 41, 43, 47, 53, 59, 61, 67};
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count && i < std::size(base); ++i)
        out.push_back(Rational(base[i]));
    long candidate = 71;
    auto is_prime = [](long v) {
        for (long d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return v > 1;
    };
    while (out.size() < count) {
        if (is_prime(candidate)) out.push_back(Rational(candidate));
        ++candidate;
    }
    return out;
}

}  // namespace qv
