#pragma once

#include "qv/laurent.hpp"
#include "qv/rational.hpp"

namespace qv {

/// k(k-1)/2, valid for negative k as well (binomial(k,2) as a polynomial).
constexpr long choose2(long k) { return k * (k - 1) / 2; }

/// Exact binomial coefficient; 0 when k < 0 or k > n. Negative n is rejected.
Integer binomial(long n, long k);

/// Gaussian binomial [n k]_q as a polynomial in q with nonnegative integer
/// coefficients and degree k(n-k); 0 when k < 0 or k > n. Computed by the
/// Pascal recurrence
///   [n k] = [n-1 k] + q^{n-k} [n-1 k-1]
/// and memoized process-wide; safe to call from parallel workers.
QPoly gauss_binomial(long n, long k);

/// (q^alpha; q)_n = prod_{i=0}^{n-1} (1 - q^{alpha+i}); the empty product is 1.
/// Identically zero exactly when 0 lies in {alpha, ..., alpha+n-1}.
QPoly q_pochhammer_power(long alpha, long n);

}  // namespace qv
