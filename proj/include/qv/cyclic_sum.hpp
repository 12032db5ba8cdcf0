#pragma once

#include <optional>
#include <vector>

#include "qv/errors.hpp"
#include "qv/laurent.hpp"
#include "qv/qbinomial.hpp"
#include "qv/rational.hpp"
#include "qv/scalar.hpp"

namespace qv {

/// Which q-power each cyclic index contributes. The shifted rules work on
/// j_k = r_k - shift (the substitution r_k = j_k + L).
enum class QExponentRule {
    none,
    binom_r2,      // sum_k binom(r_k, 2)
    cross_shift0,  // sum_k j_k j_{k+1} + binom(j_k + 1, 2)
    cross_shift1,  // sum_k j_k j_{k+1} + binom(j_k, 2)
};

/// Optional (-1)^{j_k} factor per index, on the shifted index j_k = r_k - shift.
enum class SignRule { none, alternating };

/// Declarative description of one cyclic multi-sum
///   sum over r_1..r_m in [0,n]^m of
///     prod_k [n-r_k, r_{k+1}]_q * q^{rule} * sign * x_k^{r_k} * z^{r_1 - r_s}
/// with the cyclic convention r_{m+1} = r_1. Scalar is Rational or QuadExt;
/// rational factors promote into Scalar on one shared evaluation path.
template <class Scalar = Rational>
struct CyclicSumSpec {
    struct Refinement {
        Rational z;
        int site = 1;  // 1-based s; exponent is r_1 - r_s
    };

    int m = 1;
    int n = 0;
    std::vector<Scalar> weights;  // empty means all ones; otherwise one per index
    QExponentRule q_rule = QExponentRule::binom_r2;
    SignRule sign_rule = SignRule::none;
    int shift = 0;
    std::optional<Refinement> refinement;

    void validate() const {
        if (m < 1 || n < 0) throw Error("cyclic sum needs m >= 1, n >= 0");
        if (!weights.empty() && static_cast<int>(weights.size()) != m)
            throw Error("weight vector length must be m");
        if (refinement && (refinement->site < 1 || refinement->site > m))
            throw Error("refinement site out of range");
        if (refinement && refinement->z.is_zero())
            throw Error("refinement weight z must be nonzero");
    }
};

/// Streams exactly the tuples r in [0,n]^m with r_k + r_{k+1} <= n for every k
/// cyclically, in lexicographic order. Depth-first with prefix pruning:
/// r_{k+1} ranges over [0, n - r_k] and the wrap-around constraint
/// r_1 <= n - r_m is checked at the leaf. Tuples outside this support have a
/// vanishing Gaussian-binomial factor and contribute nothing.
template <class F>
void for_each_support(int n, int m, F&& visit) {
    if (n < 0 || m < 1) throw Error("support enumeration needs n >= 0, m >= 1");
    std::vector<int> r(m, 0);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == m) {
            if (r[m - 1] + r[0] <= n) visit(static_cast<const std::vector<int>&>(r));
            return;
        }
        const int hi = k == 0 ? n : n - r[k - 1];
        for (int v = 0; v <= hi; ++v) {
            r[k] = v;
            self(self, k + 1);
        }
        r[k] = 0;
    };
    rec(rec, 0);
}

inline std::vector<std::vector<int>> enumerate_support(int n, int m) {
    std::vector<std::vector<int>> out;
    for_each_support(n, m, [&](const std::vector<int>& r) { out.push_back(r); });
    return out;
}

namespace detail {

inline long rule_exponent(QExponentRule rule, int shift, const std::vector<int>& r) {
    const int m = static_cast<int>(r.size());
    long e = 0;
    switch (rule) {
        case QExponentRule::none:
            break;
        case QExponentRule::binom_r2:
            for (int v : r) e += choose2(v);
            break;
        case QExponentRule::cross_shift0:
        case QExponentRule::cross_shift1:
            for (int k = 0; k < m; ++k) {
                const long jk = r[k] - shift;
                const long jn = r[(k + 1) % m] - shift;
                e += jk * jn + (rule == QExponentRule::cross_shift0 ? choose2(jk + 1) : choose2(jk));
            }
            break;
    }
    return e;
}

}  // namespace detail

/// Exact cyclic q-sum; q stays symbolic. Internally parallelizable over r_1
/// strata; exact arithmetic makes any combination order give the same result.
template <class Scalar>
LaurentPoly<Scalar> eval_cyclic_q_sum(const CyclicSumSpec<Scalar>& spec) {
    spec.validate();
    const int m = spec.m;
    const int n = spec.n;

    // weight powers x_k^r for r <= n
    std::vector<std::vector<Scalar>> wpow;
    if (!spec.weights.empty()) {
        wpow.resize(m);
        for (int k = 0; k < m; ++k) {
            wpow[k].reserve(n + 1);
            for (int r = 0; r <= n; ++r) wpow[k].push_back(spec.weights[k].pow(r));
        }
    }

    LaurentPoly<Scalar> acc;
    for_each_support(n, m, [&](const std::vector<int>& r) {
        QPoly prod = gauss_binomial(n - r[0], r[1 % m]);
        for (int k = 1; k < m; ++k) prod = prod * gauss_binomial(n - r[k], r[(k + 1) % m]);

        Scalar scale = scalar_traits<Scalar>::one();
        if (!wpow.empty())
            for (int k = 0; k < m; ++k) scale = scale * wpow[k][r[k]];

        Rational rational_factor(1);
        if (spec.refinement)
            rational_factor *= spec.refinement->z.pow(r[0] - r[spec.refinement->site - 1]);
        if (spec.sign_rule == SignRule::alternating) {
            long js = -static_cast<long>(m) * spec.shift;
            for (int v : r) js += v;
            if (js % 2 != 0) rational_factor = -rational_factor;
        }
        if (rational_factor != Rational(1)) scale = scale * rational_factor;

        acc.add_scaled_shifted(prod, scale, detail::rule_exponent(spec.q_rule, spec.shift, r));
    });
    return acc;
}

/// Exact value of sum over the cyclic support of
///   prod_k C(n-r_k, r_{k+1}) (-x_k)^{r_k} / (1+x_k)^{r_k + r_{k+1}}.
/// Works for Rational and QuadExt sample points; throws PoleAtMinusOne when
/// some 1 + x_k vanishes.
template <class Scalar>
Scalar eval_cyclic_scalar_sum(int m, int n, const std::vector<Scalar>& x) {
    if (static_cast<int>(x.size()) != m) throw Error("need one sample coordinate per index");
    const Scalar one = scalar_traits<Scalar>::one();
    std::vector<std::vector<Scalar>> neg_pow(m), inv_pow(m);
    for (int k = 0; k < m; ++k) {
        const Scalar onepx = one + x[k];
        if (onepx.is_zero()) throw PoleAtMinusOne();
        const Scalar inv = one / onepx;
        neg_pow[k].push_back(one);
        inv_pow[k].push_back(one);
        for (int r = 1; r <= 2 * n; ++r) {
            if (r <= n) neg_pow[k].push_back(neg_pow[k].back() * (-x[k]));
            inv_pow[k].push_back(inv_pow[k].back() * inv);
        }
    }

    Scalar acc{};
    for_each_support(n, m, [&](const std::vector<int>& r) {
        Rational coeff(1);
        for (int k = 0; k < m; ++k) {
            coeff *= Rational(binomial(n - r[k], r[(k + 1) % m]));
            if (coeff.is_zero()) return;
        }
        Scalar term = scalar_traits<Scalar>::from_rational(coeff);
        for (int k = 0; k < m; ++k)
            term = term * neg_pow[k][r[k]] * inv_pow[k][r[k] + r[(k + 1) % m]];
        acc += term;
    });
    return acc;
}

inline Rational eval_cyclic_rational_sum(int m, int n, const std::vector<Rational>& x) {
    return eval_cyclic_scalar_sum<Rational>(m, n, x);
}

}  // namespace qv
