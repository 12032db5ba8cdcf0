#include "qv/euler_families.hpp"

#include <string>

#include "qv/cyclic_sum.hpp"
#include "qv/errors.hpp"
#include "qv/qbinomial.hpp"
#include "qv/sampler.hpp"

namespace qv {

namespace {

QPoly sign_monomial(bool negative, long e) {
    return QPoly::monomial(Rational(negative ? -1 : 1), e);
}

long exact_div(long num, long den) {
    if (num % den != 0) throw Error("exponent is not integral: " + std::to_string(num) + "/" +
                                    std::to_string(den));
    return num / den;
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

VerificationRecord poly_record(std::string family, std::vector<Param> params, QPoly lhs, QPoly rhs,
                               const detail::Stopwatch& sw) {
    const bool pass = lhs == rhs;
    return finish(std::move(family), std::move(params), std::move(lhs), std::move(rhs), pass, sw);
}

}  // namespace

VerificationRecord verify_zeil(int n, ZeilVariant variant) {
    if (n < 0) throw Error("verify_zeil needs n >= 0");
    detail::Stopwatch sw;

    QPoly lhs;
    if (variant == ZeilVariant::direct) {
        for (int k = 0; 2 * k <= n; ++k)
            lhs.add_scaled_shifted(gauss_binomial(n - k, k), Rational(k % 2 ? -1 : 1), choose2(k));
    } else {
        for (int k = 0; 2 * k <= n; ++k)
            lhs.add_scaled_shifted(gauss_binomial(n - k, k), Rational((n - k) % 2 ? -1 : 1),
                                   static_cast<long>(k) * k + choose2(n - k));
    }

    QPoly rhs;
    if (n % 3 != 2) {
        if (variant == ZeilVariant::direct)
            rhs = sign_monomial((n / 3) % 2 != 0, exact_div(static_cast<long>(n) * (n - 1), 6));
        else
            rhs = sign_monomial(((2 * n + 2) / 3) % 2 != 0,
                                exact_div(static_cast<long>(n) * (n - 1), 3));
    }

    return poly_record("zeil",
                       {Param::num("n", n),
                        Param::str("variant", variant == ZeilVariant::direct ? "direct" : "inverted")},
                       std::move(lhs), std::move(rhs), sw);
}

VerificationRecord verify_finite_euler(int L, int variant) {
    if (L < 0 || (variant != 1 && variant != 2)) throw Error("verify_finite_euler needs L >= 0, variant 1|2");
    detail::Stopwatch sw;

    QPoly lhs;
    for (int j = -L; j <= L; ++j) {
        const long e = variant == 1 ? exact_div(static_cast<long>(j) * (3 * j + 1), 2)
                                    : exact_div(static_cast<long>(j) * (3 * j - 1), 2);
        const QPoly b = variant == 1 ? gauss_binomial(2 * L - j, L + j)
                                     : gauss_binomial(2 * L - j + 1, L + j);
        lhs.add_scaled_shifted(b, Rational(j % 2 ? -1 : 1), e);
    }

    return poly_record("finite_euler", {Param::num("L", L), Param::num("variant", variant)},
                       std::move(lhs), QPoly::constant(Rational(1)), sw);
}

VerificationRecord verify_pentagonal_limit(int degree_bound) {
    if (degree_bound < 0) throw Error("verify_pentagonal_limit needs D >= 0");
    detail::Stopwatch sw;
    const long D = degree_bound;

    QPoly lhs;
    for (long j = 0;; ++j) {
        const long e_pos = j * (3 * j - 1) / 2;        // j >= 0
        const long e_neg = j * (3 * j + 1) / 2;        // exponent of -j
        if (e_pos > D && e_neg > D && j > 0) break;
        if (e_pos <= D) lhs.add_term(e_pos, Rational(j % 2 ? -1 : 1));
        if (j > 0 && e_neg <= D) lhs.add_term(e_neg, Rational(j % 2 ? -1 : 1));
    }

    QPoly rhs = QPoly::constant(Rational(1));
    for (long i = 1; i <= D; ++i) {
        QPoly factor = QPoly::constant(Rational(1));
        factor.add_term(i, Rational(-1));
        rhs = (rhs * factor).truncated_above(D);
    }

    return poly_record("pentagonal", {Param::num("D", degree_bound)}, std::move(lhs),
                       std::move(rhs), sw);
}

VerificationRecord verify_nrst(int n, int r, int t, NrstVariant variant) {
    if (n < 1 || r < 0 || r > n || t < 0 || t > n)
        throw Error("verify_nrst needs n >= 1 and 0 <= r, t <= n");
    detail::Stopwatch sw;

    QPoly lhs;
    for (int s = 0; s <= n - r; ++s) {
        const long e = variant == NrstVariant::q
                           ? choose2(s)
                           : exact_div(static_cast<long>(s) * (s + 2 * r + 2 * t - 2 * n + 1), 2);
        QPoly term = gauss_binomial(n - r, s) * gauss_binomial(n - s, t);
        lhs.add_scaled_shifted(term, Rational(s % 2 ? -1 : 1), e);
    }

    QPoly rhs = gauss_binomial(r, n - t);
    if (variant == NrstVariant::q)
        rhs = rhs.shifted(static_cast<long>(n - r) * (n - t));

    return poly_record(
        "nrst",
        {Param::num("n", n), Param::num("r", r), Param::num("t", t),
         Param::str("variant", variant == NrstVariant::q ? "q" : "q_inverse")},
        std::move(lhs), std::move(rhs), sw);
}

VerificationRecord verify_chu_vandermonde(int alpha, int gamma, int N) {
    if (N < 0) throw Error("verify_chu_vandermonde needs N >= 0");
    if (gamma > -N)
        throw DegenerateParameters("need gamma <= -N so no (q^gamma;q)_k factor vanishes");
    detail::Stopwatch sw;

    // Both sides multiplied by (q^gamma;q)_N (q;q)_N, which every k-term
    // denominator divides exactly.
    QPoly lhs;
    for (int k = 0; k <= N; ++k) {
        QPoly term = q_pochhammer_power(alpha, k) * q_pochhammer_power(-N, k) *
                     q_pochhammer_power(gamma + k, N - k) * q_pochhammer_power(k + 1, N - k);
        lhs += term.shifted(static_cast<long>(gamma + N - alpha) * k);
    }
    QPoly rhs = q_pochhammer_power(gamma - alpha, N) * q_pochhammer_power(1, N);

    return poly_record(
        "chu_vandermonde",
        {Param::num("alpha", alpha), Param::num("gamma", gamma), Param::num("N", N)},
        std::move(lhs), std::move(rhs), sw);
}

VerificationRecord verify_multi_3m(int m, int n, const std::vector<Rational>& x) {
    if (m < 1 || n < 1) throw Error("verify_multi_3m needs m, n >= 1");
    if (static_cast<int>(x.size()) != 3 * m) throw Error("verify_multi_3m needs 3m weights");
    for (int k = 1; k <= m; ++k)
        if (x[3 * k - 1] != Rational(-1))
            throw Error("verify_multi_3m requires x_{3k} = -1");
    detail::Stopwatch sw;

    CyclicSumSpec<Rational> spec;
    spec.m = 3 * m;
    spec.n = n;
    spec.weights = x;
    spec.q_rule = QExponentRule::binom_r2;
    QPoly lhs = eval_cyclic_q_sum(spec);

    Rational a(1), b(1);
    for (int k = 0; k < 3 * m; k += 3) a *= x[k];
    for (int k = 1; k < 3 * m; k += 3) b *= x[k];
    Rational h;
    if (a == b)
        h = Rational(n + 1) * a.pow(n);  // removable singularity of the divided difference
    else
        h = (a.pow(n + 1) - b.pow(n + 1)) / (a - b);
    QPoly rhs = QPoly::monomial(h, static_cast<long>(m) * choose2(n));

    std::vector<Param> params{Param::num("m", m), Param::num("n", n)};
    std::string ws;
    for (const auto& w : x) ws += (ws.empty() ? "" : ",") + w.str();
    params.push_back(Param::str("x", ws));
    return poly_record("multi_3m", std::move(params), std::move(lhs), std::move(rhs), sw);
}

namespace {

QPoly multi_zeil_rhs(int m, int n) {
    if (n % 3 == 2) return QPoly::zero();
    const long fl = (static_cast<long>(m) + n - 1) * m / 3;
    return QPoly::monomial(Rational(fl % 2 ? -1 : 1),
                           exact_div(static_cast<long>(m) * n * (n - 1), 6));
}

}  // namespace

VerificationRecord verify_multi_zeil(int m, int n) {
    if (m < 1 || n < 1) throw Error("verify_multi_zeil needs m, n >= 1");
    if (m % 3 == 0)
        throw ParameterCongruenceViolation(
            "m = 0 (mod 3) is outside this family's range; use multi_3m with all weights -1");
    detail::Stopwatch sw;

    CyclicSumSpec<Rational> spec;
    spec.m = m;
    spec.n = n;
    spec.weights.assign(m, Rational(-1));
    spec.q_rule = QExponentRule::binom_r2;
    QPoly lhs = eval_cyclic_q_sum(spec);

    return poly_record("multi_zeil", {Param::num("m", m), Param::num("n", n)}, std::move(lhs),
                       multi_zeil_rhs(m, n), sw);
}

VerificationRecord verify_3ell(int L, int m, int variant) {
    if (L < 0 || m < 1 || (variant != 0 && variant != 1))
        throw Error("verify_3ell needs L >= 0, m >= 1, variant 0|1");
    detail::Stopwatch sw;

    CyclicSumSpec<Rational> spec;
    spec.m = m;
    spec.n = variant == 0 ? 3 * L : 3 * L + 1;
    spec.shift = L;
    spec.sign_rule = SignRule::alternating;
    spec.q_rule = variant == 0 ? QExponentRule::cross_shift0 : QExponentRule::cross_shift1;
    QPoly lhs = eval_cyclic_q_sum(spec);

    QPoly rhs;
    if (variant == 0) {
        rhs = QPoly::constant(Rational(m % 3 == 0 ? 3 * L + 1 : 1));
    } else if (m % 3 == 0) {
        rhs = QPoly::constant(Rational((m / 3) % 2 ? -(3 * L + 2) : 3 * L + 2));
    } else {
        rhs = QPoly::constant(Rational((static_cast<long>(m) * m / 3) % 2 ? -1 : 1));
    }

    return poly_record("three_ell",
                       {Param::num("L", L), Param::num("m", m), Param::num("variant", variant)},
                       std::move(lhs), std::move(rhs), sw);
}

VerificationRecord verify_z_refined(int m, int n, int s) {
    if (n < 1 || s < 1 || s > m)
        throw Error("verify_z_refined needs n >= 1 and 1 <= s <= m");
    const bool case1 = m % 3 == 1 && m >= 4 && s % 3 != 0;
    const bool case2 = m % 3 == 2 && m >= 5 && s % 3 != 2;
    if (!case1 && !case2)
        throw ParameterCongruenceViolation(
            "need m = 1 (mod 3), m >= 4, s != 0 (mod 3)  or  m = 2 (mod 3), m >= 5, s != 2 (mod 3)");
    detail::Stopwatch sw;

    const std::size_t count = std::max<std::size_t>(2 * n + 2, 5);
    const std::vector<Rational> zs = z_sample_list(count);
    const QPoly rhs = multi_zeil_rhs(m, n);

    QPoly first;
    bool pass = true;
    std::string detail_str;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        CyclicSumSpec<Rational> spec;
        spec.m = m;
        spec.n = n;
        spec.weights.assign(m, Rational(-1));
        spec.q_rule = QExponentRule::binom_r2;
        spec.refinement = CyclicSumSpec<Rational>::Refinement{zs[i], s};
        QPoly sum = eval_cyclic_q_sum(spec);
        if (i == 0) first = sum;
        if (sum != rhs || sum != first) {
            pass = false;
            detail_str = "z=" + zs[i].str() + " -> " + sum.str();
            break;
        }
    }

    std::vector<Param> params{Param::num("m", m), Param::num("n", n), Param::num("s", s),
                              Param::num("z_samples", static_cast<long>(zs.size()))};
    Value lhs = pass ? Value(std::move(first)) : Value(std::move(detail_str));
    return finish("z_refined", std::move(params), std::move(lhs), rhs, pass, sw);
}

VerificationRecord verify_four_to_one_reduction(int n, int r5) {
    if (n < 1 || r5 < 0 || r5 > n) throw Error("verify_four_to_one needs n >= 1, 0 <= r5 <= n");
    detail::Stopwatch sw;

    QPoly lhs;
    for (int r1 = 0; r1 <= n; ++r1)
        for (int r2 = 0; r2 <= n - r1; ++r2)
            for (int r3 = 0; r3 <= n - r2; ++r3)
                for (int r4 = 0; r4 <= std::min(n - r3, n - r5); ++r4) {
                    QPoly term = gauss_binomial(n - r1, r2) * gauss_binomial(n - r2, r3) *
                                 gauss_binomial(n - r3, r4) * gauss_binomial(n - r4, r5);
                    const long e = choose2(r1) + choose2(r2) + choose2(r3) + choose2(r4);
                    lhs.add_scaled_shifted(term, Rational((r1 + r2 + r3 + r4) % 2 ? -1 : 1), e);
                }

    QPoly single;
    for (int r1 = 0; r1 <= n - r5; ++r1)
        single.add_scaled_shifted(gauss_binomial(n - r1, r5), Rational(r1 % 2 ? -1 : 1),
                                  choose2(r1));
    QPoly rhs = (n % 2 ? -single : single).shifted(choose2(n));

    return poly_record("four_to_one", {Param::num("n", n), Param::num("r5", r5)}, std::move(lhs),
                       std::move(rhs), sw);
}

}  // namespace qv
