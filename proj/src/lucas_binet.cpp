#include "qv/lucas_binet.hpp"

#include <set>
#include <string>

#include "qv/cyclic_sum.hpp"
#include "qv/errors.hpp"
#include "qv/qbinomial.hpp"

namespace qv {

namespace {

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

Rational lucas_lhs(int n, int variant, const Rational& x, const Rational& y) {
    const Rational xy = x + y;
    const Rational prod = x * y;
    Rational acc(0);
    for (int k = 0; 2 * k <= n; ++k) {
        Rational c(binomial(n - k, k));
        if (variant == 2) c *= Rational(n, n - k);
        acc += c * xy.pow(n - 2 * k) * (-prod).pow(k);
    }
    return acc;
}

}  // namespace

BivariateGrid BivariateGrid::for_degree(int n) {
    BivariateGrid g;
    for (int i = 0; i <= n; ++i) g.x_points.push_back(Rational(i));
    for (int i = n + 1; i <= 2 * n + 1; ++i) g.y_points.push_back(Rational(i));
    return g;
}

VerificationRecord verify_lucas(int n, int variant, const BivariateGrid& grid) {
    if (n < 1 || (variant != 1 && variant != 2)) throw Error("verify_lucas needs n >= 1, variant 1|2");
    if (static_cast<int>(grid.x_points.size()) < n + 1 ||
        static_cast<int>(grid.y_points.size()) < n + 1)
        throw GridTooSmall("need at least n+1 points per axis for degree n");
    if (std::set<Rational>(grid.x_points.begin(), grid.x_points.end()).size() !=
            grid.x_points.size() ||
        std::set<Rational>(grid.y_points.begin(), grid.y_points.end()).size() !=
            grid.y_points.size())
        throw Error("grid points must be distinct");
    detail::Stopwatch sw;

    long checked = 0;
    std::string mismatch;
    for (const Rational& x : grid.x_points) {
        for (const Rational& y : grid.y_points) {
            if (variant == 1 && x == y)
                throw DegenerateParameters("variant 1 grid pairs must have x != y");
            const Rational lhs = lucas_lhs(n, variant, x, y);
            const Rational rhs = variant == 1
                                     ? (x.pow(n + 1) - y.pow(n + 1)) / (x - y)
                                     : x.pow(n) + y.pow(n);
            ++checked;
            if (lhs != rhs) {
                mismatch = "x=" + x.str() + " y=" + y.str() + ": " + lhs.str() + " vs " + rhs.str();
                break;
            }
        }
        if (!mismatch.empty()) break;
    }
    // variant 1: the x = y face separately, against the limit (n+1) x^n
    if (variant == 1 && mismatch.empty()) {
        for (const Rational& x : grid.x_points) {
            const Rational lhs = lucas_lhs(n, 1, x, x);
            const Rational rhs = Rational(n + 1) * x.pow(n);
            ++checked;
            if (lhs != rhs) {
                mismatch = "diagonal x=" + x.str() + ": " + lhs.str() + " vs " + rhs.str();
                break;
            }
        }
    }

    const bool pass = mismatch.empty();
    const std::string summary = std::to_string(checked) + " grid points";
    return finish("lucas", {Param::num("n", n), Param::num("variant", variant)},
                  pass ? Value(summary) : Value(mismatch), Value(summary), pass, sw);
}

VerificationRecord verify_lucas(int n, int variant) {
    return verify_lucas(n, variant, BivariateGrid::for_degree(n));
}

VerificationRecord verify_rational_lucas(int n, LucasTopology variant) {
    if (n < 1) throw Error("verify_rational_lucas needs n >= 1");
    detail::Stopwatch sw;

    // (1+x)^k powers
    std::vector<QPoly> onepx{QPoly::constant(Rational(1))};
    QPoly base = QPoly::constant(Rational(1));
    base.add_term(1, Rational(1));
    for (int k = 1; k <= n; ++k) onepx.push_back(onepx.back() * base);

    QPoly lhs;
    for (int k = 0; 2 * k <= n; ++k) {
        Rational c(binomial(n - k, k));
        if (variant == LucasTopology::cycle) c *= Rational(n, n - k);
        if (k % 2) c = -c;
        lhs.add_scaled_shifted(onepx[n - 2 * k], c, k);  // (-x)^k (1+x)^{n-2k}
    }

    QPoly rhs;
    if (variant == LucasTopology::line) {
        for (int i = 0; i <= n; ++i) rhs.add_term(i, Rational(1));
    } else {
        rhs.add_term(0, Rational(1));
        rhs.add_term(n, Rational(1));
    }

    const bool pass = lhs == rhs;
    return finish("rational_lucas",
                  {Param::num("n", n),
                   Param::str("variant", variant == LucasTopology::line ? "line" : "cycle")},
                  std::move(lhs), std::move(rhs), pass, sw);
}

VerificationRecord verify_binet_integer_m(int n, int variant) {
    if (n < 1 || (variant != 1 && variant != 2)) throw Error("verify_binet needs n >= 1, variant 1|2");
    detail::Stopwatch sw;

    // polynomials in the formal variable m
    QPoly mp1 = QPoly::constant(Rational(1));
    mp1.add_term(1, Rational(1));                       // m + 1
    const QPoly mm = QPoly::monomial(Rational(1), 1);   // m
    const QPoly mmp1 = mm * mp1;                        // m(m+1)

    QPoly lhs;
    QPoly pw = QPoly::constant(Rational(1));
    for (int k = 0; 2 * k <= n; ++k) {
        Rational c(binomial(n - k, k));
        if (variant == 2) c *= Rational(n, n - k);
        lhs += pw * c;
        pw = pw * mmp1;
    }

    QPoly rhs;
    QPoly mp1_pow = QPoly::constant(Rational(1));
    QPoly negm_pow = QPoly::constant(Rational(1));
    const QPoly negm = QPoly::monomial(Rational(-1), 1);
    const int e = variant == 1 ? n + 1 : n;
    for (int i = 0; i < e; ++i) {
        mp1_pow = mp1_pow * mp1;
        negm_pow = negm_pow * negm;
    }
    if (variant == 1) {
        QPoly twomp1 = QPoly::constant(Rational(1));
        twomp1.add_term(1, Rational(2));  // 2m + 1
        auto [quotient, remainder] = poly_divmod(mp1_pow - negm_pow, twomp1);
        if (!remainder.is_zero())
            throw NonExactDivision("(m+1)^{n+1} - (-m)^{n+1} not divisible by 2m+1");
        rhs = std::move(quotient);
    } else {
        rhs = mp1_pow + negm_pow;
    }

    const bool pass = lhs == rhs;
    return finish("binet", {Param::num("n", n), Param::num("variant", variant)}, std::move(lhs),
                  std::move(rhs), pass, sw);
}

long omega_sum_first(int n) {
    Integer acc(0);
    for (int k = 0; 2 * k <= n; ++k) {
        Integer c = binomial(n - k, k);
        acc += k % 2 ? -c : c;
    }
    return acc.get_si();
}

Rational omega_sum_second(int n) {
    Rational acc(0);
    for (int k = 0; 2 * k <= n; ++k) {
        Rational c = Rational(n, n - k) * Rational(binomial(n - k, k));
        acc += k % 2 ? -c : c;
    }
    return acc;
}

VerificationRecord verify_omega_cases(int n) {
    if (n < 1) throw Error("verify_omega_cases needs n >= 1");
    detail::Stopwatch sw;

    const Rational s1(omega_sum_first(n));
    const Rational s2 = omega_sum_second(n);

    static const int table1[6] = {1, 1, 0, -1, -1, 0};
    static const int table2[6] = {2, 1, -1, -2, -1, 1};
    const Rational t1(table1[n % 6]);
    const Rational t2(table2[n % 6]);

    bool pass = s1 == t1 && s2 == t2;
    std::string note;
    for (int sign : {+1, -1}) {
        const QuadExt w = QuadExt::omega(sign);
        const QuadExt one = QuadExt::rational(-3, Rational(1));
        const QuadExt r1 = (one - w.pow(n + 1)) / ((one - w) * (one + w).pow(n));
        const QuadExt r2 = (one + w.pow(n)) / (one + w).pow(n);
        if (!r1.is_rational() || !r2.is_rational() || r1.a() != t1 || r2.a() != t2) {
            pass = false;
            note = " omega sign " + std::string(sign > 0 ? "+" : "-") + ": " + r1.str() + ", " +
                   r2.str();
        }
    }

    return finish("omega", {Param::num("n", n)},
                  Value("sum1=" + s1.str() + " sum2=" + s2.str() + note),
                  Value("table1=" + t1.str() + " table2=" + t2.str()), pass, sw);
}

VerificationRecord verify_sqrt5(int m, int n) {
    if (m < 1 || n < 1) throw Error("verify_sqrt5 needs m, n >= 1");
    detail::Stopwatch sw;

    Rational lhs(0);
    for_each_support(n, m, [&](const std::vector<int>& r) {
        Rational term(1);
        for (int k = 0; k < m; ++k) term *= Rational(binomial(n - r[k], r[(k + 1) % m]));
        lhs += term;
    });

    const QuadExt two = QuadExt::rational(5, Rational(2));
    const QuadExt t = QuadExt(5, Rational(-3), Rational(1));    // sqrt5 - 3
    const QuadExt u = QuadExt(5, Rational(-1), Rational(1));    // sqrt5 - 1
    const long e = static_cast<long>(m) * (n + 1);
    const QuadExt rhs =
        (two.pow(e) - t.pow(e)) / ((two.pow(m) - t.pow(m)) * u.pow(static_cast<long>(m) * n));

    const bool pass = rhs.is_rational() && rhs.a() == lhs;
    return finish("sqrt5", {Param::num("m", m), Param::num("n", n)}, lhs, rhs, pass, sw);
}

}  // namespace qv
