#include "qv/lagrange.hpp"

#include <string>

#include "qv/cyclic_sum.hpp"
#include "qv/errors.hpp"
#include "qv/sampler.hpp"

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

void for_each_exponent_vector(int m, int bound, std::vector<int>& r, int k,
                              const std::function<void(const std::vector<int>&)>& visit) {
    if (k == m) {
        visit(r);
        return;
    }
    int used = 0;
    for (int i = 0; i < k; ++i) used += r[i];
    for (int v = 0; v + used <= bound; ++v) {
        r[k] = v;
        for_each_exponent_vector(m, bound, r, k + 1, visit);
    }
    r[k] = 0;
}

}  // namespace

void FunctionalSystem::validate() const {
    if (m < 1 || bound < 0) throw Error("functional system needs m >= 1, bound >= 0");
    if (static_cast<int>(phi.size()) != m) throw Error("need one phi per variable");
    for (const auto& p : phi) {
        if (p.num_vars() != m || p.bound() < bound) throw Error("phi arity/bound mismatch");
        if (p.constant_term().is_zero()) throw Error("phi_i(0,...,0) must be nonzero");
    }
    if (f.num_vars() != m || f.bound() < bound) throw Error("f arity/bound mismatch");
}

std::vector<TruncSeries> solve_functional_system(const FunctionalSystem& sys) {
    sys.validate();
    const int m = sys.m;
    const int D = sys.bound;

    std::vector<TruncSeries> x(m, TruncSeries::zero(m, D));
    for (int step = 0; step < D; ++step) {
        std::vector<TruncSeries> next;
        next.reserve(m);
        for (int i = 0; i < m; ++i)
            next.push_back(TruncSeries::variable(m, D, i) * sys.phi[i].truncated_to(D).compose(x));
        x = std::move(next);
    }
    return x;
}

TruncSeries compute_delta(const FunctionalSystem& sys) {
    sys.validate();
    const int m = sys.m;
    const int D = sys.bound;

    std::vector<std::vector<TruncSeries>> mat(m, std::vector<TruncSeries>(m, TruncSeries::zero(m, D)));
    for (int i = 0; i < m; ++i) {
        const TruncSeries phi_inv = sys.phi[i].truncated_to(D).inverse();
        for (int j = 0; j < m; ++j) {
            TruncSeries entry = -(TruncSeries::variable(m, D, j) *
                                  sys.phi[i].truncated_to(D).derivative(j) * phi_inv);
            if (i == j) entry += TruncSeries::constant(m, D, Rational(1));
            mat[i][j] = std::move(entry);
        }
    }
    return series_det(mat, D);
}

Rational lagrange_coefficient(const FunctionalSystem& sys, const std::vector<int>& r) {
    sys.validate();
    if (static_cast<int>(r.size()) != sys.m) throw Error("exponent arity mismatch");
    if (TruncSeries::total_degree(r) > sys.bound)
        throw BoundExceeded("|r| exceeds the truncation bound");

    TruncSeries prod = sys.f.truncated_to(sys.bound) * compute_delta(sys);
    for (int i = 0; i < sys.m; ++i)
        prod *= sys.phi[i].truncated_to(sys.bound).pow(r[i]);
    return prod.coefficient(r);
}

VerificationRecord verify_lagrange(const FunctionalSystem& sys, const std::string& label) {
    sys.validate();
    detail::Stopwatch sw;

    const std::vector<TruncSeries> x = solve_functional_system(sys);
    const TruncSeries fxu = sys.f.truncated_to(sys.bound).compose(x);

    long checked = 0;
    std::string mismatch;
    std::vector<int> r(sys.m, 0);
    for_each_exponent_vector(sys.m, sys.bound, r, 0, [&](const std::vector<int>& e) {
        if (!mismatch.empty()) return;
        const Rational lhs = fxu.coefficient(e);
        const Rational rhs = lagrange_coefficient(sys, e);
        ++checked;
        if (lhs != rhs) {
            std::string es;
            for (int v : e) es += (es.empty() ? "" : ",") + std::to_string(v);
            mismatch = "[u^(" + es + ")]: " + lhs.str() + " vs " + rhs.str();
        }
    });

    const bool pass = mismatch.empty();
    const std::string summary = std::to_string(checked) + " coefficients";
    return finish("lagrange",
                  {Param::str("system", label), Param::num("m", sys.m),
                   Param::num("D", sys.bound)},
                  pass ? Value(summary) : Value(mismatch), Value(summary), pass, sw);
}

TruncSeries dejavu_rhs_series(int m, int n, int bound) {
    // sum_{i<=n} (x_1...x_m)^i, exact polynomial form of the divided difference
    TruncSeries geo = TruncSeries::zero(m, bound);
    std::vector<int> all_ones(m, 1);
    TruncSeries prod_x = TruncSeries::monomial(m, bound, all_ones, Rational(1));
    TruncSeries pw = TruncSeries::constant(m, bound, Rational(1));
    for (int i = 0; i <= n; ++i) {
        geo += pw;
        if (static_cast<long>(m) * (i + 1) > bound) break;  // further powers vanish
        pw *= prod_x;
    }
    // prod_k (1+x_k)^{-n}
    for (int k = 0; k < m; ++k) {
        TruncSeries onepx =
            TruncSeries::constant(m, bound, Rational(1)) + TruncSeries::variable(m, bound, k);
        geo *= onepx.pow(-static_cast<long>(n));
    }
    return geo;
}

FunctionalSystem cyclic_phi_system(int m, int n, int bound) {
    FunctionalSystem sys;
    sys.m = m;
    sys.bound = bound;
    for (int i = 0; i < m; ++i) {
        const int prev = (i + m - 1) % m;
        TruncSeries a =
            TruncSeries::constant(m, bound, Rational(1)) + TruncSeries::variable(m, bound, prev);
        TruncSeries b =
            TruncSeries::constant(m, bound, Rational(1)) + TruncSeries::variable(m, bound, i);
        sys.phi.push_back(a * b);
    }
    sys.f = dejavu_rhs_series(m, n, bound);
    return sys;
}

VerificationRecord verify_dejavu(int m, int n,
                                 const std::vector<std::vector<Rational>>& points) {
    if (m < 1 || n < 1) throw Error("verify_dejavu needs m, n >= 1");
    detail::Stopwatch sw;

    long checked = 0;
    std::string mismatch;
    for (const auto& x : points) {
        if (static_cast<int>(x.size()) != m) throw Error("sample arity mismatch");
        const Rational lhs = eval_cyclic_rational_sum(m, n, x);

        Rational t(1);
        for (const auto& xk : x) t *= xk;
        Rational geo;
        if (t == Rational(1)) {
            geo = Rational(n + 1);  // removable singularity: sum of n+1 ones
        } else {
            geo = (Rational(1) - t.pow(n + 1)) / (Rational(1) - t);
        }
        Rational rhs = geo;
        for (const auto& xk : x) {
            const Rational onepx = Rational(1) + xk;
            if (onepx.is_zero()) throw PoleAtMinusOne();
            rhs /= onepx.pow(n);
        }

        ++checked;
        if (lhs != rhs) {
            std::string xs;
            for (const auto& xk : x) xs += (xs.empty() ? "" : ",") + xk.str();
            mismatch = "x=(" + xs + "): " + lhs.str() + " vs " + rhs.str();
            break;
        }
    }

    const bool pass = mismatch.empty();
    const std::string summary = std::to_string(checked) + " sample points";
    return finish("dejavu", {Param::num("m", m), Param::num("n", n)},
                  pass ? Value(summary) : Value(mismatch), Value(summary), pass, sw);
}

std::vector<std::vector<Rational>> dejavu_sample_points(int m, std::uint64_t seed,
                                                        std::size_t count) {
    RationalSampler sampler(seed);
    std::vector<std::vector<Rational>> out;
    // two points on the x_1...x_m = 1 face
    out.push_back(std::vector<Rational>(m, Rational(1)));
    if (count > 1) {
        std::vector<Rational> face(m, Rational(1));
        if (m >= 2) {
            const Rational t = sampler.next_where([](const Rational& r) { return r != Rational(1); });
            face[0] = t;
            face[1] = Rational(1) / t;
        }
        out.push_back(std::move(face));
    }
    while (out.size() < count) {
        std::vector<Rational> x;
        x.reserve(m);
        for (int i = 0; i < m; ++i) x.push_back(sampler.next());
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace qv
