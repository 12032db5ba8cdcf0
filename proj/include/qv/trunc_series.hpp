#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qv/errors.hpp"
#include "qv/rational.hpp"

namespace qv {

/// Multivariate power series in x_1..x_m with rational coefficients, truncated
/// at a total-degree bound. Ring operations drop everything above the bound,
/// so values with the same bound form a quotient ring and equality is exact.
class TruncSeries {
public:
    using Exponents = std::vector<int>;
    using term_map = std::map<Exponents, Rational>;

    TruncSeries(int num_vars, int bound) : num_vars_(num_vars), bound_(bound) {
        if (num_vars < 1 || bound < 0) throw Error("bad series shape");
    }

    static TruncSeries zero(int num_vars, int bound) { return TruncSeries(num_vars, bound); }
    static TruncSeries constant(int num_vars, int bound, Rational c) {
        TruncSeries s(num_vars, bound);
        s.add_term(Exponents(num_vars, 0), std::move(c));
        return s;
    }
    static TruncSeries variable(int num_vars, int bound, int i) {
        TruncSeries s(num_vars, bound);
        Exponents e(num_vars, 0);
        e.at(i) = 1;
        s.add_term(e, Rational(1));
        return s;
    }
    static TruncSeries monomial(int num_vars, int bound, Exponents e, Rational c) {
        TruncSeries s(num_vars, bound);
        s.add_term(std::move(e), std::move(c));
        return s;
    }

    int num_vars() const { return num_vars_; }
    int bound() const { return bound_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

    Rational coefficient(const Exponents& e) const {
        if (static_cast<int>(e.size()) != num_vars_) throw Error("exponent arity mismatch");
        if (total_degree(e) > bound_)
            throw BoundExceeded("coefficient request above truncation bound");
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const {
        auto it = terms_.find(Exponents(num_vars_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Exponents e, Rational c) {
        if (c.is_zero() || total_degree(e) > bound_) return;
        auto [it, fresh] = terms_.try_emplace(std::move(e), std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TruncSeries operator-() const {
        TruncSeries r(num_vars_, bound_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_arity(o);
        bound_ = std::min(bound_, o.bound_);
        retruncate();
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_arity(o);
        bound_ = std::min(bound_, o.bound_);
        retruncate();
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_arity(b);
        TruncSeries r(a.num_vars_, std::min(a.bound_, b.bound_));
        Exponents e(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_) {
            const int da = total_degree(ea);
            if (da > r.bound_) continue;
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) > r.bound_) continue;
                for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend TruncSeries operator*(const TruncSeries& s, const Rational& c) {
        TruncSeries r(s.num_vars_, s.bound_);
        if (c.is_zero()) return r;
        for (const auto& [e, sc] : s.terms_) r.terms_.emplace(e, sc * c);
        return r;
    }
    friend TruncSeries operator*(const Rational& c, const TruncSeries& s) { return s * c; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.num_vars_ == b.num_vars_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    /// Re-truncate to a smaller bound d.
    TruncSeries truncated_to(int d) const {
        if (d > bound_) throw BoundExceeded("cannot raise a truncation bound");
        TruncSeries r(num_vars_, d);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) <= d) r.terms_.emplace(e, c);
        return r;
    }

    /// Multiplicative inverse; exists iff the constant term is nonzero.
    TruncSeries inverse() const {
        Rational c0 = constant_term();
        if (c0.is_zero()) throw DivisionByZero("series with zero constant term is not invertible");
        // s = c0 (1 - t) with t of valuation >= 1, so 1/s = (1/c0) sum_i t^i.
        TruncSeries t = constant(num_vars_, bound_, Rational(1)) - *this * (Rational(1) / c0);
        TruncSeries acc = constant(num_vars_, bound_, Rational(1));
        TruncSeries p = acc;
        for (int i = 1; i <= bound_; ++i) {
            p *= t;
            if (p.is_zero()) break;
            acc += p;
        }
        return acc * (Rational(1) / c0);
    }

    TruncSeries pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        TruncSeries r = constant(num_vars_, bound_, Rational(1));
        TruncSeries base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            base *= base;
        }
        return r;
    }

    /// Termwise partial derivative with respect to x_i. Exact for inputs that
    /// are polynomials well inside the bound (the only use here).
    TruncSeries derivative(int i) const {
        TruncSeries r(num_vars_, bound_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d = e;
            d[i] -= 1;
            r.add_term(std::move(d), c * Rational(e[i]));
        }
        return r;
    }

    /// Substitute x_i := subs[i]; every substituted series must have zero
    /// constant term so the truncated composition is well-defined.
    TruncSeries compose(const std::vector<TruncSeries>& subs) const {
        if (static_cast<int>(subs.size()) != num_vars_) throw Error("composition arity mismatch");
        const int out_vars = subs.front().num_vars();
        int out_bound = bound_;
        for (const auto& s : subs) {
            if (s.num_vars() != out_vars) throw Error("composition arity mismatch");
            if (!s.constant_term().is_zero()) throw Error("composition requires zero constant terms");
            out_bound = std::min(out_bound, s.bound());
        }

        std::vector<std::vector<TruncSeries>> powers(num_vars_);
        for (int i = 0; i < num_vars_; ++i)
            powers[i].push_back(constant(out_vars, out_bound, Rational(1)));

        TruncSeries r(out_vars, out_bound);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) > out_bound) continue;  // substituted valuation >= total degree
            TruncSeries term = constant(out_vars, out_bound, c);
            for (int i = 0; i < num_vars_; ++i) {
                while (static_cast<int>(powers[i].size()) <= e[i])
                    powers[i].push_back(powers[i].back() * subs[i]);
                if (e[i] > 0) term *= powers[i][e[i]];
            }
            r += term;
        }
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            for (int i = 0; i < num_vars_; ++i)
                if (e[i] != 0) os << "*x" << (i + 1) << "^" << e[i];
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.str(); }

private:
    void check_arity(const TruncSeries& o) const {
        if (num_vars_ != o.num_vars_) throw Error("series arity mismatch");
    }
    void retruncate() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = total_degree(it->first) > bound_ ? terms_.erase(it) : std::next(it);
    }

    int num_vars_;
    int bound_;
    term_map terms_;
};

/// Exact quotient a/b in the truncated ring; requires an invertible divisor.
inline TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
    if (b.constant_term().is_zero()) throw NonExactDivision("divisor has zero constant term");
    return a * b.inverse();
}

/// Determinant of a square matrix of series, truncated at degree d.
/// Cofactor expansion up to 4x4, fraction-free (Bareiss) elimination beyond.
TruncSeries series_det(const std::vector<std::vector<TruncSeries>>& mat, int d);

}  // namespace qv
