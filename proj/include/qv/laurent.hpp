#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "qv/errors.hpp"
#include "qv/rational.hpp"

namespace qv {

/// Laurent polynomial in one formal variable q: finitely many terms
/// coeff * q^e with integer (possibly negative) exponents e. No zero
/// coefficients are stored, so equality is exact term-by-term equality.
template <class Coeff = Rational>
class LaurentPoly {
public:
    using coeff_type = Coeff;
    using term_map = std::map<long, Coeff>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(Coeff c) {
        LaurentPoly p;
        p.add_term(0, std::move(c));
        return p;
    }
    static LaurentPoly monomial(Coeff c, long e) {
        LaurentPoly p;
        p.add_term(e, std::move(c));
        return p;
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long degree() const {
        if (is_zero()) throw Error("degree of the zero polynomial");
        return terms_.rbegin()->first;
    }
    long valuation() const {
        if (is_zero()) throw Error("valuation of the zero polynomial");
        return terms_.begin()->first;
    }

    Coeff coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    void add_term(long e, Coeff c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(LaurentPoly p, const Coeff& c) {
        if (c.is_zero()) return zero();
        LaurentPoly r;
        for (const auto& [e, pc] : p.terms_) r.add_term(e, pc * c);
        return r;
    }
    friend LaurentPoly operator*(const Coeff& c, LaurentPoly p) { return std::move(p) * c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Multiply by q^e.
    LaurentPoly shifted(long e) const {
        LaurentPoly r;
        for (const auto& [ex, c] : terms_) r.terms_.emplace(ex + e, c);
        return r;
    }

    /// q -> 1/q: negate every exponent.
    LaurentPoly exponent_negated() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    /// q -> q^k for k >= 1.
    LaurentPoly exponent_scaled(long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
        return r;
    }

    /// Drop all terms with exponent > bound.
    LaurentPoly truncated_above(long bound) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            if (e > bound) break;
            r.terms_.emplace(e, c);
        }
        return r;
    }

    /// Accumulate scale * q^shift * p without building intermediates.
    template <class PCoeff>
    void add_scaled_shifted(const LaurentPoly<PCoeff>& p, const Coeff& scale, long shift) {
        if (scale.is_zero()) return;
        for (const auto& [e, c] : p.terms()) add_term(e + shift, scale * c);
    }

    /// Exact evaluation at q = v. A zero v is a pole when negative exponents exist.
    template <class Scalar = Coeff>
    Scalar eval(const Scalar& v) const {
        Scalar acc{};
        if (is_zero()) return acc;
        if (v.is_zero() && valuation() < 0) throw ZeroAtNegativeExponent();
        for (const auto& [e, c] : terms_) acc += v.pow(e) * c;
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (e != 0) os << "*q^" << e;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

private:
    term_map terms_;
};

/// Free-function spellings of the core operations.
template <class C>
LaurentPoly<C> laurent_mul(const LaurentPoly<C>& p, const LaurentPoly<C>& r) {
    return p * r;
}

template <class C>
C laurent_eval(const LaurentPoly<C>& p, const C& v) {
    return p.template eval<C>(v);
}

using QPoly = LaurentPoly<Rational>;

/// Long division for true polynomials (valuation >= 0) over the rationals.
/// Returns (quotient, remainder) with deg(remainder) < deg(divisor).
inline std::pair<QPoly, QPoly> poly_divmod(QPoly dividend, const QPoly& divisor) {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (divisor.valuation() < 0 || (!dividend.is_zero() && dividend.valuation() < 0))
        throw Error("poly_divmod requires nonnegative exponents");
    const long dd = divisor.degree();
    const Rational lead = divisor.coeff(dd);
    QPoly quotient;
    while (!dividend.is_zero() && dividend.degree() >= dd) {
        const long e = dividend.degree() - dd;
        const Rational c = dividend.coeff(dividend.degree()) / lead;
        quotient.add_term(e, c);
        dividend -= divisor.shifted(e) * c;
    }
    return {std::move(quotient), std::move(dividend)};
}

}  // namespace qv
