#pragma once

#include <ostream>
#include <string>

#include "qv/rational.hpp"

namespace qv {

/// Element a + b*sqrt(d) of the quadratic field Q(sqrt(d)), d in {5, -3}.
/// d = -3 houses the cube root of unity omega = (-1 + sqrt(-3))/2,
/// d = 5 houses the golden-ratio constants. Mixing discriminants throws.
class QuadExt {
public:
    QuadExt() : d_(5) {}
    QuadExt(int d, Rational a, Rational b) : d_(d), a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt rational(int d, Rational a) { return QuadExt(d, std::move(a), Rational(0)); }
    /// sqrt(d) itself.
    static QuadExt root(int d) { return QuadExt(d, Rational(0), Rational(1)); }
    /// omega = (-1 + sqrt(-3))/2; pass sign=-1 for the conjugate choice.
    static QuadExt omega(int sign = +1) {
        return QuadExt(-3, Rational(-1, 2), Rational(sign >= 0 ? 1 : -1, 2));
    }

    int d() const { return d_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt conj() const { return QuadExt(d_, a_, -b_); }
    /// Field norm a^2 - d b^2, a rational.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadExt operator-() const { return QuadExt(d_, -a_, -b_); }

    QuadExt& operator+=(const QuadExt& o) {
        align(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        align(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        align(o);
        Rational na = a_ * o.a_ + Rational(d_) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    /// Exact division via conjugate rationalization.
    QuadExt& operator/=(const QuadExt& o) {
        align(o);
        if (o.is_zero()) throw DivisionByZero("quadratic field division by zero");
        Rational n = o.norm();  // nonzero: d is not a rational square
        *this *= o.conj();
        a_ /= n;
        b_ /= n;
        return *this;
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend QuadExt operator*(QuadExt x, const Rational& c) {
        x.a_ *= c;
        x.b_ *= c;
        return x;
    }
    friend QuadExt operator*(const Rational& c, QuadExt x) { return std::move(x) * c; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.b_.is_zero() || y.b_.is_zero()) return x.a_ == y.a_ && x.b_ == y.b_;
        x.check(y);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt pow(long e) const {
        if (e < 0) return (QuadExt::rational(d_, 1) / *this).pow(-e);
        QuadExt r = QuadExt::rational(d_, 1);
        QuadExt base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            base *= base;
        }
        return r;
    }

    std::string str() const {
        std::string root = d_ == -3 ? "sqrt(-3)" : "sqrt(" + std::to_string(d_) + ")";
        return a_.str() + " + " + b_.str() + "*" + root;
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

private:
    void check(const QuadExt& o) const {
        if (d_ != o.d_)
            throw DiscriminantMismatch("mixed discriminants " + std::to_string(d_) + " and " +
                                       std::to_string(o.d_));
    }
    // Rational elements (b = 0) belong to every field; adopt the other
    // operand's discriminant, so mismatch fires only when two genuinely
    // irrational elements of different fields meet.
    void align(const QuadExt& o) {
        if (b_.is_zero())
            d_ = o.d_;
        else if (!o.b_.is_zero())
            check(o);
    }

    int d_;
    Rational a_, b_;
};

}  // namespace qv
