#pragma once

#include "qv/quadext.hpp"
#include "qv/rational.hpp"

namespace qv {

/// Uniform construction of scalars from rationals, so the sum engine can run
/// one evaluation path for Rational- and QuadExt-weighted families.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static Rational one() { return Rational(1); }
    static Rational from_rational(Rational r) { return r; }
};

template <>
struct scalar_traits<QuadExt> {
    // The discriminant of a pure-rational element is immaterial; arithmetic
    // adopts the other operand's field.
    static QuadExt one() { return QuadExt(5, Rational(1), Rational(0)); }
    static QuadExt from_rational(Rational r) { return QuadExt(5, std::move(r), Rational(0)); }
};

}  // namespace qv
