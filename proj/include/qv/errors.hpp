#pragma once

#include <stdexcept>
#include <string>

namespace qv {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

struct DiscriminantMismatch : Error {
    explicit DiscriminantMismatch(const std::string& what) : Error(what) {}
};

struct ZeroAtNegativeExponent : Error {
    explicit ZeroAtNegativeExponent(const std::string& what = "evaluation at 0 with negative exponents")
        : Error(what) {}
};

struct NonSquare : Error {
    explicit NonSquare(const std::string& what = "matrix is not square") : Error(what) {}
};

struct PoleAtMinusOne : Error {
    explicit PoleAtMinusOne(const std::string& what = "weight -1 hits the (1+x) denominator") : Error(what) {}
};

struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& what) : Error(what) {}
};

struct GridTooSmall : Error {
    explicit GridTooSmall(const std::string& what) : Error(what) {}
};

struct NonExactDivision : Error {
    explicit NonExactDivision(const std::string& what) : Error(what) {}
};

struct BoundExceeded : Error {
    explicit BoundExceeded(const std::string& what) : Error(what) {}
};

struct ParameterCongruenceViolation : Error {
    explicit ParameterCongruenceViolation(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// theta produced something outside T / theta_inverse outside S (implementation bug).
struct NotInT : Error {
    explicit NotInT(const std::string& what) : Error(what) {}
};
struct NotInS : Error {
    explicit NotInS(const std::string& what) : Error(what) {}
};

}  // namespace qv
