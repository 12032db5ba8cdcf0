#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qv/laurent.hpp"
#include "qv/quadext.hpp"
#include "qv/rational.hpp"

namespace qv {

/// Result value of a verifier: an exact polynomial, an exact scalar, or a
/// rendered summary for aggregate checks (grids, coefficient sweeps).
using Value = std::variant<Rational, QuadExt, QPoly, std::string>;

struct Param {
    std::string name;
    std::variant<long, std::string> value;

    static Param num(std::string name, long v) { return {std::move(name), v}; }
    static Param str(std::string name, std::string v) { return {std::move(name), std::move(v)}; }

    std::string rendered() const {
        if (const long* v = std::get_if<long>(&value)) return std::to_string(*v);
        return std::get<std::string>(value);
    }

    friend bool operator==(const Param& a, const Param& b) {
        return a.name == b.name && a.value == b.value;
    }
    friend bool operator<(const Param& a, const Param& b) {
        if (a.name != b.name) return a.name < b.name;
        return a.value < b.value;  // longs order numerically, before strings
    }
};

/// One verified identity instance: both sides recorded exactly, pass iff they
/// are equal. The elapsed time is informational and never serialized into
/// deterministic reports.
struct VerificationRecord {
    std::string family;
    std::vector<Param> params;
    Value lhs;
    Value rhs;
    bool pass = false;
    std::chrono::duration<double> elapsed{0};
};

inline std::string value_str(const Value& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return r->str();
    if (const auto* x = std::get_if<QuadExt>(&v)) return x->str();
    if (const auto* p = std::get_if<QPoly>(&v)) return p->str();
    return std::get<std::string>(v);
}

/// Fixed ordering of report rows: family, then parameter list.
inline bool record_order(const VerificationRecord& a, const VerificationRecord& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.params < b.params;
}

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::chrono::duration<double> elapsed() const {
        return std::chrono::steady_clock::now() - start_;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

}  // namespace qv
