#include "qv/suite.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qv/bijections.hpp"
#include "qv/errors.hpp"
#include "qv/euler_families.hpp"
#include "qv/lagrange.hpp"
#include "qv/lucas_binet.hpp"
#include "qv/sampler.hpp"

namespace qv {

namespace {

using Job = std::function<VerificationRecord()>;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// grid helpers

std::vector<long> nums_or(const FamilyGrid& g, const std::string& key, std::vector<long> dflt) {
    auto it = g.nums.find(key);
    return it == g.nums.end() ? std::move(dflt) : it->second;
}

std::vector<std::string> enums_or(const FamilyGrid& g, const std::string& key,
                                  std::vector<std::string> dflt) {
    auto it = g.enums.find(key);
    return it == g.enums.end() ? std::move(dflt) : it->second;
}

std::vector<long> range(long lo, long hi) {
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

[[noreturn]] void config_error(const std::string& family, const std::string& what) {
    throw ConfigError("family '" + family + "': " + what);
}

Job guarded(std::string family, std::vector<Param> params, std::function<VerificationRecord()> f) {
    return [family = std::move(family), params = std::move(params), f = std::move(f)]() {
        try {
            return f();
        } catch (const std::exception& e) {
            VerificationRecord rec;
            rec.family = family;
            rec.params = params;
            rec.lhs = std::string("error: ") + e.what();
            rec.rhs = std::string();
            rec.pass = false;
            return rec;
        }
    };
}

// deterministic per-cell seed derivation
std::uint64_t cell_seed(std::uint64_t base, long a, long b, long c) {
    std::uint64_t h = base;
    for (std::uint64_t v : {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b),
                            static_cast<std::uint64_t>(c)}) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// ---------------------------------------------------------------------------
// family expansion

void expand_zeil(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long n : nums_or(g, "n", range(0, 60))) {
        if (n < 0) config_error("zeil", "n must be >= 0");
        for (const auto& v : enums_or(g, "variant", {"direct", "inverted"})) {
            if (v != "direct" && v != "inverted") config_error("zeil", "unknown variant " + v);
            const auto variant = v == "direct" ? ZeilVariant::direct : ZeilVariant::inverted;
            jobs.push_back(guarded("zeil", {Param::num("n", n), Param::str("variant", v)},
                                   [n, variant] { return verify_zeil(static_cast<int>(n), variant); }));
        }
    }
}

void expand_finite_euler(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long L : nums_or(g, "L", range(0, 20))) {
        if (L < 0) config_error("finite_euler", "L must be >= 0");
        for (long v : nums_or(g, "variant", {1, 2})) {
            if (v != 1 && v != 2) config_error("finite_euler", "variant must be 1 or 2");
            jobs.push_back(guarded("finite_euler",
                                   {Param::num("L", L), Param::num("variant", v)}, [L, v] {
                                       return verify_finite_euler(static_cast<int>(L),
                                                                  static_cast<int>(v));
                                   }));
        }
    }
}

void expand_pentagonal(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long D : nums_or(g, "D", {200})) {
        if (D < 0) config_error("pentagonal", "D must be >= 0");
        jobs.push_back(guarded("pentagonal", {Param::num("D", D)},
                               [D] { return verify_pentagonal_limit(static_cast<int>(D)); }));
    }
}

void expand_nrst(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long n : nums_or(g, "n", range(1, 12))) {
        if (n < 1) config_error("nrst", "n must be >= 1");
        for (long r : nums_or(g, "r", range(0, n)))
            for (long t : nums_or(g, "t", range(0, n))) {
                if (r < 0 || r > n || t < 0 || t > n)
                    config_error("nrst", "need 0 <= r, t <= n");
                for (const auto& v : enums_or(g, "variant", {"q", "q_inverse"})) {
                    if (v != "q" && v != "q_inverse") config_error("nrst", "unknown variant " + v);
                    const auto variant = v == "q" ? NrstVariant::q : NrstVariant::q_inverse;
                    jobs.push_back(guarded(
                        "nrst",
                        {Param::num("n", n), Param::num("r", r), Param::num("t", t),
                         Param::str("variant", v)},
                        [n, r, t, variant] {
                            return verify_nrst(static_cast<int>(n), static_cast<int>(r),
                                               static_cast<int>(t), variant);
                        }));
                }
            }
    }
}

void expand_chu(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    const auto alphas = nums_or(g, "alpha", range(-3, 3));
    const auto Ns = nums_or(g, "N", range(0, 5));
    const bool explicit_gamma = g.nums.count("gamma") != 0;
    for (long N : Ns) {
        if (N < 0) config_error("chu_vandermonde", "N must be >= 0");
        const auto gammas = explicit_gamma ? g.nums.at("gamma")
                                           : std::vector<long>{-N, -N - 1, -N - 2};
        for (long gamma : gammas) {
            if (gamma > -N)
                config_error("chu_vandermonde",
                             "gamma must be <= -N (degenerate denominators otherwise)");
            for (long alpha : alphas)
                jobs.push_back(guarded(
                    "chu_vandermonde",
                    {Param::num("alpha", alpha), Param::num("gamma", gamma), Param::num("N", N)},
                    [alpha, gamma, N] {
                        return verify_chu_vandermonde(static_cast<int>(alpha),
                                                      static_cast<int>(gamma),
                                                      static_cast<int>(N));
                    }));
        }
    }
}

void expand_multi_3m(const FamilyGrid& g, const SuiteConfig& cfg, std::vector<Job>& jobs) {
    const long samples = nums_or(g, "weight_vectors", {5}).front();
    if (samples < 0) config_error("multi_3m", "weight_vectors must be >= 0");
    for (long m : nums_or(g, "m", range(1, 2))) {
        if (m < 1) config_error("multi_3m", "m must be >= 1");
        for (long n : nums_or(g, "n", range(1, 4))) {
            if (n < 1) config_error("multi_3m", "n must be >= 1");
            // the all -1 vector (the constant closed form), then seeded samples
            for (long idx = 0; idx <= samples; ++idx) {
                std::vector<Rational> x(3 * m, Rational(-1));
                if (idx > 0) {
                    RationalSampler sampler(cell_seed(cfg.sample_seed, m, n, idx));
                    for (long j = 0; j < 3 * m; ++j)
                        if ((j + 1) % 3 != 0) x[j] = sampler.next();
                }
                jobs.push_back(guarded(
                    "multi_3m",
                    {Param::num("m", m), Param::num("n", n), Param::num("sample", idx)},
                    [m, n, x = std::move(x)] {
                        return verify_multi_3m(static_cast<int>(m), static_cast<int>(n), x);
                    }));
            }
        }
    }
}

void expand_multi_zeil(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long m : nums_or(g, "m", {1, 2, 4, 5})) {
        if (m < 1) config_error("multi_zeil", "m must be >= 1");
        if (m % 3 == 0)
            config_error("multi_zeil",
                         "m = " + std::to_string(m) + " is 0 (mod 3), outside this family's range");
        for (long n : nums_or(g, "n", range(1, 5))) {
            if (n < 1) config_error("multi_zeil", "n must be >= 1");
            jobs.push_back(guarded("multi_zeil", {Param::num("m", m), Param::num("n", n)},
                                   [m, n] {
                                       return verify_multi_zeil(static_cast<int>(m),
                                                                static_cast<int>(n));
                                   }));
        }
    }
}

void expand_three_ell(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long L : nums_or(g, "L", range(0, 2))) {
        if (L < 0) config_error("three_ell", "L must be >= 0");
        for (long m : nums_or(g, "m", range(1, 4))) {
            if (m < 1) config_error("three_ell", "m must be >= 1");
            for (long v : nums_or(g, "variant", {0, 1})) {
                if (v != 0 && v != 1) config_error("three_ell", "variant must be 0 or 1");
                jobs.push_back(guarded(
                    "three_ell",
                    {Param::num("L", L), Param::num("m", m), Param::num("variant", v)},
                    [L, m, v] {
                        return verify_3ell(static_cast<int>(L), static_cast<int>(m),
                                           static_cast<int>(v));
                    }));
            }
        }
    }
}

void expand_z_refined(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    const auto ms = nums_or(g, "m", {4, 5});
    for (long m : ms) {
        std::vector<long> default_s = m % 3 == 1 ? std::vector<long>{1, 2} : std::vector<long>{1, 3};
        for (long s : nums_or(g, "s", default_s)) {
            const bool case1 = m % 3 == 1 && m >= 4 && s % 3 != 0;
            const bool case2 = m % 3 == 2 && m >= 5 && s % 3 != 2;
            if (s < 1 || s > m || (!case1 && !case2))
                config_error("z_refined",
                             "(m=" + std::to_string(m) + ", s=" + std::to_string(s) +
                                 ") violates the congruence preconditions");
            for (long n : nums_or(g, "n", range(1, 4))) {
                if (n < 1) config_error("z_refined", "n must be >= 1");
                jobs.push_back(guarded(
                    "z_refined", {Param::num("m", m), Param::num("n", n), Param::num("s", s)},
                    [m, n, s] {
                        return verify_z_refined(static_cast<int>(m), static_cast<int>(n),
                                                static_cast<int>(s));
                    }));
            }
        }
    }
}

void expand_four_to_one(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long n : nums_or(g, "n", range(1, 6))) {
        if (n < 1) config_error("four_to_one", "n must be >= 1");
        for (long r5 : nums_or(g, "r5", range(0, n))) {
            if (r5 < 0 || r5 > n) config_error("four_to_one", "need 0 <= r5 <= n");
            jobs.push_back(guarded("four_to_one", {Param::num("n", n), Param::num("r5", r5)},
                                   [n, r5] {
                                       return verify_four_to_one_reduction(static_cast<int>(n),
                                                                           static_cast<int>(r5));
                                   }));
        }
    }
}

void expand_dejavu(const FamilyGrid& g, const SuiteConfig& cfg, std::vector<Job>& jobs) {
    const long points = nums_or(g, "points", {10}).front();
    if (points < 1) config_error("dejavu", "points must be >= 1");
    for (long m : nums_or(g, "m", range(1, 4))) {
        if (m < 1) config_error("dejavu", "m must be >= 1");
        for (long n : nums_or(g, "n", range(1, 4))) {
            if (n < 1) config_error("dejavu", "n must be >= 1");
            jobs.push_back(guarded(
                "dejavu", {Param::num("m", m), Param::num("n", n)},
                [m, n, points, seed = cfg.sample_seed] {
                    const auto pts = dejavu_sample_points(static_cast<int>(m),
                                                          cell_seed(seed, m, n, 0),
                                                          static_cast<std::size_t>(points));
                    return verify_dejavu(static_cast<int>(m), static_cast<int>(n), pts);
                }));
        }
    }
}

void expand_lucas(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long n : nums_or(g, "n", range(1, 10))) {
        if (n < 1) config_error("lucas", "n must be >= 1");
        for (long v : nums_or(g, "variant", {1, 2}))
            jobs.push_back(guarded("lucas", {Param::num("n", n), Param::num("variant", v)},
                                   [n, v] {
                                       return verify_lucas(static_cast<int>(n),
                                                           static_cast<int>(v));
                                   }));
    }
}

void expand_rational_lucas(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long n : nums_or(g, "n", range(1, 20))) {
        if (n < 1) config_error("rational_lucas", "n must be >= 1");
        for (const auto& v : enums_or(g, "variant", {"line", "cycle"})) {
            if (v != "line" && v != "cycle") config_error("rational_lucas", "unknown variant " + v);
            const auto variant = v == "line" ? LucasTopology::line : LucasTopology::cycle;
            jobs.push_back(guarded("rational_lucas",
                                   {Param::num("n", n), Param::str("variant", v)}, [n, variant] {
                                       return verify_rational_lucas(static_cast<int>(n), variant);
                                   }));
        }
    }
}

void expand_binet(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long n : nums_or(g, "n", range(1, 20))) {
        if (n < 1) config_error("binet", "n must be >= 1");
        for (long v : nums_or(g, "variant", {1, 2}))
            jobs.push_back(guarded("binet", {Param::num("n", n), Param::num("variant", v)},
                                   [n, v] {
                                       return verify_binet_integer_m(static_cast<int>(n),
                                                                     static_cast<int>(v));
                                   }));
    }
}

void expand_omega(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long n : nums_or(g, "n", range(1, 24))) {
        if (n < 1) config_error("omega", "n must be >= 1");
        jobs.push_back(guarded("omega", {Param::num("n", n)},
                               [n] { return verify_omega_cases(static_cast<int>(n)); }));
    }
}

void expand_sqrt5(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (long m : nums_or(g, "m", range(1, 3)))
        for (long n : nums_or(g, "n", range(1, 3))) {
            if (m < 1 || n < 1) config_error("sqrt5", "m and n must be >= 1");
            jobs.push_back(guarded("sqrt5", {Param::num("m", m), Param::num("n", n)}, [m, n] {
                return verify_sqrt5(static_cast<int>(m), static_cast<int>(n));
            }));
        }
}

TruncSeries random_polynomial(int m, int bound, int max_deg, RationalSampler& sampler,
                              bool unit_constant) {
    TruncSeries p = TruncSeries::constant(m, bound, Rational(1));
    std::vector<int> e(m, 0);
    // a dense-ish polynomial with small random coefficients
    std::function<void(int, int)> rec = [&](int k, int used) {
        if (k == m) {
            if (used == 0 && unit_constant) return;  // keep the constant term 1
            Rational c = sampler.next() - sampler.next();
            p.add_term(e, c);
            return;
        }
        for (int v = 0; v + used <= max_deg; ++v) {
            e[k] = v;
            rec(k + 1, used + v);
        }
        e[k] = 0;
    };
    rec(0, 0);
    return p;
}

void expand_lagrange(const FamilyGrid& g, const SuiteConfig& cfg, std::vector<Job>& jobs) {
    const long D = nums_or(g, "D", {cfg.degree_bound}).front();
    if (D < 1) config_error("lagrange", "D must be >= 1");
    for (long m : nums_or(g, "m", {1, 2})) {
        if (m < 1) config_error("lagrange", "m must be >= 1");
        jobs.push_back(guarded(
            "lagrange",
            {Param::str("system", "cyclic"), Param::num("m", m), Param::num("D", D)}, [m, D] {
                return verify_lagrange(
                    cyclic_phi_system(static_cast<int>(m), 2, static_cast<int>(D)), "cyclic");
            }));
    }
    jobs.push_back(guarded(
        "lagrange", {Param::str("system", "constant"), Param::num("m", 2), Param::num("D", D)},
        [D] {
            FunctionalSystem sys;
            sys.m = 2;
            sys.bound = static_cast<int>(D);
            sys.phi.assign(2, TruncSeries::constant(2, sys.bound, Rational(3)));
            sys.f = TruncSeries::variable(2, sys.bound, 0) *
                    TruncSeries::variable(2, sys.bound, 1);
            return verify_lagrange(sys, "constant");
        }));
    jobs.push_back(guarded(
        "lagrange", {Param::str("system", "random"), Param::num("m", 2), Param::num("D", D)},
        [D, seed = cfg.sample_seed] {
            RationalSampler sampler(cell_seed(seed, 97, D, 0));
            FunctionalSystem sys;
            sys.m = 2;
            sys.bound = static_cast<int>(D);
            sys.phi.push_back(random_polynomial(2, sys.bound, 2, sampler, true));
            sys.phi.push_back(random_polynomial(2, sys.bound, 2, sampler, true));
            sys.f = random_polynomial(2, sys.bound, 2, sampler, false);
            return verify_lagrange(sys, "random");
        }));
}

void expand_bijection(const FamilyGrid& g, const SuiteConfig&, std::vector<Job>& jobs) {
    for (const auto& which : enums_or(g, "check", {"theta", "phi"})) {
        if (which != "theta" && which != "phi") config_error("bijection", "check must be theta|phi");
        const auto kind = which == "theta" ? BijectionKind::theta : BijectionKind::phi;
        for (long n : nums_or(g, "n", range(2, 6))) {
            if (n < 2) config_error("bijection", "n must be >= 2");
            for (long m : nums_or(g, "m", range(1, 3))) {
                if (m < 1) config_error("bijection", "m must be >= 1");
                jobs.push_back(guarded(
                    "bijection",
                    {Param::num("n", n), Param::num("m", m), Param::str("check", which)},
                    [n, m, kind] {
                        return check_cardinalities(static_cast<int>(n), static_cast<int>(m), kind);
                    }));
            }
        }
    }
}

using Expander = void (*)(const FamilyGrid&, const SuiteConfig&, std::vector<Job>&);

const std::vector<std::pair<std::string, Expander>>& expanders() {
    static const std::vector<std::pair<std::string, Expander>> table = {
        {"zeil", expand_zeil},
        {"finite_euler", expand_finite_euler},
        {"pentagonal", expand_pentagonal},
        {"nrst", expand_nrst},
        {"chu_vandermonde", expand_chu},
        {"multi_3m", expand_multi_3m},
        {"multi_zeil", expand_multi_zeil},
        {"three_ell", expand_three_ell},
        {"z_refined", expand_z_refined},
        {"four_to_one", expand_four_to_one},
        {"dejavu", expand_dejavu},
        {"lucas", expand_lucas},
        {"rational_lucas", expand_rational_lucas},
        {"binet", expand_binet},
        {"omega", expand_omega},
        {"sqrt5", expand_sqrt5},
        {"lagrange", expand_lagrange},
        {"bijection", expand_bijection},
    };
    return table;
}

}  // namespace

std::vector<std::string> known_families() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : expanders()) out.push_back(name);
    return out;
}

// ---------------------------------------------------------------------------
// config parsing

namespace {

void parse_param(const std::string& family, const std::string& key, const nlohmann::json& v,
                 FamilyGrid& grid) {
    auto parse_range = [&](const std::string& s) -> bool {
        const auto dots = s.find("..");
        if (dots == std::string::npos) return false;
        try {
            std::size_t used_lo = 0, used_hi = 0;
            const std::string lo_s = s.substr(0, dots), hi_s = s.substr(dots + 2);
            const long lo = std::stol(lo_s, &used_lo);
            const long hi = std::stol(hi_s, &used_hi);
            if (used_lo != lo_s.size() || used_hi != hi_s.size()) return false;
            if (hi < lo) config_error(family, "empty range '" + s + "' for " + key);
            grid.nums[key] = range(lo, hi);
            return true;
        } catch (const std::invalid_argument&) {
            return false;
        } catch (const std::out_of_range&) {
            return false;
        }
    };

    if (v.is_number_integer()) {
        grid.nums[key] = {v.get<long>()};
    } else if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (!parse_range(s)) grid.enums[key] = {s};
    } else if (v.is_array()) {
        if (v.empty()) config_error(family, "empty value list for " + key);
        if (v.front().is_number_integer()) {
            std::vector<long> vals;
            for (const auto& e : v) {
                if (!e.is_number_integer())
                    config_error(family, "mixed value list for " + key);
                vals.push_back(e.get<long>());
            }
            grid.nums[key] = std::move(vals);
        } else {
            std::vector<std::string> vals;
            for (const auto& e : v) {
                if (!e.is_string()) config_error(family, "mixed value list for " + key);
                vals.push_back(e.get<std::string>());
            }
            grid.enums[key] = std::move(vals);
        }
    } else {
        config_error(family, "unsupported value type for " + key);
    }
}

FamilyGrid parse_family(const std::string& name, const nlohmann::json& params) {
    bool known = false;
    for (const auto& [fname, fn] : expanders()) known = known || fname == name;
    if (!known) throw ConfigError("unknown family '" + name + "'");
    if (!params.is_object()) config_error(name, "parameter table must be an object");
    FamilyGrid grid;
    grid.family = name;
    for (const auto& [key, value] : params.items()) {
        if (key == "family") continue;
        parse_param(name, key, value, grid);
    }
    return grid;
}

}  // namespace

SuiteConfig parse_config(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    SuiteConfig cfg;
    if (doc.contains("seed")) cfg.sample_seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("degree_bound")) {
        cfg.degree_bound = doc["degree_bound"].get<int>();
        if (cfg.degree_bound < 1) throw ConfigError("degree_bound must be >= 1");
    }
    if (doc.contains("jobs")) {
        cfg.parallelism = doc["jobs"].get<int>();
        if (cfg.parallelism < 1) throw ConfigError("jobs must be >= 1");
    }
    if (doc.contains("format")) {
        const auto f = doc["format"].get<std::string>();
        if (f == "text")
            cfg.output_format = ReportFormat::text;
        else if (f == "json")
            cfg.output_format = ReportFormat::json;
        else
            throw ConfigError("format must be text or json");
    }

    if (!doc.contains("families")) throw ConfigError("config has no families");
    const auto& fams = doc["families"];
    if (fams.is_object()) {
        for (const auto& [name, params] : fams.items())
            cfg.families.push_back(parse_family(name, params));
    } else if (fams.is_array()) {
        for (const auto& entry : fams) {
            if (!entry.is_object() || !entry.contains("family"))
                throw ConfigError("family array entries need a 'family' key");
            cfg.families.push_back(parse_family(entry["family"].get<std::string>(), entry));
        }
    } else {
        throw ConfigError("families must be an object or an array");
    }
    if (cfg.families.empty()) throw ConfigError("family list is empty");
    return cfg;
}

SuiteConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

SuiteConfig default_config() {
    SuiteConfig cfg;
    for (const auto& [name, fn] : expanders()) {
        if (name == "multi_zeil") {
            FamilyGrid a;
            a.family = name;
            a.nums["m"] = {1, 2, 4, 5};
            a.nums["n"] = range(1, 5);
            cfg.families.push_back(std::move(a));
            FamilyGrid b;
            b.family = name;
            b.nums["m"] = {7};
            b.nums["n"] = range(1, 3);
            cfg.families.push_back(std::move(b));
        } else {
            FamilyGrid g;
            g.family = name;
            cfg.families.push_back(std::move(g));
        }
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// runner

SuiteReport run_suite(const SuiteConfig& config) {
    if (config.families.empty()) throw ConfigError("family list is empty");
    detail::Stopwatch sw;

    std::vector<Job> jobs;
    for (const auto& grid : config.families) {
        bool found = false;
        for (const auto& [name, expand] : expanders()) {
            if (name == grid.family) {
                expand(grid, config, jobs);
                found = true;
                break;
            }
        }
        if (!found) throw ConfigError("unknown family '" + grid.family + "'");
    }

    std::vector<VerificationRecord> results(jobs.size());
    const int workers = std::max(1, std::min<int>(config.parallelism,
                                                  static_cast<int>(jobs.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= jobs.size()) return;
                    results[i] = jobs[i]();
                }
            });
        for (auto& t : pool) t.join();
    }

    SuiteReport report;
    report.records = std::move(results);
    std::stable_sort(report.records.begin(), report.records.end(), record_order);
    for (const auto& rec : report.records) (rec.pass ? report.passed : report.failed) += 1;
    report.wall_time = sw.elapsed();
    return report;
}

// ---------------------------------------------------------------------------
// report emission

namespace {

ordered_json value_json(const Value& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return r->to_fraction_string();
    if (const auto* x = std::get_if<QuadExt>(&v)) {
        ordered_json j;
        j["d"] = x->d();
        j["a"] = x->a().to_fraction_string();
        j["b"] = x->b().to_fraction_string();
        return j;
    }
    if (const auto* p = std::get_if<QPoly>(&v)) {
        ordered_json arr = ordered_json::array();
        for (const auto& [e, c] : p->terms())
            arr.push_back(ordered_json::array({e, c.to_fraction_string()}));
        return arr;
    }
    return std::get<std::string>(v);
}

std::string digest(const Value& v, std::size_t width) {
    std::string s = value_str(v);
    if (s.size() > width) s = s.substr(0, width - 3) + "...";
    return s;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.resize(width, ' ');
    return s;
}

std::string params_str(const std::vector<Param>& params) {
    std::string out;
    for (const auto& p : params) {
        if (!out.empty()) out += " ";
        out += p.name + "=" + p.rendered();
    }
    return out;
}

}  // namespace

std::string emit_report(const SuiteReport& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        ordered_json doc;
        doc["totals"] = {{"pass", report.passed}, {"fail", report.failed}};
        ordered_json records = ordered_json::array();
        for (const auto& rec : report.records) {
            ordered_json r;
            r["family"] = rec.family;
            ordered_json params;
            for (const auto& p : rec.params) {
                if (const long* num = std::get_if<long>(&p.value))
                    params[p.name] = *num;
                else
                    params[p.name] = std::get<std::string>(p.value);
            }
            r["params"] = std::move(params);
            r["pass"] = rec.pass;
            r["lhs"] = value_json(rec.lhs);
            r["rhs"] = value_json(rec.rhs);
            records.push_back(std::move(r));
        }
        doc["records"] = std::move(records);
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    os << pad("family", 16) << pad("params", 44) << pad("status", 8) << pad("lhs", 36)
       << pad("rhs", 36) << "\n";
    os << std::string(140, '-') << "\n";
    for (const auto& rec : report.records) {
        os << pad(rec.family, 16) << pad(params_str(rec.params), 44)
           << pad(rec.pass ? "pass" : "FAIL", 8) << pad(digest(rec.lhs, 34), 36)
           << pad(digest(rec.rhs, 34), 36) << "\n";
    }
    os << std::string(140, '-') << "\n";
    os << "pass " << report.passed << "  fail " << report.failed << "\n";
    return os.str();
}

}  // namespace qv
