// Copyright 2026 The wsdbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Analysis pipelines behind the command-line tool and their JSON/CSV
 * serialization.
 *
 * JSON reports carry "schema": "wsd-report/1". Numbers are written in
 * shortest round-trip form in both JSON and CSV, so the two encodings parse
 * to identical doubles.
 */
#pragma once

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "wsd/bounds.hpp"
#include "wsd/enumerators.hpp"
#include "wsd/gf2.hpp"
#include "wsd/hilbert.hpp"
#include "wsd/zoo.hpp"

namespace wsd {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kReportSchema = "wsd-report/1";

/// Agreement required between the closed-form amplitudes and the simulator.
inline constexpr double kAmplitudeTolerance = 1e-10;
/// Agreement required between the two routes to the dual-component mass.
inline constexpr double kProjectionTolerance = 1e-8;
/// Largest n for which the state-vector projection route is cross-checked.
inline constexpr int kProjectionMaxLength = 12;

struct AnalysisOptions {
    int theta_steps = 101;
    int lambda_steps = 99;
    double tolerance = 1e-9;
    bool require_wsd = false;
    std::uint64_t seed = 0;
};

/// Worst case of one identity or inequality over its grid.
struct CheckResult {
    std::string id;
    bool evaluated = false;
    /// False when the code lies outside the hypotheses of the inequality (odd
    /// length for the lambda family); such results do not affect `passed`.
    bool within_hypotheses = true;
    bool passed = true;
    double worst_value = 0.0;
    double bound = 0.0;
    /// 1 - worst_value / bound for inequalities, bound - worst_value for
    /// agreement checks. Negative means violated.
    double worst_slack = 0.0;
    std::optional<double> worst_at; // theta or lambda of the worst case
    std::string note;
};

struct ReportDocument {
    std::string name;
    BinaryCode code = BinaryCode::zero(1);
    WeightDistribution distribution;
    CodeMetrics metrics;
    std::vector<CheckResult> checks;
    std::optional<BoundReport> bounds;
    std::vector<std::string> notes;
    AnalysisOptions options;

    bool passed() const {
        for (const auto& c : checks) {
            if (c.evaluated && c.within_hypotheses && !c.passed) {
                return false;
            }
        }
        return !bounds || !bounds->within_hypotheses || bounds->all_hold;
    }

    const CheckResult* check(std::string_view id) const {
        for (const auto& c : checks) {
            if (c.id == id) {
                return &c;
            }
        }
        return nullptr;
    }
};

/// `steps` equally spaced points strictly inside (0, 1).
inline std::vector<double> lambda_grid(int steps = 99) {
    if (steps < 1) {
        throw InputError("lambda grid needs at least one step");
    }
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(steps));
    for (int i = 1; i <= steps; ++i) {
        g.push_back(static_cast<double>(i) / (steps + 1));
    }
    return g;
}

namespace detail {

/// Largest value/bound seen over a grid.
struct WorstRatio {
    double value = 0.0;
    double bound = 1.0;
    double at = 0.0;
    bool any = false;

    void offer(double v, double b, double x) {
        if (!any || v / b > value / bound) {
            value = v;
            bound = b;
            at = x;
            any = true;
        }
    }

    CheckResult result(std::string id, bool passed) const {
        CheckResult r;
        r.id = std::move(id);
        r.evaluated = true;
        r.passed = passed;
        r.worst_value = value;
        r.bound = bound;
        r.worst_slack = 1.0 - value / bound;
        r.worst_at = at;
        return r;
    }
};

inline CheckResult skipped(std::string id, std::string why) {
    CheckResult r;
    r.id = std::move(id);
    r.note = std::move(why);
    return r;
}

inline CheckResult agreement(std::string id, double worst, double tol, std::optional<double> at) {
    CheckResult r;
    r.id = std::move(id);
    r.evaluated = true;
    r.worst_value = worst;
    r.bound = tol;
    r.worst_slack = tol - worst;
    r.passed = worst <= tol;
    r.worst_at = at;
    return r;
}

} // namespace detail

// ---------------------------------------------------------------------------
// individual checks

/**
 * Simulated S(theta)|C> against the closed-form amplitudes, and the norm of
 * the simulated state, at pi/4, pi/3 and one seeded random angle.
 *
 * Every amplitude is compared while 2^(n+k) <= 2^24; beyond that a seeded
 * sample of indices keeps the closed-form side at about 2^24 terms per angle.
 */
inline std::vector<CheckResult> check_closed_form(const BinaryCode& code, const AnalysisOptions& opts) {
    const int n = code.length();
    const int k = code.dimension();
    if (n > kStateCap) {
        return {detail::skipped("closed_form_amplitude", "n exceeds state-vector cap"),
                detail::skipped("norm_preservation", "n exceeds state-vector cap")};
    }
    CounterRng rng(opts.seed);
    const double random_theta = std::numbers::pi * static_cast<double>(rng.next() >> 11) * 0x1p-53;
    const std::vector<double> thetas{std::numbers::pi / 4, std::numbers::pi / 3, random_theta};

    std::vector<Word> sample;
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (n + k <= 24) {
        for (Word a = 0; a < dim; ++a) {
            sample.push_back(a);
        }
    } else {
        const std::uint64_t count = std::max<std::uint64_t>(64, (std::uint64_t{1} << 24) >> k);
        for (std::uint64_t i = 0; i < count; ++i) {
            sample.push_back(rng.next() & (dim - 1));
        }
    }

    const auto state = code_state(code);
    const double norm_factor = std::pow(2.0, -0.5 * k);
    double worst_amp = 0.0;
    double worst_norm = 0.0;
    double amp_at = thetas.front();
    double norm_at = thetas.front();
    for (double theta : thetas) {
        const auto out = apply_s_theta(state, theta);
        const double dn = std::abs(out.norm() - 1.0);
        if (dn >= worst_norm) {
            worst_norm = dn;
            norm_at = theta;
        }
        for (Word a : sample) {
            CompensatedSum s;
            for_each_codeword(code, [&](Word c) { s.add(closed_form_amplitude(c, a, n, theta)); });
            const double diff = std::abs(out[a] - std::complex<double>(norm_factor * s.value(), 0.0));
            if (diff > worst_amp) {
                worst_amp = diff;
                amp_at = theta;
            }
        }
    }
    auto amp = detail::agreement("closed_form_amplitude", worst_amp, kAmplitudeTolerance, amp_at);
    amp.note = std::to_string(sample.size()) + " amplitudes per angle";
    return {amp, detail::agreement("norm_preservation", worst_norm, opts.tolerance, norm_at)};
}

inline CheckResult check_dual_mass(const DualMassEvaluator& mass, std::span<const double> grid, double tol) {
    detail::WorstRatio worst;
    for (double theta : grid) {
        worst.offer(mass(theta), 1.0, theta);
    }
    return worst.result("dual_component_mass", worst.value <= 1.0 + tol);
}

/// Dual-component mass from the combinatorial sum versus projecting the
/// simulated state onto the basis vectors indexed by the dual code.
inline CheckResult check_mass_projection(const BinaryCode& code, const DualMassEvaluator& mass,
                                         std::span<const double> grid) {
    if (code.length() > kProjectionMaxLength) {
        return detail::skipped("dual_mass_projection", "n exceeds projection cross-check cap");
    }
    const auto state = code_state(code);
    const auto dual = dual_code(code);
    double worst = 0.0;
    double at = grid.empty() ? 0.0 : grid.front();
    for (double theta : grid) {
        const double d = std::abs(mass(theta) - projected_mass(apply_s_theta(state, theta), dual));
        if (d > worst) {
            worst = d;
            at = theta;
        }
    }
    return detail::agreement("dual_mass_projection", worst, kProjectionTolerance, at);
}

inline CheckResult check_self_dual_sum(const BinaryCode& code, std::span<const double> grid, double tol) {
    const SelfDualSumEvaluator sum(code);
    detail::WorstRatio worst;
    for (double theta : grid) {
        worst.offer(sum(theta), sum.bound(), theta);
    }
    return worst.result("self_dual_sum", worst.value <= worst.bound + tol);
}

inline CheckResult check_enumerator_inequality(const BinaryCode& code, const WeightDistribution& dist,
                                               std::span<const double> grid, double tol) {
    const double bound = enumerator_inequality_bound(code.length());
    detail::WorstRatio worst;
    for (double theta : grid) {
        worst.offer(enumerator_inequality(code, dist, theta), bound, theta);
    }
    return worst.result("enumerator_inequality", worst.value <= bound * (1.0 + tol));
}

inline CheckResult check_lambda_family(const WeightDistribution& dist, std::span<const double> grid) {
    detail::WorstRatio worst;
    bool all = true;
    for (double lambda : grid) {
        const auto r = lambda_family_check(dist, lambda);
        all = all && r.holds;
        worst.offer(r.lhs, r.rhs, lambda);
    }
    auto out = worst.result("lambda_family", all);
    out.within_hypotheses = dist.n % 2 == 0;
    if (!out.within_hypotheses) {
        out.note = "odd length: outside derivation hypotheses, informational only";
    }
    return out;
}

/// Transformed distribution equals the enumerated dual distribution, and the
/// transform is an involution.
inline CheckResult check_macwilliams(const BinaryCode& code, const WeightDistribution& dist) {
    const int n = code.length();
    const int k = code.dimension();
    const auto transformed = macwilliams_transform(dist, k);
    int mismatches = macwilliams_transform(transformed, n - k) == dist ? 0 : 1;
    CheckResult r;
    r.id = "macwilliams";
    r.evaluated = true;
    if (n - k <= kEnumerationCap) {
        mismatches += transformed == weight_distribution(dual_code(code)) ? 0 : 1;
    } else {
        r.note = "dual too large to enumerate; involution only";
    }
    r.worst_value = mismatches;
    r.bound = 0.0;
    r.worst_slack = -mismatches;
    r.passed = mismatches == 0;
    return r;
}

inline CheckResult check_expected_distribution(const WeightDistribution& actual, const WeightDistribution& expected) {
    CheckResult r;
    r.id = "expected_distribution";
    r.evaluated = true;
    r.passed = actual == expected;
    r.worst_value = r.passed ? 0.0 : 1.0;
    r.worst_slack = -r.worst_value;
    return r;
}

// ---------------------------------------------------------------------------
// pipelines

/**
 * Metrics, distribution, every applicable check and, for weakly self-dual
 * codes, the per-weight bound comparison.
 *
 * Throws CapacityError when the code is too large to enumerate and
 * PreconditionError when `require_wsd` is set and the code is not weakly
 * self-dual.
 */
inline ReportDocument analyze_code(std::string name, const BinaryCode& code, const AnalysisOptions& opts) {
    ReportDocument doc;
    doc.name = std::move(name);
    doc.code = code;
    doc.options = opts;
    doc.distribution = weight_distribution(code);
    doc.metrics = code_metrics(code, doc.distribution);
    if (opts.require_wsd && !doc.metrics.weakly_self_dual) {
        throw PreconditionError("code '" + doc.name + "' is not weakly self-dual");
    }

    const auto thetas = theta_grid(opts.theta_steps);
    for (auto& c : check_closed_form(code, opts)) {
        doc.checks.push_back(std::move(c));
    }
    const DualMassEvaluator mass(code);
    doc.checks.push_back(check_dual_mass(mass, thetas, opts.tolerance));
    doc.checks.push_back(check_mass_projection(code, mass, thetas));
    doc.checks.push_back(check_macwilliams(code, doc.distribution));

    if (doc.metrics.weakly_self_dual) {
        doc.checks.push_back(check_self_dual_sum(code, thetas, opts.tolerance));
        doc.checks.push_back(check_enumerator_inequality(code, doc.distribution, thetas, opts.tolerance));
        doc.checks.push_back(check_lambda_family(doc.distribution, lambda_grid(opts.lambda_steps)));
        doc.bounds = tightest_bound_report(code, doc.distribution, doc.metrics);
        if (code.length() % 2) {
            doc.notes.push_back("odd length: weight bounds reported but outside derivation hypotheses");
        }
    } else {
        for (const char* id : {"self_dual_sum", "enumerator_inequality", "lambda_family"}) {
            doc.checks.push_back(detail::skipped(id, "code is not weakly self-dual"));
        }
        doc.notes.push_back("code is not weakly self-dual: weight bounds not applicable");
    }
    doc.notes.push_back("BCH-dual and subfield-subcode bounds are not evaluated: their constants are unspecified");
    return doc;
}

struct VerifySummary {
    std::vector<ReportDocument> reports;

    bool passed() const {
        return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    }

    /// Smallest slack per check id across all evaluated, in-hypothesis results.
    std::map<std::string, double> worst_slacks() const {
        std::map<std::string, double> out;
        for (const auto& r : reports) {
            for (const auto& c : r.checks) {
                if (!c.evaluated || !c.within_hypotheses) {
                    continue;
                }
                auto [it, fresh] = out.emplace(c.id, c.worst_slack);
                if (!fresh) {
                    it->second = std::min(it->second, c.worst_slack);
                }
            }
        }
        return out;
    }
};

/// Runs the full suite over every zoo code in zoo order, validating each
/// entry's expected distribution when it has one.
inline VerifySummary verify_zoo(const AnalysisOptions& opts) {
    VerifySummary s;
    for (const auto& e : zoo()) {
        auto doc = analyze_code(e.name, e.code, opts);
        if (e.expected) {
            doc.checks.push_back(check_expected_distribution(doc.distribution, *e.expected));
        }
        s.reports.push_back(std::move(doc));
    }
    return s;
}

struct CurveRow {
    int w = 0;
    double log2_entropy = 0.0;
    double log2_sqrt_e = 0.0;
    std::optional<double> log2_doubly_even;
    double log2_baseline = 0.0;
};

inline constexpr int kCurveMaxLength = 1'000'000;

/**
 * Formula-only bound curves for w = 1 .. n/2 - 1.
 *
 * The doubly-even column needs the minimum distance `d`; the baseline uses
 * dimension `k` (default n/2). Binomials are exact up to n = 4096 and from
 * lgamma beyond.
 */
inline std::vector<CurveRow> bound_curves(int n, std::optional<int> d, std::optional<int> k = std::nullopt) {
    if (n < 2 || n % 2 || n > kCurveMaxLength) {
        throw DomainError("bound curves need even n in [2, " + std::to_string(kCurveMaxLength) + "]");
    }
    if (d && (*d <= 0 || 2 * *d > n)) {
        throw DomainError("minimum distance must satisfy 0 < d <= n/2");
    }
    const int dim = k.value_or(n / 2);
    if (dim < 0 || dim > n) {
        throw DomainError("dimension must satisfy 0 <= k <= n");
    }
    std::vector<CurveRow> rows;
    BigInt binom = 1; // C(n, w), advanced incrementally
    for (int w = 1; 2 * w < n; ++w) {
        CurveRow r;
        r.w = w;
        r.log2_entropy = bound_entropy(n, w).log2_value;
        r.log2_sqrt_e = bound_sqrt_e(n, w).log2_value;
        if (d) {
            const auto b = doubly_even_bound(n, w, static_cast<double>(*d) / n);
            if (b.applicable) {
                r.log2_doubly_even = b.log2_value;
            }
        }
        double log2_binom = 0.0;
        if (n <= 4096) {
            binom = binom * (n - w + 1) / w;
            log2_binom = log2_big(binom);
        } else {
            log2_binom = (std::lgamma(n + 1.0) - std::lgamma(w + 1.0) - std::lgamma(n - w + 1.0)) / std::numbers::ln2;
        }
        r.log2_baseline = log2_binom - (n - dim);
        rows.push_back(r);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// serialization

inline std::string format_number(double v) {
    if (!std::isfinite(v)) {
        return "NA";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

inline nlohmann::json optional_number(const std::optional<double>& v) {
    return v && std::isfinite(*v) ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json to_json(const CheckResult& c) {
    nlohmann::json j{{"id", c.id}, {"evaluated", c.evaluated}};
    if (c.evaluated) {
        j["within_hypotheses"] = c.within_hypotheses;
        j["passed"] = c.passed;
        j["worst_value"] = c.worst_value;
        j["bound"] = c.bound;
        j["worst_slack"] = c.worst_slack;
        j["worst_at"] = optional_number(c.worst_at);
    }
    if (!c.note.empty()) {
        j["note"] = c.note;
    }
    return j;
}

inline nlohmann::json to_json(const BoundRow& r) {
    auto b = [](const BoundValue& v) { return v.applicable ? nlohmann::json(v.log2_value) : nlohmann::json(nullptr); };
    return {{"w", r.w},
            {"A_w", r.count},
            {"zero_count", r.zero_count},
            {"log2_bound_eq16", b(r.entropy)},
            {"log2_bound_eq17", b(r.sqrt_e)},
            {"log2_bound_eq1", b(r.doubly_even)},
            {"log2_baseline", r.log2_baseline},
            {"baseline", r.baseline},
            {"min_slack", optional_number(r.min_slack())},
            {"holds", r.holds}};
}

inline nlohmann::json to_json(const ReportDocument& doc) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : doc.checks) {
        checks.push_back(to_json(c));
    }
    nlohmann::json rows = nlohmann::json::array();
    if (doc.bounds) {
        for (const auto& r : doc.bounds->rows) {
            rows.push_back(to_json(r));
        }
    }
    const auto& m = doc.metrics;
    return {
        {"schema", kReportSchema},
        {"tool_version", kToolVersion},
        {"config",
         {{"theta_steps", doc.options.theta_steps},
          {"lambda_steps", doc.options.lambda_steps},
          {"tolerance", doc.options.tolerance},
          {"require_wsd", doc.options.require_wsd},
          {"seed", doc.options.seed}}},
        {"code",
         {{"name", doc.name},
          {"n", doc.code.length()},
          {"k", doc.code.dimension()},
          {"d", m.d},
          {"delta", {{"num", m.delta.num}, {"den", m.delta.den}, {"value", m.delta.value()}}},
          {"weakly_self_dual", m.weakly_self_dual},
          {"doubly_even", m.doubly_even},
          {"self_dual", m.weakly_self_dual && 2 * doc.code.dimension() == doc.code.length()},
          {"distribution", doc.distribution.counts}}},
        {"grid",
         {{"theta", {{"steps", doc.options.theta_steps}, {"lo", 0.01}, {"hi", std::numbers::pi - 0.01},
                     {"extra", {std::numbers::pi / 4, std::numbers::pi / 2}}}},
          {"lambda", {{"steps", doc.options.lambda_steps}}}}},
        {"checks", checks},
        {"bounds",
         doc.bounds ? nlohmann::json{{"within_hypotheses", doc.bounds->within_hypotheses},
                                     {"doubly_even_self_dual", doc.bounds->doubly_even_self_dual},
                                     {"all_hold", doc.bounds->all_hold},
                                     {"rows", rows}}
                    : nlohmann::json(nullptr)},
        {"notes", doc.notes},
        {"passed", doc.passed()},
    };
}

inline constexpr std::string_view kReportCsvHeader =
    "w,A_w,log2_bound_eq16,log2_bound_eq17,log2_bound_eq1,log2_baseline,min_slack";

/// One row per even weight in (0, n/2); "NA" marks inapplicable bounds and
/// undefined slacks.
inline std::string to_csv(const ReportDocument& doc) {
    std::ostringstream os;
    os << kReportCsvHeader << '\n';
    if (!doc.bounds) {
        return os.str();
    }
    auto b = [](const BoundValue& v) { return v.applicable ? format_number(v.log2_value) : std::string("NA"); };
    for (const auto& r : doc.bounds->rows) {
        const auto slack = r.min_slack();
        os << r.w << ',' << r.count << ',' << b(r.entropy) << ',' << b(r.sqrt_e) << ',' << b(r.doubly_even) << ','
           << format_number(r.log2_baseline) << ',' << (slack ? format_number(*slack) : std::string("NA")) << '\n';
    }
    return os.str();
}

inline std::string curves_to_csv(const std::vector<CurveRow>& rows) {
    std::ostringstream os;
    os << "w,log2_bound_eq16,log2_bound_eq17,log2_bound_eq1,log2_baseline\n";
    for (const auto& r : rows) {
        os << r.w << ',' << format_number(r.log2_entropy) << ',' << format_number(r.log2_sqrt_e) << ','
           << (r.log2_doubly_even ? format_number(*r.log2_doubly_even) : std::string("NA")) << ','
           << format_number(r.log2_baseline) << '\n';
    }
    return os.str();
}

/// Two-column (w, value) table for one curve: eq16, eq17, eq1 or baseline.
/// Weights where the curve is undefined are omitted.
inline std::string curve_to_csv(const std::vector<CurveRow>& rows, std::string_view curve) {
    std::ostringstream os;
    os << "w,log2_" << curve << '\n';
    for (const auto& r : rows) {
        std::optional<double> v;
        if (curve == "eq16") {
            v = r.log2_entropy;
        } else if (curve == "eq17") {
            v = r.log2_sqrt_e;
        } else if (curve == "eq1") {
            v = r.log2_doubly_even;
        } else if (curve == "baseline") {
            v = r.log2_baseline;
        } else {
            throw InputError("unknown curve '" + std::string(curve) + "'");
        }
        if (v) {
            os << r.w << ',' << format_number(*v) << '\n';
        }
    }
    return os.str();
}

inline nlohmann::json curves_to_json(int n, std::optional<int> d, int k, const std::vector<CurveRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"w", r.w},
                       {"log2_bound_eq16", r.log2_entropy},
                       {"log2_bound_eq17", r.log2_sqrt_e},
                       {"log2_bound_eq1", optional_number(r.log2_doubly_even)},
                       {"log2_baseline", r.log2_baseline}});
    }
    return {{"schema", "wsd-curves/1"},
            {"tool_version", kToolVersion},
            {"n", n},
            {"d", d ? nlohmann::json(*d) : nlohmann::json(nullptr)},
            {"k", k},
            {"rows", arr}};
}

inline nlohmann::json expected_json(const ZooEntry& e, const WeightDistribution& dist) {
    return {{"name", e.name},
            {"n", e.code.length()},
            {"k", e.code.dimension()},
            {"provenance", e.provenance},
            {"distribution", dist.counts}};
}

} // namespace wsd
