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
 * Upper bounds on A_w for weakly self-dual codes, the doubly-even self-dual
 * comparison bound, and the random-code binomial baseline.
 *
 * Every bound is carried as log2 of its value so that formula-only curves for
 * n in the thousands stay finite.
 */
#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wsd/enumerators.hpp"
#include "wsd/errors.hpp"
#include "wsd/gf2.hpp"

namespace wsd {

/// Relative slack allowed when comparing an exact count with a bound.
inline constexpr double kBoundTolerance = 1e-9;

/// H2(x) = -x log2 x - (1-x) log2(1-x), with H2(0) = H2(1) = 0.
inline double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("binary entropy argument outside [0, 1]");
    }
    if (x == 0.0 || x == 1.0) {
        return 0.0;
    }
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

struct BoundValue {
    double log2_value = 0.0;
    bool applicable = false;
    std::string reason;

    double value() const noexcept { return std::exp2(log2_value); }

    static BoundValue of(double log2v) { return {log2v, true, {}}; }
    static BoundValue not_applicable(std::string why) { return {0.0, false, std::move(why)}; }
};

namespace detail {

inline std::optional<std::string> strict_half_range(int n, int w) {
    if (n < 1) {
        return "length must be positive";
    }
    if (w <= 0 || 2 * w >= n) {
        return "weight " + std::to_string(w) + " outside 0 < w < n/2 for n = " + std::to_string(n);
    }
    return std::nullopt;
}

} // namespace detail

/// A_w <= 2^((n/2) H2(w/n)) for 0 < w < n/2.
inline BoundValue bound_entropy(int n, int w) {
    if (auto why = detail::strict_half_range(n, w)) {
        return BoundValue::not_applicable(*why);
    }
    return BoundValue::of(0.5 * n * binary_entropy(static_cast<double>(w) / n));
}

/// A_w <= sqrt(e) (n - w + 1)^(w/2) for 0 < w < n/2.
inline BoundValue bound_sqrt_e(int n, int w) {
    if (auto why = detail::strict_half_range(n, w)) {
        return BoundValue::not_applicable(*why);
    }
    return BoundValue::of(0.5 * std::numbers::log2e + 0.5 * w * std::log2(static_cast<double>(n - w + 1)));
}

// ---------------------------------------------------------------------------
// lambda family

struct LambdaCheck {
    double lhs = 0.0; // sum_j A_{2j} lambda^j
    double rhs = 0.0; // (1 + lambda)^(n/2)
    bool holds = false;
    /// False for odd n: the derivation assumes n even, so a result there is
    /// informational only.
    bool within_hypotheses = false;
};

inline void require_even_support(const WeightDistribution& dist) {
    if (dist.has_odd_weights()) {
        throw PreconditionError("distribution has codewords of odd weight; code is not weakly self-dual");
    }
}

inline LambdaCheck lambda_family_check(const WeightDistribution& dist, double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw DomainError("lambda must lie in (0, 1)");
    }
    require_even_support(dist);
    CompensatedSum lhs;
    for (int j = 0; 2 * j <= dist.n; ++j) {
        if (dist[2 * j]) {
            lhs.add(static_cast<double>(dist[2 * j]) * std::pow(lambda, j));
        }
    }
    LambdaCheck out;
    out.lhs = lhs.value();
    out.rhs = std::pow(1.0 + lambda, 0.5 * dist.n);
    out.holds = out.lhs <= out.rhs * (1.0 + 1e-12);
    out.within_hypotheses = dist.n % 2 == 0;
    return out;
}

struct ExactLambdaCheck {
    BigInt lhs; // q^(n/2) * sum_j A_{2j} (p/q)^j
    BigInt rhs; // (p + q)^(n/2)
    bool holds = false;
};

/// Exact form of the lambda-family inequality at lambda = p/q, both sides
/// multiplied by q^(n/2). Requires even n.
inline ExactLambdaCheck lambda_family_check_exact(const WeightDistribution& dist, std::int64_t p, std::int64_t q) {
    if (!(p > 0 && q > p)) {
        throw DomainError("exact lambda = p/q needs 0 < p < q");
    }
    if (dist.n % 2) {
        throw DomainError("exact lambda check needs even n");
    }
    require_even_support(dist);
    const int half = dist.n / 2;
    ExactLambdaCheck out;
    for (int j = 0; j <= half; ++j) {
        if (dist[2 * j]) {
            out.lhs += BigInt(dist[2 * j]) * boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(j)) *
                       boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(half - j));
        }
    }
    out.rhs = boost::multiprecision::pow(BigInt(p + q), static_cast<unsigned>(half));
    out.holds = out.lhs <= out.rhs;
    return out;
}

/// F(lambda) = -(alpha/2) log2 lambda + (1/2) log2(1 + lambda).
inline double lambda_objective(double alpha, double lambda) {
    if (!(lambda > 0.0)) {
        throw DomainError("lambda must be positive");
    }
    return -0.5 * alpha * std::log2(lambda) + 0.5 * std::log2(1.0 + lambda);
}

/// Minimizer alpha / (1 - alpha) of lambda_objective on (0, 1).
inline double optimal_lambda(double alpha) {
    if (!(alpha > 0.0 && alpha < 0.5)) {
        throw DomainError("alpha must lie in (0, 1/2)");
    }
    return alpha / (1.0 - alpha);
}

// ---------------------------------------------------------------------------
// doubly-even self-dual comparison bound

/**
 * c = 1/2 - sqrt((6 delta - 1 + sqrt(1 - 8 delta + 32 delta^2)) / (8 (1 - delta))).
 *
 * nullopt when the outer radicand is negative. The result may be negative,
 * in which case [c, 1 - c] covers every weight.
 */
inline std::optional<double> interval_constant(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw DomainError("relative distance must lie in (0, 1)");
    }
    const double inner = 1.0 - 8.0 * delta + 32.0 * delta * delta;
    if (inner < 0.0) {
        return std::nullopt;
    }
    const double outer = (6.0 * delta - 1.0 + std::sqrt(inner)) / (8.0 * (1.0 - delta));
    if (outer < 0.0) {
        return std::nullopt;
    }
    return 0.5 - std::sqrt(outer);
}

/// A_w <= 2^((H2(w/n) - 1/2) n) when c <= w/n <= 1 - c.
inline BoundValue doubly_even_bound(int n, int w, double delta) {
    if (n < 1 || w <= 0 || w >= n) {
        return BoundValue::not_applicable("weight outside 0 < w < n");
    }
    const auto c = interval_constant(delta);
    if (!c) {
        return BoundValue::not_applicable("interval constant undefined for this relative distance");
    }
    const double ratio = static_cast<double>(w) / n;
    if (ratio < *c || ratio > 1.0 - *c) {
        return BoundValue::not_applicable("w/n = " + std::to_string(ratio) + " outside [c, 1-c] with c = " +
                                          std::to_string(*c));
    }
    return BoundValue::of((binary_entropy(ratio) - 0.5) * n);
}

// ---------------------------------------------------------------------------
// binomial baseline

/// log2 of a positive big integer, accurate to double precision.
inline double log2_big(const BigInt& x) {
    if (x <= 0) {
        throw DomainError("log2 of a non-positive integer");
    }
    const auto top = static_cast<long>(boost::multiprecision::msb(x));
    if (top < 53) {
        return std::log2(x.convert_to<double>());
    }
    const BigInt head = x >> (top - 52);
    return std::log2(head.convert_to<double>()) + static_cast<double>(top - 52);
}

struct BinomialBaseline {
    BigInt numerator;       // C(n, w)
    int denominator_log2 = 0; // n - k
    double log2_value = 0.0;
    double value = 0.0;
};

/// Expected A_w of a random [n, k] code: C(n, w) / 2^(n-k).
inline BinomialBaseline binomial_baseline(int n, int k, int w) {
    if (n < 1 || k < 0 || k > n) {
        throw DomainError("need 0 <= k <= n, n >= 1");
    }
    if (w < 0 || w > n) {
        throw DomainError("weight outside [0, n]");
    }
    BinomialBaseline b;
    b.numerator = binomial(n, w);
    b.denominator_log2 = n - k;
    b.log2_value = log2_big(b.numerator) - (n - k);
    b.value = std::exp2(b.log2_value);
    return b;
}

// ---------------------------------------------------------------------------
// per-weight comparison

struct BoundRow {
    int w = 0;
    std::uint64_t count = 0;
    BoundValue entropy;             // (n/2) H2(w/n)
    BoundValue sqrt_e;              // sqrt(e) (n-w+1)^(w/2)
    BoundValue doubly_even;         // only for doubly-even self-dual codes
    double log2_baseline = 0.0;
    double baseline = 0.0;
    /// log2(bound) - log2(A_w) per applicable bound; empty when A_w = 0.
    std::optional<double> slack_entropy;
    std::optional<double> slack_sqrt_e;
    std::optional<double> slack_doubly_even;
    bool zero_count = false;
    bool holds = true;

    std::optional<double> min_slack() const {
        std::optional<double> m;
        for (const auto& s : {slack_entropy, slack_sqrt_e, slack_doubly_even}) {
            if (s && (!m || *s < *m)) {
                m = s;
            }
        }
        return m;
    }
};

struct BoundReport {
    int n = 0;
    int k = 0;
    bool doubly_even_self_dual = false;
    /// Even length; for odd n the rows are informational.
    bool within_hypotheses = false;
    bool all_hold = true;
    std::vector<BoundRow> rows;
};

namespace detail {

inline bool fits_under(std::uint64_t count, const BoundValue& b) {
    if (!b.applicable || count == 0) {
        return true;
    }
    return std::log2(static_cast<double>(count)) <= b.log2_value + std::log2(1.0 + kBoundTolerance);
}

} // namespace detail

/// Compares A_w against each applicable bound for every even w in (0, n/2).
inline BoundReport tightest_bound_report(const BinaryCode& code, const WeightDistribution& dist, const CodeMetrics& metrics) {
    if (!metrics.weakly_self_dual || !is_weakly_self_dual(code)) {
        throw PreconditionError("bound report requires a weakly self-dual code");
    }
    if (dist.n != code.length()) {
        throw InputError("distribution length does not match code");
    }
    BoundReport rep;
    rep.n = code.length();
    rep.k = code.dimension();
    rep.doubly_even_self_dual = metrics.doubly_even && 2 * rep.k == rep.n;
    rep.within_hypotheses = rep.n % 2 == 0;

    for (int w = 2; 2 * w < rep.n; w += 2) {
        BoundRow row;
        row.w = w;
        row.count = dist[w];
        row.zero_count = row.count == 0;
        row.entropy = bound_entropy(rep.n, w);
        row.sqrt_e = bound_sqrt_e(rep.n, w);
        row.doubly_even = rep.doubly_even_self_dual
                              ? doubly_even_bound(rep.n, w, metrics.delta.value())
                              : BoundValue::not_applicable("code is not doubly-even self-dual");
        const auto base = binomial_baseline(rep.n, rep.k, w);
        row.log2_baseline = base.log2_value;
        row.baseline = base.value;
        if (!row.zero_count) {
            const double la = std::log2(static_cast<double>(row.count));
            auto slack = [la](const BoundValue& b) -> std::optional<double> {
                if (!b.applicable) {
                    return std::nullopt;
                }
                return b.log2_value - la;
            };
            row.slack_entropy = slack(row.entropy);
            row.slack_sqrt_e = slack(row.sqrt_e);
            row.slack_doubly_even = slack(row.doubly_even);
        }
        row.holds = detail::fits_under(row.count, row.entropy) && detail::fits_under(row.count, row.sqrt_e) &&
                    detail::fits_under(row.count, row.doubly_even);
        if (rep.within_hypotheses) {
            rep.all_hold = rep.all_hold && row.holds;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace wsd
