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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "wsd/bounds.hpp"
#include "wsd/zoo.hpp"

using namespace wsd;

TEST(BinaryEntropy, Examples) {
    EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
    EXPECT_NEAR(binary_entropy(0.1100), 0.5, 5e-4);
    EXPECT_NEAR(binary_entropy(1.0 / 3), 0.918296, 1e-6);
    EXPECT_EQ(binary_entropy(0.0), 0.0);
    EXPECT_EQ(binary_entropy(1.0), 0.0);
}

TEST(BinaryEntropy, DomainErrors) {
    EXPECT_THROW(binary_entropy(-0.1), DomainError);
    EXPECT_THROW(binary_entropy(1.5), DomainError);
    EXPECT_THROW(binary_entropy(std::nan("")), DomainError);
}

TEST(BinaryEntropy, MatchesNaturalLogForm) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(1e-6, 1 - 1e-6);
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng);
        EXPECT_NEAR(binary_entropy(x), oracle::entropy_nat(x), 1e-13);
    }
}

TEST(BoundEntropy, Examples) {
    // 12 H2(1/3) = 12 log2 3 - 8, so the bound is exactly 3^12 / 2^8.
    const auto g = bound_entropy(24, 8);
    ASSERT_TRUE(g.applicable);
    EXPECT_NEAR(g.log2_value, 12 * std::log2(3.0) - 8, 1e-12);
    EXPECT_NEAR(g.value(), 531441.0 / 256.0, 1e-8);
    EXPECT_GE(g.value(), 759.0);

    EXPECT_FALSE(bound_entropy(8, 4).applicable);
    EXPECT_FALSE(bound_entropy(8, 0).applicable);
    EXPECT_FALSE(bound_entropy(8, -1).applicable);
    EXPECT_NEAR(bound_entropy(100, 2).log2_value, 7.07202712709103, 1e-10);
}

TEST(BoundSqrtE, Examples) {
    const auto g = bound_sqrt_e(24, 8);
    ASSERT_TRUE(g.applicable);
    EXPECT_NEAR(g.value(), std::sqrt(std::numbers::e) * 83521.0, 1e-6);
    EXPECT_NEAR(g.value(), 137702.849250145, 1e-6);
    EXPECT_NEAR(bound_sqrt_e(4, 1).value(), 3.29744254140026, 1e-12);
    EXPECT_NEAR(bound_sqrt_e(100, 2).value(), 163.223405799313, 1e-9);
    EXPECT_FALSE(bound_sqrt_e(4, 2).applicable);
}

TEST(BoundSqrtE, NondecreasingInLength) {
    for (int w = 1; w < 30; ++w) {
        double prev = -1e300;
        for (int n = 2 * w + 1; n < 400; ++n) {
            const double v = bound_sqrt_e(n, w).log2_value;
            EXPECT_GE(v, prev);
            prev = v;
        }
    }
}

TEST(LambdaFamily, SelfDualTwoIsEquality) {
    const WeightDistribution w(2, {1, 0, 1});
    const auto r = lambda_family_check(w, 0.5);
    EXPECT_DOUBLE_EQ(r.lhs, 1.5);
    EXPECT_DOUBLE_EQ(r.rhs, 1.5);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.within_hypotheses);
}

TEST(LambdaFamily, SmallLambdaLimit) {
    const auto w = weight_distribution(build_golay24());
    const auto r = lambda_family_check(w, 1e-12);
    EXPECT_NEAR(r.lhs, 1.0, 1e-9);
    EXPECT_NEAR(r.rhs, 1.0, 1e-9);
    EXPECT_TRUE(r.holds);
}

TEST(LambdaFamily, GolayGrid) {
    const auto w = weight_distribution(build_golay24());
    for (int i = 1; i <= 99; ++i) {
        EXPECT_TRUE(lambda_family_check(w, i / 100.0).holds) << i;
    }
}

TEST(LambdaFamily, Errors) {
    const WeightDistribution w(2, {1, 0, 1});
    EXPECT_THROW(lambda_family_check(w, 0.0), DomainError);
    EXPECT_THROW(lambda_family_check(w, 1.0), DomainError);
    EXPECT_THROW(lambda_family_check(WeightDistribution(3, {1, 0, 0, 1}), 0.5), PreconditionError);
}

TEST(LambdaFamily, OddLengthOutsideHypotheses) {
    const auto r = lambda_family_check(WeightDistribution(3, {1, 0, 1, 0}), 0.5);
    EXPECT_FALSE(r.within_hypotheses);
}

TEST(LambdaFamily, ExactRationalMode) {
    const WeightDistribution two(2, {1, 0, 1});
    const auto eq = lambda_family_check_exact(two, 1, 2);
    EXPECT_EQ(eq.lhs, eq.rhs); // 2 + 1 = 3 both sides
    EXPECT_TRUE(eq.holds);
    const auto g = weight_distribution(build_golay24());
    for (int p = 1; p < 20; ++p) {
        const auto r = lambda_family_check_exact(g, p, 20);
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(r.holds, lambda_family_check(g, p / 20.0).holds);
    }
    EXPECT_THROW(lambda_family_check_exact(two, 2, 2), DomainError);
    EXPECT_THROW(lambda_family_check_exact(WeightDistribution(3, {1, 0, 1, 0}), 1, 2), DomainError);
}

TEST(OptimalLambda, Examples) {
    EXPECT_DOUBLE_EQ(optimal_lambda(1.0 / 3), 0.5);
    EXPECT_DOUBLE_EQ(optimal_lambda(0.25), 1.0 / 3);
    EXPECT_NEAR(lambda_objective(0.25, 1.0 / 3), 0.5 * binary_entropy(0.25), 1e-15);
    const double numeric = oracle::golden_section_minimize([](double l) { return lambda_objective(0.3, l); }, 1e-6,
                                                            1 - 1e-6);
    EXPECT_NEAR(numeric, 3.0 / 7.0, 1e-6);
}

TEST(OptimalLambda, ObjectiveAtOptimumIsHalfEntropy) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.01, 0.49);
    for (int i = 0; i < 50; ++i) {
        const double a = u(rng);
        const double l = optimal_lambda(a);
        EXPECT_GT(l, 0.0);
        EXPECT_LT(l, 1.0);
        EXPECT_NEAR(lambda_objective(a, l), 0.5 * binary_entropy(a), 1e-9);
        const double numeric =
            oracle::golden_section_minimize([a](double x) { return lambda_objective(a, x); }, 1e-6, 1 - 1e-6);
        EXPECT_NEAR(numeric, l, 1e-6);
    }
}

TEST(OptimalLambda, DerivationChainReachesEntropyBound) {
    // -(w/2) log2 l* + (n/2) log2(1 + l*) at l* = optimal_lambda(w/n).
    for (int n : {10, 24, 100, 1000}) {
        for (int w = 1; 2 * w < n; ++w) {
            const double l = optimal_lambda(static_cast<double>(w) / n);
            const double chain = -0.5 * w * std::log2(l) + 0.5 * n * std::log2(1 + l);
            const double direct = bound_entropy(n, w).log2_value;
            EXPECT_NEAR(std::exp2(chain - direct), 1.0, 1e-9) << n << ',' << w;
        }
    }
}

TEST(OptimalLambda, DomainErrors) {
    EXPECT_THROW(optimal_lambda(0.0), DomainError);
    EXPECT_THROW(optimal_lambda(0.5), DomainError);
    EXPECT_THROW(lambda_objective(0.2, 0.0), DomainError);
}

TEST(IntervalConstant, Examples) {
    const auto c = interval_constant(0.1100);
    ASSERT_TRUE(c);
    EXPECT_GT(*c, 0.27);
    EXPECT_NEAR(*c, 0.2714, 1e-3);
    EXPECT_NEAR(*c, oracle::interval_constant_ld(0.1100), 1e-14);
    EXPECT_NEAR(*interval_constant(1.0 / 3), -0.167228672646120, 1e-12);
    EXPECT_NEAR(*interval_constant(1e-12), 0.5, 1e-5);
    EXPECT_THROW(interval_constant(0.0), DomainError);
    EXPECT_THROW(interval_constant(1.0), DomainError);
}

TEST(IntervalConstant, AlwaysDefinedOnOpenInterval) {
    for (int i = 1; i < 1000; ++i) {
        const double d = i / 1000.0;
        const auto c = interval_constant(d);
        ASSERT_TRUE(c) << d;
        EXPECT_LT(*c, 0.5);
        EXPECT_NEAR(*c, oracle::interval_constant_ld(d), 1e-12);
    }
}

TEST(DoublyEvenBound, Examples) {
    const auto g = doubly_even_bound(24, 8, 1.0 / 3);
    ASSERT_TRUE(g.applicable);
    EXPECT_NEAR(g.log2_value, 10.0391000173077, 1e-10);
    EXPECT_NEAR(g.value(), 1052.13201225176, 1e-8);
    EXPECT_GE(g.value(), 759.0);

    // w/n = 0.2 lies below c(0.11) ~ 0.2714.
    const auto out = doubly_even_bound(100, 20, 0.1100);
    EXPECT_FALSE(out.applicable);
    EXPECT_FALSE(out.reason.empty());
    EXPECT_TRUE(bound_entropy(100, 20).applicable);

    const auto mid = doubly_even_bound(24, 12, 1.0 / 3);
    ASSERT_TRUE(mid.applicable);
    EXPECT_DOUBLE_EQ(mid.log2_value, 12.0);
}

TEST(BinomialBaseline, Examples) {
    EXPECT_DOUBLE_EQ(binomial_baseline(2, 1, 0).value, 0.5);
    const auto g = binomial_baseline(24, 12, 8);
    EXPECT_EQ(g.numerator, 735471);
    EXPECT_EQ(g.denominator_log2, 12);
    EXPECT_NEAR(g.value, 735471.0 / 4096.0, 1e-9);
    EXPECT_DOUBLE_EQ(binomial_baseline(8, 4, 4).value, 4.375);
    EXPECT_THROW(binomial_baseline(8, 4, 9), DomainError);
}

TEST(BinomialBaseline, LargeLengthStaysFinite) {
    const auto b = binomial_baseline(2048, 1024, 1024);
    EXPECT_TRUE(std::isfinite(b.log2_value));
    const double lg = (std::lgamma(2049.0) - 2 * std::lgamma(1025.0)) / std::numbers::ln2 - 1024;
    EXPECT_NEAR(b.log2_value, lg, 1e-9);
}

TEST(WeightBounds, HoldOnZooAndRandomCodes) {
    auto check = [](const BinaryCode& c, const std::string& name) {
        const auto d = weight_distribution(c);
        for (int w = 1; 2 * w < c.length(); ++w) {
            const double a = static_cast<double>(d[w]);
            EXPECT_LE(a, bound_entropy(c.length(), w).value() * (1 + 1e-9)) << name << " w=" << w;
            EXPECT_LE(a, bound_sqrt_e(c.length(), w).value() * (1 + 1e-9)) << name << " w=" << w;
        }
    };
    for (const auto& e : zoo()) {
        if (is_weakly_self_dual(e.code) && e.code.length() % 2 == 0) {
            check(e.code, e.name);
        }
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 2 * (1 + static_cast<int>(seed % 12));
        check(random_weakly_self_dual(n, 1 + static_cast<int>(seed % (n / 2)), seed), "random");
    }
}

TEST(BoundReport, GolayRow) {
    const auto g = build_golay24();
    const auto d = weight_distribution(g);
    const auto rep = tightest_bound_report(g, d, code_metrics(g, d));
    EXPECT_TRUE(rep.doubly_even_self_dual);
    EXPECT_TRUE(rep.all_hold);
    ASSERT_EQ(rep.rows.size(), 5U); // w = 2, 4, 6, 8, 10
    const auto& r8 = rep.rows[3];
    EXPECT_EQ(r8.w, 8);
    EXPECT_EQ(r8.count, 759U);
    EXPECT_NEAR(r8.entropy.value(), 2075.94140625, 1e-6);
    EXPECT_NEAR(r8.sqrt_e.value(), 137702.849250145, 1e-5);
    ASSERT_TRUE(r8.doubly_even.applicable);
    EXPECT_NEAR(r8.doubly_even.value(), 1052.13201225176, 1e-6);
    EXPECT_NEAR(r8.baseline, 179.558349609375, 1e-9);
    ASSERT_TRUE(r8.min_slack());
    EXPECT_NEAR(*r8.min_slack(), std::log2(1052.13201225176 / 759.0), 1e-9);
    EXPECT_TRUE(rep.rows[0].zero_count);
    EXPECT_FALSE(rep.rows[0].min_slack());
}

TEST(BoundReport, EmptyForSelfDualTwo) {
    const auto c = BinaryCode::from_strings({"11"});
    const auto d = weight_distribution(c);
    EXPECT_TRUE(tightest_bound_report(c, d, code_metrics(c, d)).rows.empty());
}

TEST(BoundReport, HammingWeightTwoIsZero) {
    const auto h = build_extended_hamming();
    const auto d = weight_distribution(h);
    const auto rep = tightest_bound_report(h, d, code_metrics(h, d));
    ASSERT_EQ(rep.rows.size(), 1U);
    EXPECT_EQ(rep.rows[0].w, 2);
    EXPECT_EQ(rep.rows[0].count, 0U);
    EXPECT_TRUE(rep.rows[0].holds);
}

TEST(BoundReport, RequiresWeaklySelfDual) {
    const auto c = build_hamming7();
    const auto d = weight_distribution(c);
    EXPECT_THROW(tightest_bound_report(c, d, code_metrics(c, d)), PreconditionError);
}
