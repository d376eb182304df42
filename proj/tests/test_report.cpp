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

#include <sstream>

#include "wsd/report.hpp"

using namespace wsd;

namespace {

AnalysisOptions quick() {
    AnalysisOptions o;
    o.theta_steps = 21;
    o.lambda_steps = 19;
    return o;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

} // namespace

TEST(LambdaGrid, EvenlySpacedInsideUnitInterval) {
    const auto g = lambda_grid(99);
    ASSERT_EQ(g.size(), 99U);
    EXPECT_DOUBLE_EQ(g.front(), 0.01);
    EXPECT_DOUBLE_EQ(g.back(), 0.99);
    EXPECT_THROW(lambda_grid(0), InputError);
}

TEST(Analyze, GolayPassesEverything) {
    const auto doc = analyze_code("golay24", build_golay24(), AnalysisOptions{});
    EXPECT_TRUE(doc.passed());
    for (const char* id : {"dual_component_mass", "macwilliams", "self_dual_sum", "enumerator_inequality",
                           "lambda_family"}) {
        const auto* c = doc.check(id);
        ASSERT_NE(c, nullptr) << id;
        EXPECT_TRUE(c->evaluated) << id;
        EXPECT_TRUE(c->passed) << id;
    }
    // n = 24 is above the state-vector cap.
    EXPECT_FALSE(doc.check("closed_form_amplitude")->evaluated);
    ASSERT_TRUE(doc.bounds);
    EXPECT_TRUE(doc.bounds->all_hold);
}

TEST(Analyze, SmallCodeRunsStateVectorChecks) {
    const auto doc = analyze_code("hamming8", build_extended_hamming(), quick());
    for (const char* id : {"closed_form_amplitude", "norm_preservation", "dual_mass_projection"}) {
        ASSERT_NE(doc.check(id), nullptr) << id;
        EXPECT_TRUE(doc.check(id)->evaluated) << id;
        EXPECT_TRUE(doc.check(id)->passed) << id;
    }
}

TEST(Analyze, NonSelfOrthogonalSkipsInequalities) {
    const auto doc = analyze_code("hamming7", build_hamming7(), quick());
    EXPECT_FALSE(doc.bounds);
    EXPECT_FALSE(doc.check("self_dual_sum")->evaluated);
    EXPECT_TRUE(doc.check("dual_component_mass")->evaluated);
    EXPECT_TRUE(doc.passed());
}

TEST(Analyze, RequireWeaklySelfDual) {
    auto o = quick();
    o.require_wsd = true;
    EXPECT_THROW(analyze_code("rep", BinaryCode::from_strings({"111"}), o), PreconditionError);
    EXPECT_NO_THROW(analyze_code("two", BinaryCode::from_strings({"11"}), o));
}

TEST(Analyze, OddLengthLambdaOutsideHypotheses) {
    const auto doc = analyze_code("oddwsd3", BinaryCode::from_strings({"110"}), quick());
    const auto* c = doc.check("lambda_family");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->within_hypotheses);
}

TEST(Analyze, Deterministic) {
    const auto code = random_weakly_self_dual(16, 6, 11);
    const auto a = to_json(analyze_code("r", code, quick())).dump();
    const auto b = to_json(analyze_code("r", code, quick())).dump();
    EXPECT_EQ(a, b);
}

TEST(Json, SchemaKeys) {
    const auto j = to_json(analyze_code("hamming8", build_extended_hamming(), quick()));
    EXPECT_EQ(j["schema"], "wsd-report/1");
    for (const char* key : {"tool_version", "config", "code", "grid", "checks", "bounds", "notes", "passed"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["code"]["n"], 8);
    EXPECT_EQ(j["code"]["k"], 4);
    EXPECT_EQ(j["code"]["d"], 4);
    EXPECT_EQ(j["code"]["self_dual"], true);
    EXPECT_EQ(j["code"]["distribution"], nlohmann::json({1, 0, 0, 0, 14, 0, 0, 0, 1}));
    EXPECT_EQ(j["config"]["theta_steps"], 21);
    EXPECT_EQ(j["passed"], true);
}

TEST(Csv, MatchesJsonNumerically) {
    const auto doc = analyze_code("golay24", build_golay24(), quick());
    const auto j = to_json(doc);
    const auto lines = split(to_csv(doc), '\n');
    ASSERT_EQ(lines.front(), kReportCsvHeader);
    const auto& rows = j["bounds"]["rows"];
    ASSERT_EQ(lines.size(), rows.size() + 1);
    const char* keys[] = {"w", "A_w", "log2_bound_eq16", "log2_bound_eq17", "log2_bound_eq1", "log2_baseline",
                          "min_slack"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto cells = split(lines[i + 1], ',');
        ASSERT_EQ(cells.size(), 7U);
        for (std::size_t c = 0; c < 7; ++c) {
            const auto& v = rows[i][keys[c]];
            if (v.is_null()) {
                EXPECT_EQ(cells[c], "NA");
            } else {
                EXPECT_EQ(std::stod(cells[c]), v.get<double>()) << keys[c];
            }
        }
    }
}

TEST(Csv, EmptyReportHasOnlyHeader) {
    const auto doc = analyze_code("selfdual2", BinaryCode::from_strings({"11"}), quick());
    EXPECT_EQ(to_csv(doc), std::string(kReportCsvHeader) + "\n");
}

TEST(FormatNumber, RoundTripsAndMarksNonFinite) {
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(std::stod(format_number(1.0 / 3)), 1.0 / 3);
    EXPECT_EQ(format_number(std::nan("")), "NA");
}

TEST(VerifyZoo, AllCodesPass) {
    const auto s = verify_zoo(quick());
    EXPECT_TRUE(s.passed());
    EXPECT_EQ(s.reports.size(), zoo().size());
    for (const auto& [id, slack] : s.worst_slacks()) {
        EXPECT_GE(slack, -1e-9) << id;
    }
}

TEST(BoundCurves, AgreesWithGolayReport) {
    const auto rows = bound_curves(24, 8);
    ASSERT_EQ(rows.size(), 11U);
    const auto g = build_golay24();
    const auto d = weight_distribution(g);
    const auto rep = tightest_bound_report(g, d, code_metrics(g, d));
    for (const auto& r : rep.rows) {
        const auto& c = rows[static_cast<std::size_t>(r.w - 1)];
        ASSERT_EQ(c.w, r.w);
        EXPECT_DOUBLE_EQ(c.log2_entropy, r.entropy.log2_value);
        EXPECT_DOUBLE_EQ(c.log2_sqrt_e, r.sqrt_e.log2_value);
        EXPECT_NEAR(c.log2_baseline, r.log2_baseline, 1e-12);
        EXPECT_EQ(c.log2_doubly_even.has_value(), r.doubly_even.applicable);
    }
}

TEST(BoundCurves, LargeLengthIsFinite) {
    const auto rows = bound_curves(2048, std::nullopt);
    ASSERT_EQ(rows.size(), 1023U);
    for (const auto& r : rows) {
        EXPECT_TRUE(std::isfinite(r.log2_entropy));
        EXPECT_TRUE(std::isfinite(r.log2_sqrt_e));
        EXPECT_TRUE(std::isfinite(r.log2_baseline));
        EXPECT_FALSE(r.log2_doubly_even);
    }
    const auto big = bound_curves(10000, 1000);
    EXPECT_TRUE(std::isfinite(big.back().log2_baseline));
}

TEST(BoundCurves, DoublyEvenCurveStartsAtIntervalConstant) {
    // d/n = 0.11 gives c ~ 0.2714: the doubly-even curve is defined only above it.
    const int n = 1000;
    const auto rows = bound_curves(n, 110);
    const double c = *interval_constant(0.11);
    for (const auto& r : rows) {
        EXPECT_EQ(r.log2_doubly_even.has_value(), static_cast<double>(r.w) / n >= c - 1e-12) << r.w;
    }
}

TEST(BoundCurves, Serialization) {
    const auto rows = bound_curves(24, 8);
    const auto csv = split(curves_to_csv(rows), '\n');
    EXPECT_EQ(csv.front(), "w,log2_bound_eq16,log2_bound_eq17,log2_bound_eq1,log2_baseline");
    EXPECT_EQ(csv.size(), 12U);
    const auto one = split(curve_to_csv(rows, "eq16"), '\n');
    EXPECT_EQ(one.size(), 12U);
    EXPECT_THROW(curve_to_csv(rows, "nope"), InputError);
    const auto j = curves_to_json(24, 8, 12, rows);
    EXPECT_EQ(j["schema"], "wsd-curves/1");
    EXPECT_EQ(j["rows"].size(), 11U);
    EXPECT_THROW(bound_curves(23, std::nullopt), DomainError);
    EXPECT_THROW(bound_curves(24, 13), DomainError);
}
