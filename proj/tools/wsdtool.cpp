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

// wsdtool: weight distributions, lemma verification and bound tables for
// binary weakly self-dual codes.
//
// Exit status: 0 all checks pass, 1 a check or bound is violated, 2 input or
// precondition error, 3 capacity exceeded.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "wsd/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw wsd::InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void add_analysis_flags(CLI::App* cmd, wsd::AnalysisOptions& opts) {
    cmd->add_option("--theta-steps", opts.theta_steps, "Points on the theta grid")->check(CLI::PositiveNumber);
    cmd->add_option("--lambda-steps", opts.lambda_steps, "Points on the lambda grid")->check(CLI::PositiveNumber);
    cmd->add_option("--tolerance", opts.tolerance, "Slack allowed on inequality checks")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--require-wsd", opts.require_wsd, "Fail unless the code is weakly self-dual");
    cmd->add_option("--seed", opts.seed, "Seed for sampled angles and amplitudes");
}

/// Offending angles and weights, one per line, for a failing report.
void print_violations(const wsd::ReportDocument& doc) {
    for (const auto& c : doc.checks) {
        if (c.evaluated && c.within_hypotheses && !c.passed) {
            std::cerr << doc.name << ": " << c.id << " violated: value " << std::setprecision(17) << c.worst_value
                      << " vs " << c.bound;
            if (c.worst_at) {
                std::cerr << " at " << *c.worst_at;
            }
            std::cerr << '\n';
        }
    }
    if (doc.bounds && doc.bounds->within_hypotheses) {
        for (const auto& r : doc.bounds->rows) {
            if (!r.holds) {
                std::cerr << doc.name << ": bound violated at w = " << r.w << " (A_w = " << r.count << ")\n";
            }
        }
    }
}

void print_summary(const wsd::VerifySummary& s, std::ostream& os) {
    for (const auto& r : s.reports) {
        os << std::left << std::setw(22) << r.name << " n=" << std::setw(3) << r.code.length()
           << " k=" << std::setw(3) << r.code.dimension() << (r.passed() ? "PASS" : "FAIL") << '\n';
    }
    os << "\nworst slack per check:\n";
    for (const auto& [id, slack] : s.worst_slacks()) {
        os << "  " << std::left << std::setw(24) << id << std::setprecision(6) << std::scientific << slack
           << std::defaultfloat << '\n';
    }
    for (const auto& r : s.reports) {
        if (const auto* c = r.check("self_dual_sum"); c && c->evaluated) {
            if (r.code.length() == 2 * r.code.dimension()) {
                os << "  " << r.name << ": self_dual_sum worst value " << std::setprecision(17) << c->worst_value
                   << " (bound " << c->bound << ")\n";
            }
        }
    }
    os << (s.passed() ? "\nall checks passed\n" : "\nSOME CHECKS FAILED\n");
}

int run(int argc, char** argv) {
    CLI::App app{"Weight distributions and bounds for binary weakly self-dual codes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wsd::kToolVersion));

    wsd::AnalysisOptions opts;
    std::string format = "json";
    std::string out_path;

    auto* analyze = app.add_subcommand("analyze", "Analyze one code from a .gmat file");
    std::string analyze_path;
    analyze->add_option("path", analyze_path, ".gmat file")->required();
    add_analysis_flags(analyze, opts);
    analyze->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    analyze->add_option("-o,--output", out_path, "Write the report here instead of stdout");

    auto* verify = app.add_subcommand("verify-lemmas", "Run the verification suite on a code or the zoo");
    std::string verify_path;
    bool use_zoo = false;
    bool verify_json = false;
    verify->add_option("path", verify_path, ".gmat file");
    verify->add_flag("--zoo", use_zoo, "Verify every built-in zoo code");
    verify->add_flag("--json", verify_json, "Emit the per-code reports as a JSON array");
    add_analysis_flags(verify, opts);

    auto* curves = app.add_subcommand("bound-curves", "Formula-only bound tables");
    int curve_n = 0;
    std::optional<int> curve_d;
    std::optional<int> curve_k;
    std::string curve_name;
    curves->add_option("--n", curve_n, "Even code length")->required();
    curves->add_option("--d", curve_d, "Minimum distance (enables the doubly-even column)");
    curves->add_option("--k", curve_k, "Dimension for the binomial baseline (default n/2)");
    curves->add_option("--curve", curve_name, "Emit one two-column curve")
        ->check(CLI::IsMember({"eq16", "eq17", "eq1", "baseline"}));
    curves->add_option("--format", format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

    auto* zoo_cmd = app.add_subcommand("zoo", "Built-in test codes");
    zoo_cmd->require_subcommand(1);
    auto* zoo_list = zoo_cmd->add_subcommand("list", "List zoo codes");
    auto* zoo_emit = zoo_cmd->add_subcommand("emit", "Write zoo codes as .gmat with .expected.json sidecars");
    std::string emit_name;
    std::string emit_dir;
    zoo_emit->add_option("name", emit_name, "Single code to print to stdout");
    zoo_emit->add_option("--dir", emit_dir, "Write every zoo code into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    auto emit = [&](const std::string& text) {
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream(out_path) << text;
        }
    };

    if (*analyze) {
        const auto code = wsd::parse_gmat(read_file(analyze_path));
        const auto name = std::filesystem::path(analyze_path).stem().string();
        const auto doc = wsd::analyze_code(name, code, opts);
        emit(format == "csv" ? wsd::to_csv(doc) : wsd::to_json(doc).dump(2) + "\n");
        if (!doc.passed()) {
            print_violations(doc);
            return kExitViolation;
        }
        return kExitOk;
    }

    if (*verify) {
        wsd::VerifySummary summary;
        if (use_zoo) {
            summary = wsd::verify_zoo(opts);
        } else if (!verify_path.empty()) {
            const auto code = wsd::parse_gmat(read_file(verify_path));
            summary.reports.push_back(
                wsd::analyze_code(std::filesystem::path(verify_path).stem().string(), code, opts));
        } else {
            throw wsd::InputError("verify-lemmas needs a path or --zoo");
        }
        if (verify_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : summary.reports) {
                arr.push_back(wsd::to_json(r));
            }
            std::cout << arr.dump(2) << '\n';
        } else {
            print_summary(summary, std::cout);
        }
        for (const auto& r : summary.reports) {
            if (!r.passed()) {
                print_violations(r);
            }
        }
        return summary.passed() ? kExitOk : kExitViolation;
    }

    if (*curves) {
        const auto rows = wsd::bound_curves(curve_n, curve_d, curve_k);
        if (!curve_name.empty()) {
            std::cout << wsd::curve_to_csv(rows, curve_name);
        } else if (format == "json" && curves->count("--format")) {
            std::cout << wsd::curves_to_json(curve_n, curve_d, curve_k.value_or(curve_n / 2), rows).dump(2) << '\n';
        } else {
            std::cout << wsd::curves_to_csv(rows);
        }
        return kExitOk;
    }

    if (*zoo_list) {
        for (const auto& e : wsd::zoo()) {
            std::cout << std::left << std::setw(22) << e.name << " [" << e.code.length() << ',' << e.code.dimension()
                      << "] wsd=" << wsd::is_weakly_self_dual(e.code) << "  " << e.provenance << '\n';
        }
        return kExitOk;
    }

    if (*zoo_emit) {
        if (!emit_name.empty()) {
            const auto e = wsd::zoo_lookup(emit_name);
            if (!e) {
                throw wsd::InputError("no zoo code named '" + emit_name + "'");
            }
            std::cout << wsd::emit_gmat(e->code, e->provenance);
            return kExitOk;
        }
        if (emit_dir.empty()) {
            throw wsd::InputError("zoo emit needs a code name or --dir");
        }
        std::filesystem::create_directories(emit_dir);
        for (const auto& e : wsd::zoo()) {
            const auto base = std::filesystem::path(emit_dir) / e.name;
            std::ofstream(base.string() + ".gmat") << wsd::emit_gmat(e.code, e.provenance);
            const auto dist = e.expected ? *e.expected : wsd::weight_distribution(e.code);
            std::ofstream(base.string() + ".expected.json") << wsd::expected_json(e, dist).dump(2) << '\n';
        }
        return kExitOk;
    }
    return kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const wsd::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const wsd::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const wsd::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kExitInput;
    } catch (const wsd::DegenerateError& e) {
        std::cerr << "degenerate input: " << e.what() << '\n';
        return kExitInput;
    } catch (const wsd::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitViolation;
    }
}
