// Copyright 2026 The superact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// superact: build fixtures, run LOCC scripts and verification suites.
//
//   superact verify <target> [--tol T] [--seed S] [--format text|json] [--out FILE]
//   superact export <fixture> [--ensemble] [--out FILE]
//   superact run <script.json> [--expect state.json] [--samples N] [--seed S] [--out FILE]
//
// Exit codes: 0 success, 1 a check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "superact/locc.hpp"
#include "superact/serialize.hpp"
#include "superact/verify.hpp"

namespace {

using namespace superact;

constexpr int kExitUsage = 2;

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

void emit(const std::string &text, const RunConfig &cfg) {
    if (cfg.output_path) {
        std::ofstream out(*cfg.output_path);
        if (!out) throw std::runtime_error("cannot write " + *cfg.output_path);
        out << text;
    } else {
        std::cout << text;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Superactivation of bound entanglement: LOCC simulator and claim verifier", "superact"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    std::string out_path;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--tol", cfg.tolerance, "Tolerance for every check")->check(CLI::Range(0.0, 1e-3));
        sub->add_option("--seed", cfg.seed, "Seed for random test states");
        sub->add_option("--out", out_path, "Write the report to this file instead of stdout");
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    };

    std::string target;
    auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("target", target, "Suite to run")->required()->check(CLI::IsMember(verify_targets()));
    add_common(verify_cmd);

    std::string fixture;
    bool as_ensemble = false;
    auto *export_cmd = app.add_subcommand("export", "Serialize a named fixture");
    export_cmd->add_option("fixture", fixture, "smolin:WXYZ, m, control or ms")
        ->required()
        ->check(CLI::Validator([](const std::string &k) { return is_fixture_key(k) ? "" : "unknown fixture " + k; },
                               "FIXTURE"));
    export_cmd->add_flag("--ensemble", as_ensemble, "Write the ensemble form instead of the dense matrix");
    add_common(export_cmd);

    std::string script_path;
    std::string expect_path;
    std::size_t samples = 0;
    auto *run_cmd = app.add_subcommand("run", "Run an LOCC script from JSON");
    run_cmd->add_option("script", script_path, "Script file")->required();
    run_cmd->add_option("--expect", expect_path, "Pure state (JSON) to compute branch fidelities against");
    run_cmd->add_option("--samples", samples, "Monte Carlo spot check with this many shots instead of enumeration");
    add_common(run_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }
    if (!out_path.empty()) cfg.output_path = out_path;
    cfg.format = format == "json" ? ReportFormat::kJson : ReportFormat::kText;

    try {
        if (*verify_cmd) {
            const Report report = verify(target, cfg);
            emit(cfg.format == ReportFormat::kJson ? render_json(report).dump(2) + "\n" : render_text(report), cfg);
            if (!report.passed()) {
                for (const auto &c : report.checks) {
                    if (!c.pass) std::cerr << "failed: " << c.name << " measured " << c.measured << "\n";
                }
                return 1;
            }
            return 0;
        }
        if (*export_cmd) {
            json out;
            if (fixture == "ms") {
                out = to_json(ms_descriptor());
            } else {
                const MixedEnsemble e = fixture_ensemble(fixture);
                out = as_ensemble ? to_json(e) : to_json(e.density());
            }
            out["fixture"] = fixture;
            emit(out.dump() + "\n", cfg);
            return 0;
        }
        const LoccScript script = script_from_json(read_json_file(script_path));
        std::optional<PureState> expected;
        if (!expect_path.empty()) {
            expected = pure_state_from_json(read_json_file(expect_path));
        } else if (script.keep.size() == 2) {
            expected = singlet(script.keep[0], script.keep[1]);
        }
        const PureState *target_state = expected ? &*expected : nullptr;
        json out;
        if (samples > 0) {
            RunResult r{sample(script, samples, cfg.seed), 0.0};
            out = to_json(r, target_state);
            out["mode"] = "monte_carlo";
            out["seed"] = cfg.seed;
        } else {
            out = to_json(run(script), target_state);
            out["mode"] = "exact";
        }
        if (cfg.format == ReportFormat::kJson) {
            emit(out.dump(2) + "\n", cfg);
        } else {
            std::string text = "branches: " + std::to_string(out["branch_count"].get<std::size_t>()) +
                               "\nretained probability: " + out["retained_probability"].dump() + "\n";
            if (out.contains("min_fidelity")) text += "min fidelity: " + out["min_fidelity"].dump() + "\n";
            emit(text, cfg);
        }
        return 0;
    } catch (const ScriptError &e) {
        std::cerr << "invalid script: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
