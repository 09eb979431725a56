// Copyright 2026 The simon-coherence Authors
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

#include "simon_coherence/cli.h"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "simon_coherence/errors.h"
#include "simon_coherence/report.h"
#include "simon_coherence/rng.h"

namespace simon_coherence {

namespace {

constexpr const char *seed_env = "SIMON_COHERENCE_SEED";

struct CommonOptions {
    int n = 0;
    std::string s_bits;
    std::optional<uint64_t> seed;
    std::vector<double> alphas{0.5, 2.0};
    std::vector<double> ps{1.0, 2.0};
    std::vector<std::string> measures{"tsallis", "l1p", "rel_entropy", "skew_info"};
    std::vector<std::string> methods;
    std::string format = "json";
    std::string function_file;
    std::string output;
};

void add_oracle_options(CLI::App *cmd, CommonOptions &o) {
    cmd->add_option("--n", o.n, "Qubits per register")->check(CLI::Range(1, 20));
    cmd->add_option("--s", o.s_bits, "Hidden string as n bits, big-endian (all zeros: bijective oracle)");
    cmd->add_option("--seed", o.seed, "RNG seed (falls back to $SIMON_COHERENCE_SEED, then 0)");
    cmd->add_option("--function-file", o.function_file, "Read the oracle from a function-table file");
}

void add_measure_options(CLI::App *cmd, CommonOptions &o) {
    cmd->add_option("--alphas", o.alphas, "Tsallis alphas in (0,1) U (1,2]")->delimiter(',');
    cmd->add_option("--ps", o.ps, "l_{1,p} exponents in [1,2]")->delimiter(',');
    cmd->add_option("--measures", o.measures, "Any of tsallis,l1p,rel_entropy,skew_info,l1")->delimiter(',');
}

void add_output_options(CLI::App *cmd, CommonOptions &o, const std::vector<std::string> &formats) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("--output", o.output, "Write to this file instead of stdout");
}

uint64_t resolve_seed(const std::optional<uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv(seed_env); env != nullptr && *env != '\0') {
        try {
            size_t used = 0;
            uint64_t v = std::stoull(env, &used);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw DomainError(std::string(seed_env) + " is not an unsigned integer");
    }
    return 0;
}

RunConfig to_config(const CommonOptions &o) {
    RunConfig c;
    c.n = o.n;
    c.seed = resolve_seed(o.seed);
    c.alphas = o.alphas;
    c.ps = o.ps;
    c.measures = o.measures;
    c.methods = o.methods;
    c.output_format = o.format;
    if (!o.function_file.empty()) {
        c.function_file = o.function_file;
    } else if (o.n == 0) {
        throw DomainError("--n or --function-file is required");
    }
    if (!o.s_bits.empty()) {
        if (o.n != 0 && o.s_bits.size() != static_cast<size_t>(o.n)) {
            throw DomainError("--s must have exactly n = " + std::to_string(o.n) + " bits");
        }
        c.s = from_bits(o.s_bits);
    }
    return c;
}

void emit(const CommonOptions &o, const std::string &text, std::ostream &out) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output);
    if (!file) {
        throw DomainError("cannot write '" + o.output + "'");
    }
    file << text;
}

std::string dump(const nlohmann::json &j) {
    return j.dump(2) + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simon's algorithm coherence simulator", "simon-coherence"};
    app.require_subcommand(1);

    CommonOptions o;
    int trials = 100;
    int n_max = 10;

    auto *run = app.add_subcommand("run", "Simulate every stage and report coherence by each method");
    add_oracle_options(run, o);
    add_measure_options(run, o);
    add_output_options(run, o, {"json", "csv"});
    run->add_option("--methods", o.methods, "Any of dense,pure_fast,closed_form (default: automatic)")->delimiter(',');

    auto *verify = app.add_subcommand("verify", "Check closed forms against dense simulation (n <= 5)");
    add_oracle_options(verify, o);
    add_measure_options(verify, o);
    add_output_options(verify, o, {"text", "json"});

    auto *recover_cmd = app.add_subcommand("recover", "Run hidden-string recovery trials");
    add_oracle_options(recover_cmd, o);
    add_output_options(recover_cmd, o, {"json"});
    recover_cmd->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);

    auto *sweep = app.add_subcommand("sweep", "Closed-form coherence and variation for N = 2 .. 2^n_max");
    add_measure_options(sweep, o);
    add_output_options(sweep, o, {"json", "csv"});
    sweep->add_option("--n-max", n_max, "Largest register width")->check(CLI::Range(1, 20));

    auto *gen = app.add_subcommand("gen-oracle", "Write a function-table file");
    gen->add_option("--n", o.n, "Qubits per register")->required()->check(CLI::Range(1, 20));
    gen->add_option("--s", o.s_bits, "Hidden string as n bits (all zeros: bijective)");
    gen->add_option("--seed", o.seed, "RNG seed");
    gen->add_option("--output", o.output, "Write to this file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (verify->parsed() && verify->count("--format") == 0) {
        o.format = "text";
    }

    try {
        if (run->parsed()) {
            RunReport report = build_run_report(to_config(o));
            emit(o, o.format == "csv" ? run_report_csv(report) : dump(nlohmann::json(report)), out);
            return kExitOk;
        }
        if (verify->parsed()) {
            VerifyReport report = build_verify_report(to_config(o));
            emit(o, o.format == "json" ? dump(nlohmann::json(report)) : verify_report_text(report), out);
            if (!report.ok) {
                for (const auto &e : report.entries) {
                    if (!e.ok) {
                        err << "mismatch: " << e.stage << " " << e.measure << " " << e.method << " off by "
                            << format_number(e.discrepancy) << "\n";
                    }
                }
                return kExitMismatch;
            }
            return kExitOk;
        }
        if (recover_cmd->parsed()) {
            RecoverySummary summary = run_recovery_trials(to_config(o), trials);
            emit(o, dump(nlohmann::json(summary)), out);
            return kExitOk;
        }
        if (sweep->parsed()) {
            RunConfig c;
            c.alphas = o.alphas;
            c.ps = o.ps;
            c.measures = o.measures;
            auto rows = build_sweep(n_max, panel_of(c));
            emit(o, o.format == "csv" ? sweep_csv(rows) : dump(nlohmann::json(rows)), out);
            return kExitOk;
        }
        if (gen->parsed()) {
            RunConfig c = to_config(o);
            std::ostringstream text;
            write_function_table(text, oracle_of(c));
            emit(o, text.str(), out);
            return kExitOk;
        }
    } catch (const CapabilityError &e) {
        err << "error: " << e.what() << "\n";
        return kExitCapability;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace simon_coherence
