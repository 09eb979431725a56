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

#ifndef SIMON_COHERENCE_REPORT_H
#define SIMON_COHERENCE_REPORT_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "simon_coherence/closed_forms.h"
#include "simon_coherence/coherence_measures.h"
#include "simon_coherence/simon_circuit.h"

namespace simon_coherence {

// Report assembly for the command-line front end. Everything here is deterministic given the
// configuration; no timing or environment data leaks into a report.

struct RunConfig {
    int n = 0;
    /// Hidden string; empty means "draw a nonzero one from the seed".
    std::optional<uint32_t> s;
    uint64_t seed = 0;
    std::vector<double> alphas{0.5, 2.0};
    std::vector<double> ps{1.0, 2.0};
    std::vector<std::string> measures{"tsallis", "l1p", "rel_entropy", "skew_info"};
    std::string output_format = "json";
    std::optional<std::string> function_file;
    /// Any of "dense", "pure_fast", "closed_form"; empty selects automatically.
    std::vector<std::string> methods;

    bool operator==(const RunConfig &) const = default;
};

/// Expands `measures` over `alphas` and `ps`. Throws DomainError on bad names or parameters.
std::vector<CoherenceMeasure> panel_of(const RunConfig &config);

/// Loads the function file, or draws an oracle from (n, s, seed). A drawn s is nonzero.
SimonFunction oracle_of(const RunConfig &config);

struct ValueEntry {
    std::string measure;
    std::optional<double> param;
    std::string method;
    double value = 0;

    bool operator==(const ValueEntry &) const = default;
};

struct StageReport {
    std::string stage;
    /// Second-register outcome for the post-measurement stage.
    std::optional<uint32_t> observed;
    std::vector<ValueEntry> values;
    double max_discrepancy = 0;
    bool flagged = false;

    bool operator==(const StageReport &) const = default;
};

struct Discrepancy {
    std::string stage;
    std::string measure;
    std::optional<double> param;
    std::string method_a;
    std::string method_b;
    double difference = 0;
    bool ok = true;

    bool operator==(const Discrepancy &) const = default;
};

struct RunReport {
    RunConfig config;
    /// Hidden string of the oracle actually simulated.
    uint32_t s = 0;
    std::vector<StageReport> stages;
    /// HOH minus H, per measure and method.
    std::vector<ValueEntry> deltas;
    /// production | neutral | depletion, or "undetermined" for bijective oracles.
    std::string regime;
    std::vector<Discrepancy> discrepancies;

    bool operator==(const RunReport &) const = default;
};

/// Throws CapabilityError if dense evaluation is requested for n > 5.
RunReport build_run_report(const RunConfig &config);

struct VerifyEntry {
    std::string stage;
    std::string measure;
    std::optional<double> param;
    std::string method;
    double value = 0;
    /// Reference value the entry is checked against (dense simulation unless noted).
    double reference = 0;
    double discrepancy = 0;
    bool ok = true;

    bool operator==(const VerifyEntry &) const = default;
};

struct L1FormCheck {
    int n = 0;
    double dense = 0;
    double quarter_square = 0;  // N^2/4 - 1
    double half_square = 0;     // N^2/2 - 1

    bool operator==(const L1FormCheck &) const = default;
};

struct VerifyReport {
    RunConfig config;
    uint32_t s = 0;
    std::vector<VerifyEntry> entries;
    std::vector<L1FormCheck> l1_checks;
    /// Which HOH l1 closed form the dense simulation confirms: "N^2/4-1", "N^2/2-1" or "neither".
    std::string l1_confirmed_form;
    /// Human-readable summary of the two competing l1 forms and the simulation verdict.
    std::string l1_conflict_line;
    bool ok = true;

    bool operator==(const VerifyReport &) const = default;
};

/// Compares dense simulation with closed forms and with the pure-state path. Requires n <= 5.
VerifyReport build_verify_report(const RunConfig &config);

struct RecoverySummary {
    RunConfig config;
    int trials = 0;
    int successes = 0;
    /// Verified reports whose s_hat differs from the true s.
    int false_positives = 0;
    double success_rate = 0;
    double mean_queries = 0;
    int max_queries = 0;
    /// queries -> number of trials.
    std::map<int, int> query_histogram;
    /// recovered string (bits) -> number of trials.
    std::map<std::string, int> s_hat_counts;

    bool operator==(const RecoverySummary &) const = default;
};

/// Trial i uses seeds derived from (config.seed, i); trials run in parallel but results are
/// combined in trial order.
RecoverySummary run_recovery_trials(const RunConfig &config, int trials);

struct SweepRow {
    uint64_t N = 0;
    std::string measure;
    std::optional<double> param;
    double coherence_h = 0;
    double coherence_hoh = 0;
    double delta = 0;
    std::string regime;

    bool operator==(const SweepRow &) const = default;
};

std::vector<SweepRow> build_sweep(int n_max, const std::vector<CoherenceMeasure> &panel);

void to_json(nlohmann::json &j, const RunConfig &c);
void from_json(const nlohmann::json &j, RunConfig &c);
void to_json(nlohmann::json &j, const RunReport &r);
void from_json(const nlohmann::json &j, RunReport &r);
void to_json(nlohmann::json &j, const VerifyReport &r);
void from_json(const nlohmann::json &j, VerifyReport &r);
void to_json(nlohmann::json &j, const RecoverySummary &r);
void from_json(const nlohmann::json &j, RecoverySummary &r);
void to_json(nlohmann::json &j, const SweepRow &r);
void from_json(const nlohmann::json &j, SweepRow &r);

/// 17 significant digits.
std::string format_number(double x);

std::string run_report_csv(const RunReport &r);
std::string verify_report_text(const VerifyReport &r);
std::string sweep_csv(const std::vector<SweepRow> &rows);

}  // namespace simon_coherence

#endif
