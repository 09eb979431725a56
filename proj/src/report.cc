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

#include "simon_coherence/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "simon_coherence/errors.h"
#include "simon_coherence/key_recovery.h"
#include "simon_coherence/rng.h"
#include "simon_coherence/tolerances.h"

namespace simon_coherence {

using nlohmann::json;

namespace {

constexpr int max_run_qubits = 12;

bool has_method(const RunConfig &c, std::string_view m) {
    return std::find(c.methods.begin(), c.methods.end(), m) != c.methods.end();
}

struct MethodPlan {
    bool dense;
    bool pure;
    bool closed;
};

MethodPlan plan_methods(const RunConfig &c, int n) {
    for (const auto &m : c.methods) {
        if (m != "dense" && m != "pure_fast" && m != "closed_form") {
            throw DomainError("unknown method '" + m + "' (expected dense, pure_fast or closed_form)");
        }
    }
    if (c.methods.empty()) {
        return {n <= Tolerances::dense_max_qubits, true, true};
    }
    MethodPlan plan{has_method(c, "dense"), has_method(c, "pure_fast"), has_method(c, "closed_form")};
    if (plan.dense && n > Tolerances::dense_max_qubits) {
        throw CapabilityError("dense density matrices are limited to n <= " +
                              std::to_string(Tolerances::dense_max_qubits) + " (requested n = " + std::to_string(n) + ")");
    }
    return plan;
}

ValueEntry entry(const CoherenceMeasure &m, Method method, double value) {
    return ValueEntry{std::string(m.name()), m.parameter(), std::string(method_name(method)), value};
}

template <typename T>
void put_optional(json &j, const char *key, const std::optional<T> &v) {
    j[key] = v ? json(*v) : json(nullptr);
}

template <typename T>
void get_optional(const json &j, const char *key, std::optional<T> &v) {
    if (!j.contains(key) || j.at(key).is_null()) {
        v.reset();
    } else {
        v = j.at(key).get<T>();
    }
}

std::string param_text(const std::optional<double> &p) {
    return p ? format_number(*p) : std::string();
}

}  // namespace

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0 ? 0.0 : x);
    return buf;
}

std::vector<CoherenceMeasure> panel_of(const RunConfig &config) {
    std::vector<CoherenceMeasure> panel;
    for (const auto &name : config.measures) {
        if (name == "tsallis") {
            for (double a : config.alphas) {
                panel.push_back(CoherenceMeasure::tsallis(a));
            }
        } else if (name == "l1p") {
            for (double p : config.ps) {
                panel.push_back(CoherenceMeasure::l1p(p));
            }
        } else {
            panel.push_back(CoherenceMeasure::from_name(name));
        }
    }
    if (panel.empty()) {
        throw DomainError("empty measure panel");
    }
    return panel;
}

SimonFunction oracle_of(const RunConfig &config) {
    if (config.function_file) {
        std::ifstream in(*config.function_file);
        if (!in) {
            throw ParseError(0, "cannot open function file '" + *config.function_file + "'");
        }
        SimonFunction f = read_function_table(in);
        if (config.n != 0 && config.n != f.n) {
            throw DomainError("function file has n = " + std::to_string(f.n) + " but --n is " + std::to_string(config.n));
        }
        if (config.s && *config.s != f.s) {
            throw DomainError("function file hidden string differs from --s");
        }
        return f;
    }
    if (config.n < 1 || config.n > 20) {
        throw DomainError("n must lie in [1, 20]");
    }
    uint32_t s;
    if (config.s) {
        s = *config.s;
    } else {
        Rng rng(mix_seed(config.seed ^ 0x5eedULL));
        s = 1 + static_cast<uint32_t>(rng.uniform_below((uint64_t{1} << config.n) - 1));
    }
    if (s == 0) {
        return random_bijection(config.n, config.seed);
    }
    return random_two_to_one(config.n, s, config.seed);
}

RunReport build_run_report(const RunConfig &config) {
    SimonFunction f = oracle_of(config);
    if (f.n > max_run_qubits) {
        throw CapabilityError("state-vector simulation is limited to n <= " + std::to_string(max_run_qubits));
    }
    MethodPlan plan = plan_methods(config, f.n);
    auto panel = panel_of(config);
    const uint64_t N = uint64_t{1} << f.n;
    const bool two_to_one = f.s != 0;

    auto states = run_stages(f);
    Measurement measured = measure_second_register(states.at(StageLabel::HO), f, mix_seed(config.seed + 1));
    StateVector post = hadamard_first_register(measured.state);

    struct StageInput {
        StageLabel label;
        const StateVector *psi;
    };
    std::vector<StageInput> inputs{
        {StageLabel::Initial, &states.at(StageLabel::Initial)},
        {StageLabel::H, &states.at(StageLabel::H)},
        {StageLabel::HO, &states.at(StageLabel::HO)},
        {StageLabel::HOH, &states.at(StageLabel::HOH)},
        {StageLabel::PostMeasure, &post},
    };

    RunReport report;
    report.config = config;
    report.config.n = f.n;
    report.s = f.s;

    // stage -> measure index -> method -> value, for deltas
    std::map<StageLabel, std::vector<std::map<Method, double>>> values;
    for (const auto &in : inputs) {
        StageReport stage;
        stage.stage = std::string(stage_name(in.label));
        if (in.label == StageLabel::PostMeasure) {
            stage.observed = measured.observed;
        }
        std::optional<DensityMatrix> rho;
        if (plan.dense) {
            rho.emplace(density_of(*in.psi));
        }
        auto &per_measure = values[in.label];
        for (const auto &m : panel) {
            std::map<Method, double> by_method;
            if (plan.dense) {
                by_method[Method::Dense] = coherence(*rho, m);
            }
            if (plan.pure) {
                by_method[Method::PureFast] = pure_state_coherence(*in.psi, m);
            }
            if (plan.closed) {
                if (in.label == StageLabel::H) {
                    by_method[Method::ClosedForm] = coherence_H(N, m);
                } else if (in.label == StageLabel::HO) {
                    by_method[Method::ClosedForm] = coherence_HO(N, m);
                } else if (in.label == StageLabel::HOH && two_to_one) {
                    by_method[Method::ClosedForm] = coherence_HOH(N, m);
                }
            }
            for (const auto &[method, value] : by_method) {
                stage.values.push_back(entry(m, method, value));
            }
            for (auto a = by_method.begin(); a != by_method.end(); ++a) {
                for (auto b = std::next(a); b != by_method.end(); ++b) {
                    double diff = std::abs(a->second - b->second);
                    bool ok = diff < Tolerances::method_agreement;
                    stage.max_discrepancy = std::max(stage.max_discrepancy, diff);
                    stage.flagged = stage.flagged || !ok;
                    report.discrepancies.push_back(Discrepancy{stage.stage, std::string(m.name()), m.parameter(),
                                                               std::string(method_name(a->first)),
                                                               std::string(method_name(b->first)), diff, ok});
                }
            }
            per_measure.push_back(std::move(by_method));
        }
        report.stages.push_back(std::move(stage));
    }

    for (size_t k = 0; k < panel.size(); k++) {
        const auto &h = values[StageLabel::H][k];
        const auto &hoh = values[StageLabel::HOH][k];
        for (const auto &[method, value] : hoh) {
            if (auto it = h.find(method); it != h.end()) {
                report.deltas.push_back(entry(panel[k], method, value - it->second));
            }
        }
    }
    report.regime = two_to_one ? std::string(regime_name(regime(N, panel).regime)) : "undetermined";
    return report;
}

VerifyReport build_verify_report(const RunConfig &config) {
    SimonFunction f = oracle_of(config);
    if (f.n > Tolerances::dense_max_qubits) {
        throw CapabilityError("verify builds dense density matrices and is limited to n <= " +
                              std::to_string(Tolerances::dense_max_qubits));
    }
    auto panel = panel_of(config);
    const uint64_t N = uint64_t{1} << f.n;
    const bool two_to_one = f.s != 0;

    VerifyReport report;
    report.config = config;
    report.config.n = f.n;
    report.s = f.s;

    auto states = run_stages(f);
    DensityMatrix rho_h = density_of(states.at(StageLabel::H));
    DensityMatrix rho_ho = density_of(states.at(StageLabel::HO));
    DensityMatrix rho_hoh = density_of(states.at(StageLabel::HOH));

    auto add = [&](std::string stage, const CoherenceMeasure &m, std::string method, double value, double reference) {
        double diff = std::abs(value - reference);
        bool ok = diff < Tolerances::method_agreement;
        report.ok = report.ok && ok;
        report.entries.push_back(
            VerifyEntry{std::move(stage), std::string(m.name()), m.parameter(), std::move(method), value, reference, diff, ok});
    };

    for (const auto &m : panel) {
        double dense_h = coherence(rho_h, m);
        double dense_ho = coherence(rho_ho, m);
        double dense_hoh = coherence(rho_hoh, m);

        add("H", m, "closed_form", coherence_H(N, m), dense_h);
        add("H", m, "pure_fast", pure_state_coherence(states.at(StageLabel::H), m), dense_h);
        add("HO", m, "closed_form", coherence_HO(N, m), dense_ho);
        add("HO", m, "pure_fast", pure_state_coherence(states.at(StageLabel::HO), m), dense_ho);
        add("HO", m, "dense_H", dense_h, dense_ho);
        add("HOH", m, "pure_fast", pure_state_coherence(states.at(StageLabel::HOH), m), dense_hoh);
        if (two_to_one) {
            add("HOH", m, "closed_form", coherence_HOH(N, m), dense_hoh);
            double dense_delta = dense_hoh - dense_h;
            add("delta", m, "closed_form", delta(N, m), dense_delta);
            if (auto t = std::get_if<Tsallis>(&m.kind()); t && std::abs(t->alpha - 1) > Tolerances::alpha_one_window) {
                add("delta", m, "direct_formula", delta_tsallis_direct(N, t->alpha), dense_delta);
            } else if (auto l = std::get_if<L1p>(&m.kind())) {
                add("delta", m, "direct_formula", delta_l1p_direct(N, l->p), dense_delta);
            } else if (!std::holds_alternative<Tsallis>(m.kind())) {
                add("delta", m, "short_form", delta_short_form(N, m), dense_delta);
            }
        }
    }

    // The two published closed forms for the HOH-stage l1 coherence disagree; settle by simulation.
    bool quarter_all = true;
    bool half_all = true;
    for (int n : {2, 3}) {
        uint32_t s = (uint32_t{1} << n) - 1;
        SimonFunction g = random_two_to_one(n, s, mix_seed(config.seed + static_cast<uint64_t>(n)));
        auto hoh = run_stages(g).at(StageLabel::HOH);
        uint64_t dim = uint64_t{1} << n;
        L1FormCheck check{n, l1_coherence(density_of(hoh)), l1_hoh_quarter_square_form(dim), l1_hoh_half_square_form(dim)};
        quarter_all = quarter_all && std::abs(check.dense - check.quarter_square) < Tolerances::method_agreement;
        half_all = half_all && std::abs(check.dense - check.half_square) < Tolerances::method_agreement;
        report.l1_checks.push_back(check);
    }
    report.l1_confirmed_form = quarter_all ? "N^2/4-1" : half_all ? "N^2/2-1" : "neither";
    std::ostringstream line;
    line << "l1 HOH closed-form conflict: N^2/2-1 (stated l1 form) vs N^2/4-1 (l_{1,p} form at p=1);";
    for (const auto &c : report.l1_checks) {
        line << " n=" << c.n << " dense=" << format_number(c.dense) << " [N^2/4-1=" << format_number(c.quarter_square)
             << ", N^2/2-1=" << format_number(c.half_square) << "];";
    }
    line << " dense simulation confirms " << report.l1_confirmed_form;
    report.l1_conflict_line = line.str();
    if (report.l1_confirmed_form == "neither") {
        report.ok = false;
    }
    return report;
}

RecoverySummary run_recovery_trials(const RunConfig &config, int trials) {
    if (trials < 1) {
        throw DomainError("trials must be >= 1");
    }
    if (config.n < 1 || config.n > 20) {
        throw DomainError("n must lie in [1, 20]");
    }
    struct Outcome {
        uint32_t s;
        RecoveryReport report;
    };
    std::vector<Outcome> outcomes(static_cast<size_t>(trials));
    const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; i++) {
        RunConfig trial = config;
        trial.function_file.reset();
        trial.seed = mix_seed(config.seed + 2 * static_cast<uint64_t>(i));
        SimonFunction f = oracle_of(trial);
        outcomes[i] = Outcome{f.s, recover(f, mix_seed(config.seed + 2 * static_cast<uint64_t>(i) + 1))};
    }

    RecoverySummary summary;
    summary.config = config;
    summary.trials = trials;
    double total_queries = 0;
    for (const auto &o : outcomes) {
        const auto &r = o.report;
        bool success = r.verified && r.s_hat == o.s;
        summary.successes += success ? 1 : 0;
        summary.false_positives += (r.verified && r.s_hat != o.s) ? 1 : 0;
        total_queries += r.queries;
        summary.max_queries = std::max(summary.max_queries, r.queries);
        summary.query_histogram[r.queries]++;
        summary.s_hat_counts[r.verified ? to_bits(r.s_hat, config.n) : std::string("unverified")]++;
    }
    summary.success_rate = static_cast<double>(summary.successes) / trials;
    summary.mean_queries = total_queries / trials;
    return summary;
}

std::vector<SweepRow> build_sweep(int n_max, const std::vector<CoherenceMeasure> &panel) {
    if (n_max < 1 || n_max > 20) {
        throw DomainError("sweep: n_max must lie in [1, 20]");
    }
    std::vector<SweepRow> rows;
    for (int n = 1; n <= n_max; n++) {
        uint64_t N = uint64_t{1} << n;
        std::string verdict(regime_name(regime(N, panel).regime));
        for (const auto &m : panel) {
            rows.push_back(SweepRow{N, std::string(m.name()), m.parameter(), coherence_H(N, m), coherence_HOH(N, m),
                                    delta(N, m), verdict});
        }
    }
    return rows;
}

void to_json(json &j, const RunConfig &c) {
    j = json{{"n", c.n},
             {"seed", c.seed},
             {"alphas", c.alphas},
             {"ps", c.ps},
             {"measures", c.measures},
             {"output_format", c.output_format},
             {"methods", c.methods}};
    put_optional(j, "s", c.s);
    put_optional(j, "function_file", c.function_file);
}

void from_json(const json &j, RunConfig &c) {
    j.at("n").get_to(c.n);
    j.at("seed").get_to(c.seed);
    j.at("alphas").get_to(c.alphas);
    j.at("ps").get_to(c.ps);
    j.at("measures").get_to(c.measures);
    j.at("output_format").get_to(c.output_format);
    j.at("methods").get_to(c.methods);
    get_optional(j, "s", c.s);
    get_optional(j, "function_file", c.function_file);
}

namespace {

json value_json(const ValueEntry &v) {
    json j{{"measure", v.measure}, {"method", v.method}, {"value", v.value}};
    put_optional(j, "params", v.param);
    return j;
}

ValueEntry value_from(const json &j) {
    ValueEntry v;
    j.at("measure").get_to(v.measure);
    j.at("method").get_to(v.method);
    j.at("value").get_to(v.value);
    get_optional(j, "params", v.param);
    return v;
}

}  // namespace

void to_json(json &j, const RunReport &r) {
    json stages = json::array();
    for (const auto &s : r.stages) {
        json values = json::array();
        for (const auto &v : s.values) {
            values.push_back(value_json(v));
        }
        json js{{"stage", s.stage}, {"values", values}, {"max_discrepancy", s.max_discrepancy}, {"flagged", s.flagged}};
        put_optional(js, "observed", s.observed);
        stages.push_back(js);
    }
    json deltas = json::array();
    for (const auto &d : r.deltas) {
        deltas.push_back(value_json(d));
    }
    json discrepancies = json::array();
    for (const auto &d : r.discrepancies) {
        json jd{{"stage", d.stage},       {"measure", d.measure},       {"method_a", d.method_a},
                {"method_b", d.method_b}, {"difference", d.difference}, {"ok", d.ok}};
        put_optional(jd, "params", d.param);
        discrepancies.push_back(jd);
    }
    j = json{{"config", r.config}, {"hidden_string", r.s},  {"stages", stages},
             {"deltas", deltas},   {"regime", r.regime}, {"discrepancies", discrepancies}};
}

void from_json(const json &j, RunReport &r) {
    j.at("config").get_to(r.config);
    j.at("hidden_string").get_to(r.s);
    r.stages.clear();
    for (const auto &js : j.at("stages")) {
        StageReport s;
        js.at("stage").get_to(s.stage);
        js.at("max_discrepancy").get_to(s.max_discrepancy);
        js.at("flagged").get_to(s.flagged);
        get_optional(js, "observed", s.observed);
        for (const auto &jv : js.at("values")) {
            s.values.push_back(value_from(jv));
        }
        r.stages.push_back(std::move(s));
    }
    r.deltas.clear();
    for (const auto &jd : j.at("deltas")) {
        r.deltas.push_back(value_from(jd));
    }
    j.at("regime").get_to(r.regime);
    r.discrepancies.clear();
    for (const auto &jd : j.at("discrepancies")) {
        Discrepancy d;
        jd.at("stage").get_to(d.stage);
        jd.at("measure").get_to(d.measure);
        jd.at("method_a").get_to(d.method_a);
        jd.at("method_b").get_to(d.method_b);
        jd.at("difference").get_to(d.difference);
        jd.at("ok").get_to(d.ok);
        get_optional(jd, "params", d.param);
        r.discrepancies.push_back(std::move(d));
    }
}

void to_json(json &j, const VerifyReport &r) {
    json entries = json::array();
    for (const auto &e : r.entries) {
        json je{{"stage", e.stage},         {"measure", e.measure},         {"method", e.method}, {"value", e.value},
                {"reference", e.reference}, {"discrepancy", e.discrepancy}, {"ok", e.ok}};
        put_optional(je, "params", e.param);
        entries.push_back(je);
    }
    json checks = json::array();
    for (const auto &c : r.l1_checks) {
        checks.push_back(json{{"n", c.n}, {"dense", c.dense}, {"quarter_square", c.quarter_square}, {"half_square", c.half_square}});
    }
    j = json{{"config", r.config},
             {"hidden_string", r.s},
             {"entries", entries},
             {"l1_checks", checks},
             {"l1_confirmed_form", r.l1_confirmed_form},
             {"l1_conflict_line", r.l1_conflict_line},
             {"ok", r.ok}};
}

void from_json(const json &j, VerifyReport &r) {
    j.at("config").get_to(r.config);
    j.at("hidden_string").get_to(r.s);
    r.entries.clear();
    for (const auto &je : j.at("entries")) {
        VerifyEntry e;
        je.at("stage").get_to(e.stage);
        je.at("measure").get_to(e.measure);
        je.at("method").get_to(e.method);
        je.at("value").get_to(e.value);
        je.at("reference").get_to(e.reference);
        je.at("discrepancy").get_to(e.discrepancy);
        je.at("ok").get_to(e.ok);
        get_optional(je, "params", e.param);
        r.entries.push_back(std::move(e));
    }
    r.l1_checks.clear();
    for (const auto &jc : j.at("l1_checks")) {
        r.l1_checks.push_back(L1FormCheck{jc.at("n").get<int>(), jc.at("dense").get<double>(),
                                          jc.at("quarter_square").get<double>(), jc.at("half_square").get<double>()});
    }
    j.at("l1_confirmed_form").get_to(r.l1_confirmed_form);
    j.at("l1_conflict_line").get_to(r.l1_conflict_line);
    j.at("ok").get_to(r.ok);
}

void to_json(json &j, const RecoverySummary &r) {
    json histogram = json::object();
    for (const auto &[q, count] : r.query_histogram) {
        histogram[std::to_string(q)] = count;
    }
    j = json{{"config", r.config},
             {"trials", r.trials},
             {"successes", r.successes},
             {"false_positives", r.false_positives},
             {"success_rate", r.success_rate},
             {"mean_queries", r.mean_queries},
             {"max_queries", r.max_queries},
             {"query_histogram", histogram},
             {"s_hat_counts", r.s_hat_counts}};
}

void from_json(const json &j, RecoverySummary &r) {
    j.at("config").get_to(r.config);
    j.at("trials").get_to(r.trials);
    j.at("successes").get_to(r.successes);
    j.at("false_positives").get_to(r.false_positives);
    j.at("success_rate").get_to(r.success_rate);
    j.at("mean_queries").get_to(r.mean_queries);
    j.at("max_queries").get_to(r.max_queries);
    r.query_histogram.clear();
    for (const auto &[key, count] : j.at("query_histogram").items()) {
        r.query_histogram[std::stoi(key)] = count.get<int>();
    }
    j.at("s_hat_counts").get_to(r.s_hat_counts);
}

void to_json(json &j, const SweepRow &r) {
    j = json{{"N", r.N},
             {"measure", r.measure},
             {"coherence_H", r.coherence_h},
             {"coherence_HOH", r.coherence_hoh},
             {"delta", r.delta},
             {"regime", r.regime}};
    put_optional(j, "params", r.param);
}

void from_json(const json &j, SweepRow &r) {
    j.at("N").get_to(r.N);
    j.at("measure").get_to(r.measure);
    j.at("coherence_H").get_to(r.coherence_h);
    j.at("coherence_HOH").get_to(r.coherence_hoh);
    j.at("delta").get_to(r.delta);
    j.at("regime").get_to(r.regime);
    get_optional(j, "params", r.param);
}

std::string run_report_csv(const RunReport &r) {
    std::ostringstream out;
    out << "stage,observed,measure,param,method,value\n";
    for (const auto &s : r.stages) {
        std::string observed = s.observed ? to_bits(*s.observed, r.config.n) : "";
        for (const auto &v : s.values) {
            out << s.stage << "," << observed << "," << v.measure << "," << param_text(v.param) << "," << v.method << ","
                << format_number(v.value) << "\n";
        }
    }
    for (const auto &d : r.deltas) {
        out << "delta,," << d.measure << "," << param_text(d.param) << "," << d.method << "," << format_number(d.value)
            << "\n";
    }
    out << "regime,,,,," << r.regime << "\n";
    return out.str();
}

std::string verify_report_text(const VerifyReport &r) {
    std::ostringstream out;
    out << "n=" << r.config.n << " s=" << to_bits(r.s, r.config.n) << "\n";
    out << "stage,measure,param,method,value,reference,discrepancy,status\n";
    for (const auto &e : r.entries) {
        out << e.stage << "," << e.measure << "," << param_text(e.param) << "," << e.method << ","
            << format_number(e.value) << "," << format_number(e.reference) << "," << format_number(e.discrepancy) << ","
            << (e.ok ? "ok" : "MISMATCH") << "\n";
    }
    out << r.l1_conflict_line << "\n";
    out << (r.ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
    return out.str();
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    out << "N,measure,param,coherence_H,coherence_HOH,delta,regime\n";
    for (const auto &r : rows) {
        out << r.N << "," << r.measure << "," << param_text(r.param) << "," << format_number(r.coherence_h) << ","
            << format_number(r.coherence_hoh) << "," << format_number(r.delta) << "," << r.regime << "\n";
    }
    return out.str();
}

}  // namespace simon_coherence
