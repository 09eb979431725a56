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

#include "simon_coherence/closed_forms.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "simon_coherence/errors.h"
#include "simon_coherence/tolerances.h"

namespace simon_coherence {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool near_one(double alpha) {
    return std::abs(alpha - 1) <= Tolerances::alpha_one_window;
}

}  // namespace

int log2_dimension(uint64_t N) {
    if (N < 2 || (N & (N - 1)) != 0 || N > (uint64_t{1} << 20)) {
        throw DomainError("closed forms need N = 2^n with 1 <= n <= 20, got N = " + std::to_string(N));
    }
    return std::countr_zero(N);
}

double coherence_H(uint64_t N, const CoherenceMeasure &m) {
    log2_dimension(N);
    const double n = static_cast<double>(N);
    double value = std::visit(overloaded{
                                  [&](const Tsallis &t) {
                                      if (near_one(t.alpha)) {
                                          return std::numbers::ln2 * std::log2(n);
                                      }
                                      return (std::exp((1 - 1 / t.alpha) * std::log(n)) - 1) / (t.alpha - 1);
                                  },
                                  [&](const L1p &l) { return std::pow(n - 1, 1 / l.p); },
                                  [&](const RelEntropy &) { return std::log2(n); },
                                  [&](const SkewInfo &) { return 1 - 1 / n; },
                                  [&](const L1 &) { return n - 1; },
                              },
                              m.kind());
    return clamp_coherence(value, "closed-form H coherence");
}

double coherence_HO(uint64_t N, const CoherenceMeasure &m) {
    return coherence_H(N, m);
}

double coherence_HOH(uint64_t N, const CoherenceMeasure &m) {
    log2_dimension(N);
    const double n = static_cast<double>(N);
    const double quarter_square = n * n / 4;
    double value = std::visit(
        overloaded{
            [&](const Tsallis &t) {
                if (near_one(t.alpha)) {
                    return std::numbers::ln2 * std::log2(quarter_square);
                }
                double log_term = (1 / t.alpha - 1) * std::log(4.0) + (2 - 2 / t.alpha) * std::log(n);
                return (std::exp(log_term) - 1) / (t.alpha - 1);
            },
            [&](const L1p &l) { return std::pow(quarter_square - 1, 1 / l.p); },
            [&](const RelEntropy &) { return std::log2(quarter_square); },
            [&](const SkewInfo &) { return 1 - 4 / (n * n); },
            [&](const L1 &) { return l1_hoh_quarter_square_form(N); },
        },
        m.kind());
    return clamp_coherence(value, "closed-form HOH coherence");
}

double delta(uint64_t N, const CoherenceMeasure &m) {
    return coherence_HOH(N, m) - coherence_H(N, m);
}

double delta_tsallis_direct(uint64_t N, double alpha) {
    log2_dimension(N);
    const double n = static_cast<double>(N);
    const double q = n * n / 4;
    return (q * std::pow(1 / q, 1 / alpha) - n * std::pow(1 / n, 1 / alpha)) / (alpha - 1);
}

double delta_l1p_direct(uint64_t N, double p) {
    log2_dimension(N);
    const double n = static_cast<double>(N);
    return std::pow(n * n / 4 - 1, 1 / p) - std::pow(n - 1, 1 / p);
}

double delta_short_form(uint64_t N, const CoherenceMeasure &m) {
    log2_dimension(N);
    const double n = static_cast<double>(N);
    if (std::holds_alternative<SkewInfo>(m.kind())) {
        return 1 / n - 4 / (n * n);
    }
    if (std::holds_alternative<L1>(m.kind())) {
        return n * (n / 4 - 1);
    }
    if (std::holds_alternative<RelEntropy>(m.kind())) {
        return std::log2(n / 4);
    }
    throw DomainError("delta_short_form: no short form for " + m.label());
}

double l1_hoh_half_square_form(uint64_t N) {
    log2_dimension(N);
    const double n = static_cast<double>(N);
    return n * n / 2 - 1;
}

double l1_hoh_quarter_square_form(uint64_t N) {
    log2_dimension(N);
    const double n = static_cast<double>(N);
    return n * n / 4 - 1;
}

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::Production:
            return "production";
        case Regime::Neutral:
            return "neutral";
        case Regime::Depletion:
            return "depletion";
    }
    return "?";
}

RegimeVerdict regime(uint64_t N, const std::vector<CoherenceMeasure> &panel) {
    const auto &measures = panel.empty() ? default_panel() : panel;
    RegimeVerdict verdict{N, {}, Regime::Neutral};
    int positive = 0;
    int negative = 0;
    int zero = 0;
    for (const auto &m : measures) {
        double d = delta(N, m);
        verdict.delta_values.emplace_back(m, d);
        if (d > Tolerances::neutral_band) {
            positive++;
        } else if (d < -Tolerances::neutral_band) {
            negative++;
        } else {
            zero++;
        }
    }
    int total = static_cast<int>(measures.size());
    if (positive == total) {
        verdict.regime = Regime::Production;
    } else if (negative == total) {
        verdict.regime = Regime::Depletion;
    } else if (zero == total) {
        verdict.regime = Regime::Neutral;
    } else {
        throw InternalConsistencyError("regime: coherence variations disagree in sign at N = " + std::to_string(N));
    }
    return verdict;
}

}  // namespace simon_coherence
