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

#ifndef SIMON_COHERENCE_CLOSED_FORMS_H
#define SIMON_COHERENCE_CLOSED_FORMS_H

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "simon_coherence/coherence_measures.h"

namespace simon_coherence {

// Analytic coherence of the Simon-circuit stages as functions of N = 2^n, valid for two-to-one
// oracles (s != 0). Nothing here builds a state vector, so N up to 2^20 is fine.
//
// The H stage is a uniform superposition over N basis states, the HOH stage a uniform-magnitude
// superposition over N^2/4 basis states, and the oracle is a basis permutation, so HO = H.

/// Throws DomainError unless N = 2^n with 1 <= n <= 20.
int log2_dimension(uint64_t N);

double coherence_H(uint64_t N, const CoherenceMeasure &m);
double coherence_HO(uint64_t N, const CoherenceMeasure &m);
double coherence_HOH(uint64_t N, const CoherenceMeasure &m);

/// coherence_HOH - coherence_H
double delta(uint64_t N, const CoherenceMeasure &m);

/// Tsallis variation written directly as (N^2/4 (4/N^2)^{1/alpha} - N (1/N)^{1/alpha}) / (alpha - 1).
double delta_tsallis_direct(uint64_t N, double alpha);
/// l_{1,p} variation written directly as (N^2/4 - 1)^{1/p} - (N - 1)^{1/p}.
double delta_l1p_direct(uint64_t N, double p);
/// Short forms of the variation: skew info 1/N - 4/N^2, l1 N(N/4 - 1), relative entropy log2(N/4).
double delta_short_form(uint64_t N, const CoherenceMeasure &m);

// Two candidate closed forms circulate for the HOH-stage l1 coherence. Simulation settles it
// (N^2/4 - 1, identical to l_{1,p} at p = 1); coherence_HOH(N, L1) uses that one.
double l1_hoh_half_square_form(uint64_t N);     // N^2/2 - 1
double l1_hoh_quarter_square_form(uint64_t N);  // N^2/4 - 1

enum class Regime { Production, Neutral, Depletion };
std::string_view regime_name(Regime r);

struct RegimeVerdict {
    uint64_t N;
    std::vector<std::pair<CoherenceMeasure, double>> delta_values;
    Regime regime;
};

/// Classifies the sign of delta over `panel` (default_panel() when empty). Throws
/// InternalConsistencyError if the measures disagree in sign.
RegimeVerdict regime(uint64_t N, const std::vector<CoherenceMeasure> &panel = {});

}  // namespace simon_coherence

#endif
