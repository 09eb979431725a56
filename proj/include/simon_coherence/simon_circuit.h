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

#ifndef SIMON_COHERENCE_SIMON_CIRCUIT_H
#define SIMON_COHERENCE_SIMON_CIRCUIT_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simon_coherence/quantum_state.h"

namespace simon_coherence {

/// Truth table of f: {0,1}^n -> {0,1}^n together with its hidden string s.
///
/// s != 0: f(x) = f(x') iff x' in {x, x ^ s}. s == 0: f is a bijection.
struct SimonFunction {
    int n = 0;
    std::vector<uint32_t> table;
    uint32_t s = 0;

    uint32_t operator()(uint32_t x) const {
        return table[x];
    }
    /// Coset representatives: min(x, x ^ s) for each pair, ascending. All of {0,1}^n when s == 0.
    std::vector<uint32_t> coset_representatives() const;

    bool operator==(const SimonFunction &) const = default;
};

struct ValidationResult {
    bool ok = true;
    /// First violating pair, in the order found.
    std::optional<std::pair<uint32_t, uint32_t>> violation;
    std::string message;

    explicit operator bool() const {
        return ok;
    }
};

ValidationResult validate(const SimonFunction &f);

/// Two-to-one f with hidden string s; images are distinct values drawn uniformly without
/// replacement from [0, 2^n) and assigned to coset representatives in ascending order.
/// Requires 1 <= n <= 20 and 1 <= s < 2^n.
SimonFunction random_two_to_one(int n, uint32_t s, uint64_t seed);

/// Uniformly random permutation of [0, 2^n), s = 0.
SimonFunction random_bijection(int n, uint64_t seed);

/// |x>|y> -> |x>|y ^ f(x)>. Only the truth table is read, never f.s.
StateVector oracle_apply(const StateVector &psi, std::span<const uint32_t> table, int n);
inline StateVector oracle_apply(const StateVector &psi, const SimonFunction &f) {
    return oracle_apply(psi, f.table, f.n);
}

enum class StageLabel { Initial, H, HO, HOH, PostMeasure };

std::string_view stage_name(StageLabel label);

/// Initial = |0>^{2n}, H, HO and HOH after each step of the circuit. Throws DomainError if
/// validate(f) fails.
std::map<StageLabel, StateVector> run_stages(const SimonFunction &f);

/// Same circuit without validation, for callers treating f as a blackbox.
std::map<StageLabel, StateVector> run_stages_unchecked(std::span<const uint32_t> table, int n);

/// The HOH state assembled term by term from the coset representatives and s:
/// amplitude (-1)^{x.y} / 2^{n-1} on |y, f(x)> for x in R and s.y even. Requires s != 0.
StateVector hoh_from_cosets(const SimonFunction &f);

struct Measurement {
    uint32_t observed;
    StateVector state;
};

/// Samples the second register of psi with Born probabilities and returns the renormalized
/// projection onto the observed value.
Measurement measure_second_register(const StateVector &psi, const SimonFunction &f, uint64_t seed);

/// y.x mod 2
inline int parity_dot(uint64_t a, uint64_t b) {
    return __builtin_parityll(a & b);
}

/// n-character big-endian bit string of x.
std::string to_bits(uint32_t x, int n);
/// Inverse of to_bits; throws DomainError on characters other than '0'/'1' or on empty input.
uint32_t from_bits(std::string_view bits);

/// Function-table text:
///   n=<int> s=<bitstring>
///   <x bits> <f(x) bits>      (2^n lines, x ascending)
void write_function_table(std::ostream &out, const SimonFunction &f);
/// Throws ParseError carrying the offending line number. The parsed table is validated.
SimonFunction read_function_table(std::istream &in);

}  // namespace simon_coherence

#endif
