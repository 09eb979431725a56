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

#ifndef SIMON_COHERENCE_KEY_RECOVERY_H
#define SIMON_COHERENCE_KEY_RECOVERY_H

#include <cstdint>
#include <vector>

#include "simon_coherence/simon_circuit.h"

namespace simon_coherence {

/// Linear constraints y.s = 0 over GF(2), kept in reduced row-echelon form.
///
/// Each row's pivot is its lowest set bit, and no other row has that bit set.
class Gf2System {
   public:
    explicit Gf2System(int n);

    int n() const {
        return n_;
    }
    int rank() const {
        return static_cast<int>(rows_.size());
    }
    const std::vector<uint64_t> &rows() const {
        return rows_;
    }

    /// Returns true iff y was independent of the existing rows (rank grew by one).
    bool add_constraint(uint64_t y);

    /// Basis of {x : y.x = 0 for every row}; one vector per non-pivot bit.
    std::vector<uint64_t> nullspace_basis() const;

   private:
    int n_;
    std::vector<uint64_t> rows_;
};

/// All nonzero solutions in ascending order, or {0} when rank == n. Enumerates
/// 2^(n - rank) - 1 vectors, so callers should only ask once the rank is high.
std::vector<uint64_t> solve_nullspace(const Gf2System &sys);

struct RecoveryReport {
    /// Recovered string; 0 for a bijective verdict.
    uint32_t s_hat = 0;
    /// Quantum-routine invocations consumed.
    int queries = 0;
    bool verified = false;
    /// Rank reached; equals n - 1 or n on success.
    int rank = 0;
    /// Every first-register outcome observed, in order.
    std::vector<uint32_t> samples;
};

inline int default_max_queries(int n) {
    return 10 * n + 20;
}

/// Runs the quantum routine, measures the first register and accumulates constraints until the
/// solution space pins s down. Treats f as a blackbox: reads f.table only, never f.s.
///
/// Each query is an independent run of the same circuit, so the circuit is simulated once and
/// its first-register Born distribution sampled per query.
RecoveryReport recover(const SimonFunction &f, uint64_t seed, int max_queries);
inline RecoveryReport recover(const SimonFunction &f, uint64_t seed) {
    return recover(f, seed, default_max_queries(f.n));
}

}  // namespace simon_coherence

#endif
