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

#include "simon_coherence/key_recovery.h"

#include <algorithm>
#include <bit>

#include "simon_coherence/errors.h"
#include "simon_coherence/rng.h"
#include "simon_coherence/tolerances.h"

namespace simon_coherence {

namespace {

inline uint64_t lowest_bit(uint64_t v) {
    return v & (~v + 1);
}

}  // namespace

Gf2System::Gf2System(int n) : n_(n) {
    if (n < 1 || n > 63) {
        throw DomainError("Gf2System: n must lie in [1, 63]");
    }
}

bool Gf2System::add_constraint(uint64_t y) {
    if ((y >> n_) != 0) {
        throw DomainError("Gf2System::add_constraint: vector has more than n bits");
    }
    for (uint64_t row : rows_) {
        if (y & lowest_bit(row)) {
            y ^= row;
        }
    }
    if (y == 0) {
        return false;
    }
    uint64_t pivot = lowest_bit(y);
    for (uint64_t &row : rows_) {
        if (row & pivot) {
            row ^= y;
        }
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), y,
                                [](uint64_t a, uint64_t b) { return lowest_bit(a) < lowest_bit(b); });
    rows_.insert(pos, y);
    return true;
}

std::vector<uint64_t> Gf2System::nullspace_basis() const {
    uint64_t pivots = 0;
    for (uint64_t row : rows_) {
        pivots |= lowest_bit(row);
    }
    std::vector<uint64_t> basis;
    for (int b = 0; b < n_; b++) {
        uint64_t free_bit = uint64_t{1} << b;
        if (pivots & free_bit) {
            continue;
        }
        uint64_t x = free_bit;
        for (uint64_t row : rows_) {
            if (row & free_bit) {
                x |= lowest_bit(row);
            }
        }
        basis.push_back(x);
    }
    return basis;
}

std::vector<uint64_t> solve_nullspace(const Gf2System &sys) {
    auto basis = sys.nullspace_basis();
    if (basis.empty()) {
        return {0};
    }
    if (basis.size() > 30) {
        throw DomainError("solve_nullspace: solution space too large to enumerate");
    }
    std::vector<uint64_t> out;
    uint64_t combos = uint64_t{1} << basis.size();
    out.reserve(combos - 1);
    for (uint64_t mask = 1; mask < combos; mask++) {
        uint64_t x = 0;
        for (size_t k = 0; k < basis.size(); k++) {
            if ((mask >> k) & 1) {
                x ^= basis[k];
            }
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RecoveryReport recover(const SimonFunction &f, uint64_t seed, int max_queries) {
    const int n = f.n;
    if (n < 1 || f.table.size() != (size_t{1} << n)) {
        throw DomainError("recover: malformed oracle table");
    }
    auto stages = run_stages_unchecked(f.table, n);
    auto dist = first_register_distribution(stages.at(StageLabel::HOH));

    Rng rng(seed);
    Gf2System sys(n);
    RecoveryReport report;
    int checked_rank = -1;
    while (report.queries < max_queries) {
        auto y = static_cast<uint32_t>(rng.sample(dist, Tolerances::probability_floor));
        report.queries++;
        report.samples.push_back(y);
        sys.add_constraint(y);
        report.rank = sys.rank();

        if (sys.rank() == n) {
            report.s_hat = 0;
            report.verified = true;
            return report;
        }
        if (sys.rank() == n - 1 && checked_rank != sys.rank()) {
            checked_rank = sys.rank();
            auto candidate = static_cast<uint32_t>(solve_nullspace(sys).front());
            if (f(0) == f(candidate)) {
                report.s_hat = candidate;
                report.verified = true;
                return report;
            }
        }
    }
    return report;
}

}  // namespace simon_coherence
