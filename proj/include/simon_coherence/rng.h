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

#ifndef SIMON_COHERENCE_RNG_H
#define SIMON_COHERENCE_RNG_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace simon_coherence {

/// Seeded generator whose derived draws do not depend on the standard library's
/// distribution implementations, so seeds reproduce across toolchains.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next() {
        return engine_();
    }

    /// Uniform on [0, bound), bound >= 1.
    uint64_t uniform_below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % bound;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Index k drawn with probability weights[k] / sum(weights). Weights at or below `floor`
    /// are never drawn.
    size_t sample(std::span<const double> weights, double floor = 0) {
        double total = 0;
        for (double w : weights) {
            if (w > floor) {
                total += w;
            }
        }
        double u = uniform01() * total;
        double acc = 0;
        size_t last_positive = 0;
        for (size_t k = 0; k < weights.size(); k++) {
            if (weights[k] <= floor) {
                continue;
            }
            last_positive = k;
            acc += weights[k];
            if (u < acc) {
                return k;
            }
        }
        return last_positive;
    }

   private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent per-trial seeds from one base seed.
inline uint64_t mix_seed(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace simon_coherence

#endif
