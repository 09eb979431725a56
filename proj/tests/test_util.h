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

#ifndef SIMON_COHERENCE_TEST_UTIL_H
#define SIMON_COHERENCE_TEST_UTIL_H

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "simon_coherence/quantum_state.h"
#include "simon_coherence/simon_circuit.h"

namespace simon_coherence::testing {

/// f(00)=00, f(01)=11, f(10)=11, f(11)=00 with s = 11.
inline SimonFunction two_bit_oracle() {
    return SimonFunction{2, {0b00, 0b11, 0b11, 0b00}, 0b11};
}

/// f(000)=101, f(001)=010, f(010)=000, f(011)=110, f(100)=000, f(101)=110, f(110)=101,
/// f(111)=010 with s = 110.
inline SimonFunction three_bit_oracle() {
    return SimonFunction{3, {0b101, 0b010, 0b000, 0b110, 0b000, 0b110, 0b101, 0b010}, 0b110};
}

inline std::vector<cplx> random_amplitudes(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<cplx> amps(dim);
    double norm2 = 0;
    for (auto &a : amps) {
        a = cplx(normal(rng), normal(rng));
        norm2 += std::norm(a);
    }
    double scale = 1 / std::sqrt(norm2);
    for (auto &a : amps) {
        a *= scale;
    }
    return amps;
}

inline StateVector random_state(int n_first, int n_second, std::mt19937_64 &rng) {
    return StateVector(n_first, n_second, random_amplitudes(size_t{1} << (n_first + n_second), rng));
}

inline ComplexMatrix random_hermitian(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    ComplexMatrix m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = normal(rng);
        for (size_t j = i + 1; j < dim; j++) {
            cplx z(normal(rng), normal(rng));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

/// Mixture of `rank` random pure states with random weights.
inline DensityMatrix random_density(size_t dim, size_t rank, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> uniform(0.1, 1.0);
    std::vector<double> weights(rank);
    double total = 0;
    for (auto &w : weights) {
        w = uniform(rng);
        total += w;
    }
    ComplexMatrix m(dim);
    for (size_t k = 0; k < rank; k++) {
        auto v = random_amplitudes(dim, rng);
        for (size_t i = 0; i < dim; i++) {
            for (size_t j = 0; j < dim; j++) {
                m(i, j) += weights[k] / total * v[i] * std::conj(v[j]);
            }
        }
    }
    // Exact Hermiticity and unit trace after rounding.
    cplx tr = m.trace();
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = i + 1; j < dim; j++) {
            cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = avg;
            m(j, i) = std::conj(avg);
        }
        m(i, i) = m(i, i).real() / tr.real();
    }
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            if (i != j) {
                m(i, j) /= tr.real();
            }
        }
    }
    return DensityMatrix(std::move(m));
}

/// P rho P^dagger for the basis permutation |i> -> |perm[i]>.
inline DensityMatrix permute_basis(const DensityMatrix &rho, const std::vector<size_t> &perm) {
    ComplexMatrix m(rho.dim());
    for (size_t i = 0; i < rho.dim(); i++) {
        for (size_t j = 0; j < rho.dim(); j++) {
            m(perm[i], perm[j]) = rho(i, j);
        }
    }
    return DensityMatrix(std::move(m));
}

inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    double worst = 0;
    for (size_t k = 0; k < a.entries().size(); k++) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

inline double max_abs_diff(const StateVector &a, const StateVector &b) {
    double worst = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        worst = std::max(worst, std::abs(a.amps()[k] - b.amps()[k]));
    }
    return worst;
}

}  // namespace simon_coherence::testing

#endif
