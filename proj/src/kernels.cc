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

#include "simon_coherence/kernels.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace simon_coherence::kernels {

namespace {

// Index of the k-th pair (lo, lo | bit) for a butterfly on `bit`: insert a zero at that bit.
inline size_t pair_low(size_t k, size_t bit) {
    return ((k & ~(bit - 1)) << 1) | (k & (bit - 1));
}

inline double entry_power(cplx a, double p) {
    if (p == 1) {
        return std::abs(a);
    }
    if (p == 2) {
        return std::norm(a);
    }
    if (std::isinf(p)) {
        return std::abs(a);
    }
    double m = std::abs(a);
    return m == 0 ? 0.0 : std::pow(m, p);
}

inline double accumulate_power(double acc, double term, double p) {
    return std::isinf(p) ? std::max(acc, term) : acc + term;
}

inline double finish_power(double acc, double p) {
    if (std::isinf(p) || p == 1) {
        return acc;
    }
    if (p == 2) {
        return std::sqrt(acc);
    }
    return std::pow(acc, 1.0 / p);
}

inline double outer_norm(std::span<const double> column_norms, double q) {
    double acc = 0;
    for (double c : column_norms) {
        acc = accumulate_power(acc, std::isinf(q) || q == 1 ? c : std::pow(c, q), q);
    }
    return finish_power(acc, q);
}

}  // namespace

int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace serial {

void fwht_first_register(std::span<cplx> amps, int n_first, int n_second) {
    size_t half = amps.size() / 2;
    for (int b = 0; b < n_first; b++) {
        size_t bit = size_t{1} << (n_second + b);
        for (size_t k = 0; k < half; k++) {
            size_t lo = pair_low(k, bit);
            size_t hi = lo | bit;
            cplx u = amps[lo];
            cplx v = amps[hi];
            amps[lo] = u + v;
            amps[hi] = u - v;
        }
    }
    double scale = 1.0 / std::sqrt(static_cast<double>(size_t{1} << n_first));
    for (auto &a : amps) {
        a *= scale;
    }
}

void oracle_permute(std::span<const cplx> in, std::span<cplx> out, std::span<const uint32_t> table, int n) {
    size_t width = size_t{1} << n;
    for (size_t x = 0; x < width; x++) {
        size_t fx = table[x];
        for (size_t y = 0; y < width; y++) {
            out[(x << n) | (y ^ fx)] = in[(x << n) | y];
        }
    }
}

void outer_product(std::span<const cplx> amps, std::span<cplx> out) {
    size_t d = amps.size();
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            out[i * d + j] = amps[i] * std::conj(amps[j]);
        }
    }
}

double lqp_norm(std::span<const cplx> matrix, size_t dim, double q, double p) {
    std::vector<double> column_norms(dim);
    for (size_t j = 0; j < dim; j++) {
        double acc = 0;
        for (size_t i = 0; i < dim; i++) {
            acc = accumulate_power(acc, entry_power(matrix[i * dim + j], p), p);
        }
        column_norms[j] = finish_power(acc, p);
    }
    return outer_norm(column_norms, q);
}

double off_diagonal_abs_sum(std::span<const cplx> matrix, size_t dim) {
    double acc = 0;
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            if (i != j) {
                acc += std::abs(matrix[i * dim + j]);
            }
        }
    }
    return acc;
}

double frobenius_squared(std::span<const cplx> matrix) {
    double acc = 0;
    for (const auto &a : matrix) {
        acc += std::norm(a);
    }
    return acc;
}

void first_register_marginal(std::span<const cplx> amps, int n_first, int n_second, std::span<double> out) {
    size_t rows = size_t{1} << n_first;
    size_t cols = size_t{1} << n_second;
    for (size_t x = 0; x < rows; x++) {
        double acc = 0;
        for (size_t y = 0; y < cols; y++) {
            acc += std::norm(amps[x * cols + y]);
        }
        out[x] = acc;
    }
}

}  // namespace serial

namespace parallel {

void fwht_first_register(std::span<cplx> amps, int n_first, int n_second) {
    const auto half = static_cast<std::ptrdiff_t>(amps.size() / 2);
    const bool go_parallel = amps.size() >= parallel_threshold;
    for (int b = 0; b < n_first; b++) {
        size_t bit = size_t{1} << (n_second + b);
#pragma omp parallel for schedule(static) if (go_parallel)
        for (std::ptrdiff_t k = 0; k < half; k++) {
            size_t lo = pair_low(static_cast<size_t>(k), bit);
            size_t hi = lo | bit;
            cplx u = amps[lo];
            cplx v = amps[hi];
            amps[lo] = u + v;
            amps[hi] = u - v;
        }
    }
    double scale = 1.0 / std::sqrt(static_cast<double>(size_t{1} << n_first));
    const auto d = static_cast<std::ptrdiff_t>(amps.size());
#pragma omp parallel for schedule(static) if (go_parallel)
    for (std::ptrdiff_t i = 0; i < d; i++) {
        amps[i] *= scale;
    }
}

void oracle_permute(std::span<const cplx> in, std::span<cplx> out, std::span<const uint32_t> table, int n) {
    const auto width = static_cast<std::ptrdiff_t>(size_t{1} << n);
#pragma omp parallel for schedule(static) if (in.size() >= parallel_threshold)
    for (std::ptrdiff_t x = 0; x < width; x++) {
        size_t row = static_cast<size_t>(x) << n;
        size_t fx = table[x];
        for (size_t y = 0; y < static_cast<size_t>(width); y++) {
            out[row | (y ^ fx)] = in[row | y];
        }
    }
}

void outer_product(std::span<const cplx> amps, std::span<cplx> out) {
    const auto d = static_cast<std::ptrdiff_t>(amps.size());
#pragma omp parallel for schedule(static) if (amps.size() * amps.size() >= parallel_threshold)
    for (std::ptrdiff_t i = 0; i < d; i++) {
        cplx ai = amps[i];
        cplx *row = out.data() + i * d;
        for (std::ptrdiff_t j = 0; j < d; j++) {
            row[j] = ai * std::conj(amps[j]);
        }
    }
}

double lqp_norm(std::span<const cplx> matrix, size_t dim, double q, double p) {
    // Threads own contiguous column blocks and stream rows through them.
    constexpr size_t block = 64;
    std::vector<double> column_norms(dim);
    const auto blocks = static_cast<std::ptrdiff_t>((dim + block - 1) / block);
#pragma omp parallel for schedule(static) if (matrix.size() >= parallel_threshold)
    for (std::ptrdiff_t bi = 0; bi < blocks; bi++) {
        size_t j0 = static_cast<size_t>(bi) * block;
        size_t j1 = std::min(dim, j0 + block);
        double acc[block] = {};
        for (size_t i = 0; i < dim; i++) {
            const cplx *row = matrix.data() + i * dim;
            for (size_t j = j0; j < j1; j++) {
                acc[j - j0] = accumulate_power(acc[j - j0], entry_power(row[j], p), p);
            }
        }
        for (size_t j = j0; j < j1; j++) {
            column_norms[j] = finish_power(acc[j - j0], p);
        }
    }
    return outer_norm(column_norms, q);
}

double off_diagonal_abs_sum(std::span<const cplx> matrix, size_t dim) {
    double acc = 0;
    const auto d = static_cast<std::ptrdiff_t>(dim);
#pragma omp parallel for schedule(static) reduction(+ : acc) if (matrix.size() >= parallel_threshold)
    for (std::ptrdiff_t i = 0; i < d; i++) {
        const cplx *row = matrix.data() + i * d;
        for (std::ptrdiff_t j = 0; j < d; j++) {
            if (i != j) {
                acc += std::abs(row[j]);
            }
        }
    }
    return acc;
}

double frobenius_squared(std::span<const cplx> matrix) {
    double acc = 0;
    const auto d = static_cast<std::ptrdiff_t>(matrix.size());
#pragma omp parallel for schedule(static) reduction(+ : acc) if (matrix.size() >= parallel_threshold)
    for (std::ptrdiff_t i = 0; i < d; i++) {
        acc += std::norm(matrix[i]);
    }
    return acc;
}

void first_register_marginal(std::span<const cplx> amps, int n_first, int n_second, std::span<double> out) {
    const auto rows = static_cast<std::ptrdiff_t>(size_t{1} << n_first);
    size_t cols = size_t{1} << n_second;
#pragma omp parallel for schedule(static) if (amps.size() >= parallel_threshold)
    for (std::ptrdiff_t x = 0; x < rows; x++) {
        double acc = 0;
        for (size_t y = 0; y < cols; y++) {
            acc += std::norm(amps[static_cast<size_t>(x) * cols + y]);
        }
        out[x] = acc;
    }
}

}  // namespace parallel

}  // namespace simon_coherence::kernels
