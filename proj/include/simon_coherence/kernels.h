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

#ifndef SIMON_COHERENCE_KERNELS_H
#define SIMON_COHERENCE_KERNELS_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

// Data-parallel inner loops over amplitude vectors and dense matrices.
//
// `serial` is the reference implementation and is what the tests compare against.
// `parallel` is the OpenMP version used by the library; it falls back to a single thread
// below a size threshold, or when built without OpenMP. Element-wise kernels produce
// bit-identical results in both namespaces; reductions may differ in the last ulps because
// the summation order differs.

namespace simon_coherence::kernels {

using cplx = std::complex<double>;

/// Loops shorter than this run single-threaded.
inline constexpr size_t parallel_threshold = size_t{1} << 12;

namespace serial {

/// In-place normalized Walsh-Hadamard transform on the n_first high bits of a
/// (n_first + n_second)-bit joint index.
void fwht_first_register(std::span<cplx> amps, int n_first, int n_second);

/// out[(x << n) | (y ^ table[x])] = in[(x << n) | y]
void oracle_permute(std::span<const cplx> in, std::span<cplx> out, std::span<const uint32_t> table, int n);

/// out (row-major, d x d) = amps amps^dagger
void outer_product(std::span<const cplx> amps, std::span<cplx> out);

/// l_q norm of the column l_p norms of a row-major d x d matrix. p or q may be +infinity.
double lqp_norm(std::span<const cplx> matrix, size_t dim, double q, double p);

/// sum_{i != j} |A_ij|
double off_diagonal_abs_sum(std::span<const cplx> matrix, size_t dim);

/// sum_ij |A_ij|^2
double frobenius_squared(std::span<const cplx> matrix);

/// out[x] = sum_y |amps[(x << n_second) | y]|^2; out has 2^n_first entries.
void first_register_marginal(std::span<const cplx> amps, int n_first, int n_second, std::span<double> out);

}  // namespace serial

namespace parallel {

void fwht_first_register(std::span<cplx> amps, int n_first, int n_second);
void oracle_permute(std::span<const cplx> in, std::span<cplx> out, std::span<const uint32_t> table, int n);
void outer_product(std::span<const cplx> amps, std::span<cplx> out);
double lqp_norm(std::span<const cplx> matrix, size_t dim, double q, double p);
double off_diagonal_abs_sum(std::span<const cplx> matrix, size_t dim);
double frobenius_squared(std::span<const cplx> matrix);
void first_register_marginal(std::span<const cplx> amps, int n_first, int n_second, std::span<double> out);

}  // namespace parallel

/// Number of OpenMP threads the parallel kernels may use (1 without OpenMP).
int max_threads();

}  // namespace simon_coherence::kernels

#endif
