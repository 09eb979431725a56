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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "simon_coherence/simon_circuit.h"
#include "test_util.h"

using namespace simon_coherence;
using namespace simon_coherence::testing;
namespace k = simon_coherence::kernels;

// Sizes straddle kernels::parallel_threshold so both the single-threaded fallback and the
// OpenMP path run.

TEST(Kernels, fwht_parallel_matches_serial_bitwise) {
    std::mt19937_64 rng(1);
    for (auto [nf, ns] : {std::pair{2, 1}, std::pair{6, 6}, std::pair{7, 7}}) {
        auto a = random_amplitudes(size_t{1} << (nf + ns), rng);
        auto b = a;
        k::serial::fwht_first_register(a, nf, ns);
        k::parallel::fwht_first_register(b, nf, ns);
        EXPECT_EQ(a, b);
    }
}

TEST(Kernels, fwht_matches_naive_matrix) {
    // Reference: out[x, y] = 2^{-n/2} sum_x' (-1)^{x.x'} in[x', y].
    std::mt19937_64 rng(2);
    int nf = 3;
    int ns = 2;
    auto in = random_amplitudes(size_t{1} << (nf + ns), rng);
    auto fast = in;
    k::serial::fwht_first_register(fast, nf, ns);
    double scale = 1 / std::sqrt(8.0);
    for (uint64_t x = 0; x < 8; x++) {
        for (uint64_t y = 0; y < 4; y++) {
            cplx acc = 0;
            for (uint64_t xp = 0; xp < 8; xp++) {
                acc += (parity_dot(x, xp) ? -1.0 : 1.0) * in[(xp << ns) | y];
            }
            EXPECT_LT(std::abs(fast[(x << ns) | y] - scale * acc), 1e-14);
        }
    }
}

TEST(Kernels, oracle_permute_parallel_matches_serial) {
    std::mt19937_64 rng(3);
    for (int n : {2, 7}) {
        auto f = random_two_to_one(n, 1, 42);
        auto in = random_amplitudes(size_t{1} << (2 * n), rng);
        std::vector<cplx> a(in.size());
        std::vector<cplx> b(in.size());
        k::serial::oracle_permute(in, a, f.table, n);
        k::parallel::oracle_permute(in, b, f.table, n);
        EXPECT_EQ(a, b);
    }
}

TEST(Kernels, outer_product_parallel_matches_serial) {
    std::mt19937_64 rng(4);
    for (size_t d : {4u, 128u}) {
        auto v = random_amplitudes(d, rng);
        std::vector<cplx> a(d * d);
        std::vector<cplx> b(d * d);
        k::serial::outer_product(v, a);
        k::parallel::outer_product(v, b);
        EXPECT_EQ(a, b);
    }
}

TEST(Kernels, reductions_parallel_match_serial) {
    std::mt19937_64 rng(5);
    for (size_t d : {3u, 100u, 200u}) {
        auto m = random_amplitudes(d * d, rng);
        EXPECT_NEAR(k::parallel::off_diagonal_abs_sum(m, d), k::serial::off_diagonal_abs_sum(m, d), 1e-12);
        EXPECT_NEAR(k::parallel::frobenius_squared(m), k::serial::frobenius_squared(m), 1e-12);
        for (double q : {1.0, 2.0, 3.5}) {
            for (double p : {1.0, 1.3, 2.0, std::numeric_limits<double>::infinity()}) {
                EXPECT_NEAR(k::parallel::lqp_norm(m, d, q, p), k::serial::lqp_norm(m, d, q, p), 1e-12)
                    << "d=" << d << " q=" << q << " p=" << p;
            }
        }
    }
}

TEST(Kernels, marginal_parallel_matches_serial) {
    std::mt19937_64 rng(6);
    for (auto [nf, ns] : {std::pair{2, 2}, std::pair{7, 6}}) {
        auto amps = random_amplitudes(size_t{1} << (nf + ns), rng);
        std::vector<double> a(size_t{1} << nf);
        std::vector<double> b(size_t{1} << nf);
        k::serial::first_register_marginal(amps, nf, ns, a);
        k::parallel::first_register_marginal(amps, nf, ns, b);
        EXPECT_EQ(a, b);
    }
}

TEST(Kernels, lqp_norm_small_cases) {
    std::vector<cplx> zero(9);
    EXPECT_EQ(k::serial::lqp_norm(zero, 3, 1, 2), 0);
    std::vector<cplx> id{1, 0, 0, 1};
    EXPECT_EQ(k::serial::lqp_norm(id, 2, 1, 2), 2);
    std::vector<cplx> quarter(16, 0.25);
    EXPECT_EQ(k::serial::lqp_norm(quarter, 4, 1, 1), 4);
    // Columns (3,4) and (0,5): l2 norms 5 and 5, l_inf norm over them 5.
    std::vector<cplx> m{3, 0, 4, 5};
    EXPECT_NEAR(k::serial::lqp_norm(m, 2, std::numeric_limits<double>::infinity(), 2), 5, 1e-15);
    EXPECT_NEAR(k::serial::lqp_norm(m, 2, 2, 2), std::sqrt(50.0), 1e-14);
}
