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

#include "simon_coherence/coherence_measures.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "simon_coherence/errors.h"
#include "simon_coherence/simon_circuit.h"
#include "test_util.h"

using namespace simon_coherence;
using namespace simon_coherence::testing;

namespace {

DensityMatrix rho_h(int n) {
    auto f = random_two_to_one(n, 1, 0);
    return density_of(run_stages(f).at(StageLabel::H));
}

DensityMatrix rho_hoh(const SimonFunction &f) {
    return density_of(run_stages(f).at(StageLabel::HOH));
}

/// p|+><+| + (1-p) I/2
DensityMatrix werner_qubit(double p) {
    ComplexMatrix m(2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(0, 1) = p / 2;
    m(1, 0) = p / 2;
    return DensityMatrix(std::move(m));
}

DensityMatrix random_diagonal(size_t dim, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<double> w(dim);
    for (auto &x : w) {
        x = u(rng);
    }
    double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto &x : w) {
        x /= total;
    }
    return DensityMatrix(ComplexMatrix::diagonal(w));
}

std::vector<CoherenceMeasure> wide_panel() {
    std::vector<CoherenceMeasure> panel;
    for (double a : {0.3, 0.5, 0.9, 1.1, 1.5, 2.0}) {
        panel.push_back(CoherenceMeasure::tsallis(a));
    }
    for (double p : {1.0, 1.3, 1.7, 2.0}) {
        panel.push_back(CoherenceMeasure::l1p(p));
    }
    panel.push_back(CoherenceMeasure::relative_entropy());
    panel.push_back(CoherenceMeasure::skew_information());
    panel.push_back(CoherenceMeasure::l1());
    return panel;
}

}  // namespace

TEST(Measure, factories_enforce_ranges) {
    EXPECT_THROW(CoherenceMeasure::tsallis(0), DomainError);
    EXPECT_THROW(CoherenceMeasure::tsallis(1), DomainError);
    EXPECT_THROW(CoherenceMeasure::tsallis(2.5), DomainError);
    EXPECT_THROW(CoherenceMeasure::tsallis(std::nan("")), DomainError);
    EXPECT_NO_THROW(CoherenceMeasure::tsallis(2));
    EXPECT_THROW(CoherenceMeasure::l1p(0.99), DomainError);
    EXPECT_THROW(CoherenceMeasure::l1p(2.01), DomainError);
    EXPECT_NO_THROW(CoherenceMeasure::l1p(1));
}

TEST(Measure, names_and_round_trip) {
    for (const auto &m : wide_panel()) {
        EXPECT_EQ(CoherenceMeasure::from_name(m.name(), m.parameter()), m) << m.label();
    }
    EXPECT_EQ(CoherenceMeasure::tsallis(0.5).label(), "tsallis(alpha=0.5)");
    EXPECT_EQ(CoherenceMeasure::l1p(2).name(), "l1p");
    EXPECT_EQ(CoherenceMeasure::relative_entropy().name(), "rel_entropy");
    EXPECT_EQ(CoherenceMeasure::skew_information().name(), "skew_info");
    EXPECT_FALSE(CoherenceMeasure::l1().parameter().has_value());
    EXPECT_THROW(CoherenceMeasure::from_name("bogus"), DomainError);
    EXPECT_THROW(CoherenceMeasure::from_name("tsallis"), DomainError);
}

TEST(Measure, default_panel) {
    auto panel = default_panel();
    ASSERT_EQ(panel.size(), 6u);
    EXPECT_EQ(panel[0], CoherenceMeasure::tsallis(0.5));
    EXPECT_EQ(panel[1], CoherenceMeasure::tsallis(2));
    EXPECT_EQ(panel[2], CoherenceMeasure::l1p(1));
    EXPECT_EQ(panel[3], CoherenceMeasure::l1p(2));
    EXPECT_EQ(panel[4], CoherenceMeasure::relative_entropy());
    EXPECT_EQ(panel[5], CoherenceMeasure::skew_information());
}

TEST(Clamp, behaviour) {
    EXPECT_EQ(clamp_coherence(-5e-11, "x"), 0);
    EXPECT_EQ(clamp_coherence(0.25, "x"), 0.25);
    EXPECT_THROW(clamp_coherence(-1e-9, "x"), InternalConsistencyError);
}

TEST(LqpNorm, examples) {
    EXPECT_EQ(lqp_norm(ComplexMatrix(3), 1, 2), 0);
    EXPECT_EQ(lqp_norm(ComplexMatrix::identity(2), 1, 2), 2);
    ComplexMatrix quarter(4);
    for (auto &e : quarter.entries()) {
        e = 0.25;
    }
    EXPECT_NEAR(lqp_norm(quarter, 1, 1), 4, 1e-15);
}

TEST(Tsallis, examples) {
    EXPECT_NEAR(tsallis_coherence(rho_h(2), 0.5), 1.5, 1e-12);
    EXPECT_NEAR(tsallis_coherence(rho_h(2), 2), 1, 1e-12);
    std::mt19937_64 rng(1);
    EXPECT_NEAR(tsallis_coherence(random_diagonal(4, rng), 0.7), 0, 1e-10);
}

TEST(Tsallis, alpha_near_one_uses_relative_entropy_limit) {
    auto rho = rho_h(2);
    EXPECT_NEAR(tsallis_coherence(rho, 1.0), std::log(2.0) * 2, 1e-12);
    EXPECT_NEAR(tsallis_coherence(rho, 1.0 + 1e-10), std::log(2.0) * 2, 1e-12);
    EXPECT_THROW(tsallis_coherence(rho, 0), DomainError);
    EXPECT_THROW(tsallis_coherence(rho, 2.1), DomainError);
}

TEST(L1p, examples) {
    EXPECT_NEAR(l1p_coherence(rho_h(2), 1), 3, 1e-12);
    EXPECT_NEAR(l1p_coherence(rho_h(2), 2), 1.7320508075688772, 1e-12);
    std::mt19937_64 rng(2);
    EXPECT_NEAR(l1p_coherence(random_diagonal(8, rng), 1.5), 0, 1e-15);
    EXPECT_THROW(l1p_coherence(rho_h(1), 0.5), DomainError);
    EXPECT_THROW(l1p_coherence(rho_h(1), 3), DomainError);
}

TEST(RelativeEntropy, examples) {
    EXPECT_NEAR(relative_entropy_coherence(rho_h(2)), 2, 1e-12);
    EXPECT_NEAR(relative_entropy_coherence(rho_hoh(three_bit_oracle())), 4, 1e-12);
    std::mt19937_64 rng(3);
    EXPECT_NEAR(relative_entropy_coherence(random_diagonal(4, rng)), 0, 1e-10);
}

TEST(SkewInformation, examples) {
    EXPECT_NEAR(skew_information_coherence(rho_h(3)), 7.0 / 8, 1e-12);
    EXPECT_NEAR(skew_information_coherence(rho_hoh(three_bit_oracle())), 15.0 / 16, 1e-12);
    EXPECT_NEAR(skew_information_coherence(rho_h(2)), 0.75, 1e-12);
    std::mt19937_64 rng(4);
    EXPECT_NEAR(skew_information_coherence(random_diagonal(4, rng)), 0, 1e-10);
}

TEST(L1, examples) {
    EXPECT_NEAR(l1_coherence(rho_h(3)), 7, 1e-12);
    EXPECT_NEAR(l1_coherence(rho_hoh(three_bit_oracle())), 15, 1e-12);
    ComplexMatrix m(2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(0, 1) = 0.3;
    m(1, 0) = 0.3;
    EXPECT_NEAR(l1_coherence(DensityMatrix(m)), 0.6, 1e-15);
}

TEST(VonNeumann, entropy_values) {
    EXPECT_NEAR(von_neumann_entropy(rho_h(3)), 0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.5, 0.5}))), 1, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.25, 0.25, 0.25, 0.25}))), 2, 1e-12);
}

TEST(MixedQubit, analytic_values) {
    // Eigenvalues a = (1+p)/2, b = (1-p)/2 with eigenvectors |+>, |->; diagonal stays (1/2, 1/2).
    for (double p : {0.0, 0.2, 0.5, 0.9, 0.999}) {
        auto rho = werner_qubit(p);
        double a = (1 + p) / 2;
        double b = (1 - p) / 2;
        auto h = [](double x) { return x <= 0 ? 0.0 : -x * std::log2(x); };
        EXPECT_NEAR(l1_coherence(rho), p, 1e-14);
        for (double q : {1.0, 1.5, 2.0}) {
            EXPECT_NEAR(l1p_coherence(rho, q), p, 1e-14);
        }
        EXPECT_NEAR(relative_entropy_coherence(rho), 1 - h(a) - h(b), 1e-10) << p;
        EXPECT_NEAR(skew_information_coherence(rho), 0.5 - std::sqrt(a * b), 1e-10) << p;
        for (double alpha : {0.3, 0.5, 1.5, 2.0}) {
            double diag = (std::pow(a, alpha) + std::pow(b, alpha)) / 2;
            double expected = (2 * std::pow(diag, 1 / alpha) - 1) / (alpha - 1);
            EXPECT_NEAR(tsallis_coherence(rho, alpha), expected, 1e-10) << "p=" << p << " alpha=" << alpha;
        }
    }
}

TEST(MixedStates, random_rank_two_values_are_finite_and_nonnegative) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; trial++) {
        auto rho = random_density(8, 2, rng);
        for (const auto &m : wide_panel()) {
            double v = coherence(rho, m);
            EXPECT_TRUE(std::isfinite(v));
            EXPECT_GE(v, 0) << m.label();
        }
    }
}

TEST(Properties, zero_on_diagonal_states) {
    std::mt19937_64 rng(6);
    for (size_t dim : {2u, 4u, 8u, 16u}) {
        auto rho = random_diagonal(dim, rng);
        for (const auto &m : wide_panel()) {
            EXPECT_NEAR(coherence(rho, m), 0, 1e-10) << m.label() << " dim=" << dim;
        }
    }
    auto basis = StateVector::basis(2, 2, 1, 2);
    for (const auto &m : wide_panel()) {
        EXPECT_NEAR(pure_state_coherence(basis, m), 0, 1e-15) << m.label();
        EXPECT_NEAR(coherence(density_of(basis), m), 0, 1e-12) << m.label();
    }
}

TEST(Properties, reduction_identities_on_random_pure_states) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; trial++) {
        int n = 1 + trial % 4;
        auto rho = density_of(random_state(n, 0, rng));
        double cs = skew_information_coherence(rho);
        double cr = relative_entropy_coherence(rho);
        EXPECT_NEAR(tsallis_coherence(rho, 0.5), 2 * cs, 1e-9);
        EXPECT_NEAR(tsallis_coherence(rho, 1 + 1e-6), std::log(2.0) * cr, 1e-4);
        EXPECT_NEAR(tsallis_coherence(rho, 1 - 1e-6), std::log(2.0) * cr, 1e-4);
        EXPECT_NEAR(l1p_coherence(rho, 1), l1_coherence(rho), 1e-12);
    }
}

TEST(Properties, reduction_identities_on_random_mixed_states) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; trial++) {
        auto rho = random_density(4, 1 + trial % 4, rng);
        EXPECT_NEAR(l1p_coherence(rho, 1), l1_coherence(rho), 1e-12);
        EXPECT_NEAR(tsallis_coherence(rho, 1 + 1e-6), std::log(2.0) * relative_entropy_coherence(rho), 1e-4);
    }
}

TEST(Properties, basis_permutation_invariance) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; trial++) {
        auto rho = random_density(8, 1 + trial % 3, rng);
        std::vector<size_t> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto permuted = permute_basis(rho, perm);
        for (const auto &m : wide_panel()) {
            EXPECT_NEAR(coherence(permuted, m), coherence(rho, m), 1e-9) << m.label();
        }
    }
}

TEST(Properties, dense_matches_pure_fast_on_all_stages) {
    for (int n = 1; n <= 5; n++) {
        for (uint64_t seed = 0; seed < 2; seed++) {
            uint32_t s = static_cast<uint32_t>(1 + (seed * 5 + n) % ((1u << n) - 1));
            auto f = random_two_to_one(n, s, seed);
            for (const auto &[label, psi] : run_stages(f)) {
                auto rho = density_of(psi);
                for (const auto &m : wide_panel()) {
                    EXPECT_NEAR(coherence(rho, m), pure_state_coherence(psi, m), 1e-9)
                        << "n=" << n << " stage=" << stage_name(label) << " " << m.label();
                }
            }
        }
    }
}

TEST(Properties, dense_matches_pure_fast_on_random_states) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 20; trial++) {
        auto psi = random_state(1 + trial % 3, 1, rng);
        auto rho = density_of(psi);
        for (const auto &m : wide_panel()) {
            EXPECT_NEAR(coherence(rho, m), pure_state_coherence(psi, m), 1e-9) << m.label();
        }
    }
}

TEST(PureFast, examples) {
    // Post-measurement state at n = 3: four amplitudes of magnitude 1/2.
    auto f = three_bit_oracle();
    auto m = measure_second_register(run_stages(f).at(StageLabel::HO), f, 0);
    auto psi_m = hadamard_first_register(m.state);
    EXPECT_NEAR(pure_state_coherence(psi_m, CoherenceMeasure::l1()), 3, 1e-12);
    EXPECT_NEAR(pure_state_coherence(run_stages(f).at(StageLabel::H), CoherenceMeasure::relative_entropy()), 3, 1e-12);
}

TEST(PureFast, oracle_invariance) {
    for (int n = 1; n <= 5; n++) {
        for (uint64_t seed = 0; seed < 3; seed++) {
            auto f = random_two_to_one(n, static_cast<uint32_t>((1u << n) - 1), seed);
            auto stages = run_stages(f);
            for (const auto &m : default_panel()) {
                EXPECT_NEAR(coherence(density_of(stages.at(StageLabel::HO)), m),
                            coherence(density_of(stages.at(StageLabel::H)), m), 1e-9);
            }
        }
    }
}
