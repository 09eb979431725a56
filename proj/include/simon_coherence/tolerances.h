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

#ifndef SIMON_COHERENCE_TOLERANCES_H
#define SIMON_COHERENCE_TOLERANCES_H

#include <cstddef>

namespace simon_coherence {

/// Every numerical threshold used by the library, in one place.
struct Tolerances {
    /// Allowed deviation of a state vector's norm (squared) from 1.
    static constexpr double state_norm = 1e-12;
    /// Allowed Hermiticity defect and trace deviation of a density matrix.
    static constexpr double hermitian = 1e-12;
    static constexpr double trace = 1e-12;
    /// Smallest eigenvalue accepted as "nonnegative" for a density matrix.
    static constexpr double psd_floor = -1e-10;
    /// Eigenvalues at or below this are treated as exact zeros in lambda^alpha and entropies.
    static constexpr double eigenvalue_floor = 1e-12;
    /// A density matrix whose largest eigenvalue is this close to 1 is a projector.
    static constexpr double rank_one = 1e-10;
    /// Jacobi eigensolver: off-diagonal Frobenius threshold and sweep cap.
    static constexpr double jacobi_off_diagonal = 1e-12;
    static constexpr int jacobi_max_sweeps = 100;
    /// Reconstruction error bound guaranteed by hermitian_eig.
    static constexpr double eig_reconstruction = 1e-9;
    /// Width of the window around alpha = 1 delegated to the relative-entropy limit.
    static constexpr double alpha_one_window = 1e-9;
    /// Diagonal entries of rho^alpha at or below this are raised to 1/alpha as 0.
    static constexpr double power_diag_floor = 1e-15;
    /// Negative coherence round-off clamped to 0; anything below is an error.
    static constexpr double negative_clamp = -1e-10;
    /// Agreement required between dense, pure-state and closed-form evaluators.
    static constexpr double method_agreement = 1e-9;
    /// Half-width of the Neutral band in regime classification.
    static constexpr double neutral_band = 1e-12;
    /// Born probabilities at or below this are treated as exact zeros when sampling.
    static constexpr double probability_floor = 1e-20;
    /// Largest register width for which dense density matrices are built.
    static constexpr int dense_max_qubits = 5;
};

}  // namespace simon_coherence

#endif
