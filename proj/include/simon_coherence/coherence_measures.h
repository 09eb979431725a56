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

#ifndef SIMON_COHERENCE_COHERENCE_MEASURES_H
#define SIMON_COHERENCE_COHERENCE_MEASURES_H

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "simon_coherence/quantum_state.h"

namespace simon_coherence {

// Coherence quantifiers with respect to the computational basis.
//
// Each measure has a dense evaluator working on a DensityMatrix (any rank) and a pure-state
// evaluator working directly on amplitudes. On pure states the two must agree to 1e-9.

struct Tsallis {
    double alpha;
    bool operator==(const Tsallis &) const = default;
};
struct L1p {
    double p;
    bool operator==(const L1p &) const = default;
};
struct RelEntropy {
    bool operator==(const RelEntropy &) const = default;
};
struct SkewInfo {
    bool operator==(const SkewInfo &) const = default;
};
struct L1 {
    bool operator==(const L1 &) const = default;
};

/// Tagged measure choice. Build through the factories so parameter ranges are enforced:
/// alpha in (0,1) U (1,2], p in [1,2].
class CoherenceMeasure {
   public:
    using Kind = std::variant<Tsallis, L1p, RelEntropy, SkewInfo, L1>;

    static CoherenceMeasure tsallis(double alpha);
    static CoherenceMeasure l1p(double p);
    static CoherenceMeasure relative_entropy() {
        return CoherenceMeasure(RelEntropy{});
    }
    static CoherenceMeasure skew_information() {
        return CoherenceMeasure(SkewInfo{});
    }
    static CoherenceMeasure l1() {
        return CoherenceMeasure(L1{});
    }

    const Kind &kind() const {
        return kind_;
    }
    /// "tsallis", "l1p", "rel_entropy", "skew_info" or "l1".
    std::string_view name() const;
    /// alpha or p when the measure is parameterized.
    std::optional<double> parameter() const;
    /// Human-readable, e.g. "tsallis(alpha=0.5)".
    std::string label() const;

    /// Inverse of name()/parameter(); throws DomainError.
    static CoherenceMeasure from_name(std::string_view name, std::optional<double> parameter = std::nullopt);

    bool operator==(const CoherenceMeasure &) const = default;

   private:
    explicit CoherenceMeasure(Kind kind) : kind_(kind) {
    }
    Kind kind_;
};

/// Tsallis(0.5), Tsallis(2), L1p(1), L1p(2), RelEntropy, SkewInfo.
std::vector<CoherenceMeasure> default_panel();

enum class Method { Dense, PureFast, ClosedForm };
std::string_view method_name(Method m);

struct CoherenceValue {
    double value;
    CoherenceMeasure measure;
    Method method;
};

/// Maps round-off in [-1e-10, 0) to 0; throws InternalConsistencyError below -1e-10.
double clamp_coherence(double value, std::string_view what);

/// (sum_j l_p(column j)^q)^(1/q). p or q may be +infinity.
double lqp_norm(const ComplexMatrix &a, double q, double p);

double tsallis_coherence(const DensityMatrix &rho, double alpha);
double l1p_coherence(const DensityMatrix &rho, double p);
/// In bits.
double relative_entropy_coherence(const DensityMatrix &rho);
double skew_information_coherence(const DensityMatrix &rho);
double l1_coherence(const DensityMatrix &rho);

/// Von Neumann entropy in bits; eigenvalues at or below the floor contribute 0.
double von_neumann_entropy(const DensityMatrix &rho);

/// Dense evaluation of any measure.
double coherence(const DensityMatrix &rho, const CoherenceMeasure &m);

/// Amplitude-only evaluation for pure states; no density matrix is formed.
double pure_state_coherence(const StateVector &psi, const CoherenceMeasure &m);

}  // namespace simon_coherence

#endif
