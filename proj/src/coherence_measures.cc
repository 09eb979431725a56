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

#include <cmath>
#include <numbers>
#include <sstream>

#include "simon_coherence/errors.h"
#include "simon_coherence/kernels.h"
#include "simon_coherence/tolerances.h"

namespace simon_coherence {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_alpha(double alpha) {
    if (!(alpha > 0 && alpha <= 2)) {
        throw DomainError("Tsallis coherence: alpha must lie in (0,1) U (1,2], got " + std::to_string(alpha));
    }
}

void check_p(double p) {
    if (!(p >= 1 && p <= 2)) {
        throw DomainError("l_{1,p} coherence: p must lie in [1,2], got " + std::to_string(p));
    }
}

bool near_one(double alpha) {
    return std::abs(alpha - 1) <= Tolerances::alpha_one_window;
}

// x^(1/alpha) through exp/log, with tiny x mapped to 0.
double root_alpha(double x, double alpha) {
    return x <= Tolerances::power_diag_floor ? 0.0 : std::exp(std::log(x) / alpha);
}

double entropy_bits(std::span<const double> probabilities) {
    double h = 0;
    for (double p : probabilities) {
        if (p > Tolerances::eigenvalue_floor) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

std::vector<double> magnitudes(const StateVector &psi) {
    std::vector<double> m(psi.dim());
    auto amps = psi.amps();
    for (size_t j = 0; j < m.size(); j++) {
        m[j] = std::abs(amps[j]);
    }
    return m;
}

std::string format_param(double x) {
    std::ostringstream out;
    out << x;
    return out.str();
}

}  // namespace

CoherenceMeasure CoherenceMeasure::tsallis(double alpha) {
    check_alpha(alpha);
    if (alpha == 1) {
        throw DomainError("Tsallis coherence: alpha = 1 is excluded; use relative_entropy()");
    }
    return CoherenceMeasure(Tsallis{alpha});
}

CoherenceMeasure CoherenceMeasure::l1p(double p) {
    check_p(p);
    return CoherenceMeasure(L1p{p});
}

std::string_view CoherenceMeasure::name() const {
    return std::visit(overloaded{
                          [](const Tsallis &) { return std::string_view("tsallis"); },
                          [](const L1p &) { return std::string_view("l1p"); },
                          [](const RelEntropy &) { return std::string_view("rel_entropy"); },
                          [](const SkewInfo &) { return std::string_view("skew_info"); },
                          [](const L1 &) { return std::string_view("l1"); },
                      },
                      kind_);
}

std::optional<double> CoherenceMeasure::parameter() const {
    if (auto t = std::get_if<Tsallis>(&kind_)) {
        return t->alpha;
    }
    if (auto l = std::get_if<L1p>(&kind_)) {
        return l->p;
    }
    return std::nullopt;
}

std::string CoherenceMeasure::label() const {
    std::string out(name());
    if (auto t = std::get_if<Tsallis>(&kind_)) {
        out += "(alpha=" + format_param(t->alpha) + ")";
    } else if (auto l = std::get_if<L1p>(&kind_)) {
        out += "(p=" + format_param(l->p) + ")";
    }
    return out;
}

CoherenceMeasure CoherenceMeasure::from_name(std::string_view name, std::optional<double> parameter) {
    auto need = [&](const char *what) {
        if (!parameter) {
            throw DomainError("measure '" + std::string(name) + "' needs " + what);
        }
        return *parameter;
    };
    if (name == "tsallis") {
        return tsallis(need("alpha"));
    }
    if (name == "l1p") {
        return l1p(need("p"));
    }
    if (parameter) {
        throw DomainError("measure '" + std::string(name) + "' takes no parameter");
    }
    if (name == "rel_entropy") {
        return relative_entropy();
    }
    if (name == "skew_info") {
        return skew_information();
    }
    if (name == "l1") {
        return l1();
    }
    throw DomainError("unknown coherence measure '" + std::string(name) + "'");
}

std::vector<CoherenceMeasure> default_panel() {
    return {
        CoherenceMeasure::tsallis(0.5), CoherenceMeasure::tsallis(2.0),    CoherenceMeasure::l1p(1.0),
        CoherenceMeasure::l1p(2.0),     CoherenceMeasure::relative_entropy(), CoherenceMeasure::skew_information(),
    };
}

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Dense:
            return "dense";
        case Method::PureFast:
            return "pure_fast";
        case Method::ClosedForm:
            return "closed_form";
    }
    return "?";
}

double clamp_coherence(double value, std::string_view what) {
    if (value >= 0) {
        return value;
    }
    if (value >= Tolerances::negative_clamp) {
        return 0;
    }
    throw InternalConsistencyError(std::string(what) + " evaluated to " + std::to_string(value) + " < 0");
}

double lqp_norm(const ComplexMatrix &a, double q, double p) {
    if (!(q >= 1) || !(p >= 1)) {
        throw DomainError("lqp_norm: q and p must be >= 1");
    }
    return kernels::parallel::lqp_norm(a.entries(), a.dim(), q, p);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    if (rho.purity() >= 1 - Tolerances::rank_one) {
        return 0;
    }
    return entropy_bits(hermitian_eig(rho).eigenvalues);
}

double relative_entropy_coherence(const DensityMatrix &rho) {
    std::vector<double> diag(rho.dim());
    for (size_t j = 0; j < diag.size(); j++) {
        diag[j] = rho(j, j).real();
    }
    return clamp_coherence(entropy_bits(diag) - von_neumann_entropy(rho), "relative entropy of coherence");
}

double tsallis_coherence(const DensityMatrix &rho, double alpha) {
    check_alpha(alpha);
    if (near_one(alpha)) {
        return std::numbers::ln2 * relative_entropy_coherence(rho);
    }
    ComplexMatrix powered = matrix_power(rho, alpha);
    double sum = 0;
    for (size_t j = 0; j < powered.dim(); j++) {
        sum += root_alpha(powered(j, j).real(), alpha);
    }
    return clamp_coherence((sum - 1) / (alpha - 1), "Tsallis coherence");
}

double l1p_coherence(const DensityMatrix &rho, double p) {
    check_p(p);
    return clamp_coherence(lqp_norm(rho.matrix() - dephase(rho).matrix(), 1, p), "l_{1,p} coherence");
}

double skew_information_coherence(const DensityMatrix &rho) {
    ComplexMatrix root = matrix_power(rho, 0.5);
    double sum = 0;
    for (size_t j = 0; j < root.dim(); j++) {
        double r = root(j, j).real();
        sum += r * r;
    }
    return clamp_coherence(1 - sum, "skew-information coherence");
}

double l1_coherence(const DensityMatrix &rho) {
    return clamp_coherence(kernels::parallel::off_diagonal_abs_sum(rho.matrix().entries(), rho.dim()), "l1 coherence");
}

double coherence(const DensityMatrix &rho, const CoherenceMeasure &m) {
    return std::visit(overloaded{
                          [&](const Tsallis &t) { return tsallis_coherence(rho, t.alpha); },
                          [&](const L1p &l) { return l1p_coherence(rho, l.p); },
                          [&](const RelEntropy &) { return relative_entropy_coherence(rho); },
                          [&](const SkewInfo &) { return skew_information_coherence(rho); },
                          [&](const L1 &) { return l1_coherence(rho); },
                      },
                      m.kind());
}

namespace {

double pure_relative_entropy(std::span<const double> mags) {
    double h = 0;
    for (double m : mags) {
        double p = m * m;
        if (p > 0) {
            h -= p * std::log2(p);
        }
    }
    return clamp_coherence(h, "relative entropy of coherence");
}

}  // namespace

double pure_state_coherence(const StateVector &psi, const CoherenceMeasure &m) {
    auto mags = magnitudes(psi);
    return std::visit(
        overloaded{
            [&](const Tsallis &t) {
                if (near_one(t.alpha)) {
                    return std::numbers::ln2 * pure_relative_entropy(mags);
                }
                double sum = 0;
                for (double a : mags) {
                    if (a > 0) {
                        sum += std::exp((2 / t.alpha) * std::log(a));
                    }
                }
                return clamp_coherence((sum - 1) / (t.alpha - 1), "Tsallis coherence");
            },
            [&](const L1p &l) {
                double total = 0;
                for (double a : mags) {
                    total += l.p == 1 ? a : std::pow(a, l.p);
                }
                double sum = 0;
                for (double a : mags) {
                    if (a == 0) {
                        continue;
                    }
                    double rest = std::max(0.0, total - (l.p == 1 ? a : std::pow(a, l.p)));
                    sum += a * (l.p == 1 ? rest : std::pow(rest, 1 / l.p));
                }
                return clamp_coherence(sum, "l_{1,p} coherence");
            },
            [&](const RelEntropy &) { return pure_relative_entropy(mags); },
            [&](const SkewInfo &) {
                double sum = 0;
                for (double a : mags) {
                    sum += a * a * a * a;
                }
                return clamp_coherence(1 - sum, "skew-information coherence");
            },
            [&](const L1 &) {
                double s1 = 0;
                double s2 = 0;
                for (double a : mags) {
                    s1 += a;
                    s2 += a * a;
                }
                return clamp_coherence(s1 * s1 - s2, "l1 coherence");
            },
        },
        m.kind());
}

}  // namespace simon_coherence
