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

#ifndef SIMON_COHERENCE_QUANTUM_STATE_H
#define SIMON_COHERENCE_QUANTUM_STATE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace simon_coherence {

using cplx = std::complex<double>;

/// Square complex matrix, row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(size_t dim);
    ComplexMatrix(size_t dim, std::vector<cplx> entries);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    size_t dim() const {
        return dim_;
    }
    cplx &operator()(size_t row, size_t col) {
        return entries_[row * dim_ + col];
    }
    const cplx &operator()(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const cplx> entries() const {
        return entries_;
    }
    std::span<cplx> entries() {
        return entries_;
    }

    ComplexMatrix operator-(const ComplexMatrix &other) const;
    ComplexMatrix operator*(const ComplexMatrix &other) const;
    ComplexMatrix adjoint() const;

    /// max_ij |A_ij - conj(A_ji)|
    double hermitian_defect() const;
    double frobenius_norm() const;
    cplx trace() const;

    bool operator==(const ComplexMatrix &) const = default;

   private:
    size_t dim_ = 0;
    std::vector<cplx> entries_;
};

/// Pure state of a first register (n_first qubits) and a second register (n_second qubits).
///
/// Joint basis index j = (x << n_second) | y, where x labels the first register and y the
/// second. Within a register, bit strings are big-endian: |x_1 x_2 ... x_n> has x_1 as the
/// most significant bit of x.
class StateVector {
   public:
    /// Throws DomainError if amps.size() != 2^(n_first+n_second) or the norm is off by more
    /// than Tolerances::state_norm.
    StateVector(int n_first, int n_second, std::vector<cplx> amps);

    /// |x>|y> as a basis state.
    static StateVector basis(int n_first, int n_second, uint64_t x, uint64_t y);

    int n_first() const {
        return n_first_;
    }
    int n_second() const {
        return n_second_;
    }
    size_t dim() const {
        return amps_.size();
    }
    std::span<const cplx> amps() const {
        return amps_;
    }
    const cplx &amp(uint64_t x, uint64_t y) const {
        return amps_[(x << n_second_) | y];
    }
    double norm() const;

    bool operator==(const StateVector &) const = default;

   private:
    int n_first_;
    int n_second_;
    std::vector<cplx> amps_;
};

/// Hermitian, unit-trace matrix. Construction checks Hermiticity and trace; positivity is
/// checked on demand with min_eigenvalue() because it needs a diagonalization.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix matrix);

    size_t dim() const {
        return matrix_.dim();
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }
    const cplx &operator()(size_t row, size_t col) const {
        return matrix_(row, col);
    }

    /// Tr(rho^2); equals 1 exactly for projectors.
    double purity() const;
    double min_eigenvalue() const;

   private:
    ComplexMatrix matrix_;
};

struct EigenSystem {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Column k is the eigenvector of eigenvalues[k]; its first component with modulus above
    /// 1e-12 is real and positive.
    ComplexMatrix eigenvectors;

    /// V diag(lambda) V^dagger
    ComplexMatrix reconstruct() const;
    /// V diag(g(lambda)) V^dagger
    template <typename F>
    ComplexMatrix apply(F &&g) const;
};

StateVector tensor(const StateVector &first, const StateVector &second);

/// (H^{(x)n} (x) I^{(x)n}) psi via a normalized fast Walsh-Hadamard transform on the first-register bits.
StateVector hadamard_first_register(const StateVector &psi);

DensityMatrix density_of(const StateVector &psi);

/// Diagonal part of rho.
DensityMatrix dephase(const DensityMatrix &rho);

/// Cyclic complex Jacobi diagonalization. Throws DomainError for non-Hermitian input and
/// ConvergenceError after Tolerances::jacobi_max_sweeps sweeps.
EigenSystem hermitian_eig(const ComplexMatrix &matrix);
inline EigenSystem hermitian_eig(const DensityMatrix &rho) {
    return hermitian_eig(rho.matrix());
}

/// rho^alpha for alpha in (0,1) U (1,2]. Eigenvalues at or below the eigenvalue floor map to 0.
/// Projectors are returned unchanged. The result is generally not unit-trace, hence a plain
/// ComplexMatrix.
ComplexMatrix matrix_power(const DensityMatrix &rho, double alpha);

/// p[x] = sum_y |amp(x, y)|^2
std::vector<double> first_register_distribution(const StateVector &psi);
/// p[y] = sum_x |amp(x, y)|^2
std::vector<double> second_register_distribution(const StateVector &psi);

template <typename F>
ComplexMatrix EigenSystem::apply(F &&g) const {
    size_t d = eigenvalues.size();
    std::vector<double> mapped(d);
    for (size_t k = 0; k < d; k++) {
        mapped[k] = g(eigenvalues[k]);
    }
    ComplexMatrix out(d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            cplx acc = 0;
            for (size_t k = 0; k < d; k++) {
                if (mapped[k] != 0) {
                    acc += eigenvectors(i, k) * mapped[k] * std::conj(eigenvectors(j, k));
                }
            }
            out(i, j) = acc;
        }
    }
    return out;
}

}  // namespace simon_coherence

#endif
