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

#include "simon_coherence/quantum_state.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "simon_coherence/errors.h"
#include "simon_coherence/kernels.h"
#include "simon_coherence/tolerances.h"

namespace simon_coherence {

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim), entries_(dim * dim) {
}

ComplexMatrix::ComplexMatrix(size_t dim, std::vector<cplx> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim * dim) {
        throw DomainError("ComplexMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                          std::to_string(entries_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &other) const {
    if (other.dim_ != dim_) {
        throw DomainError("ComplexMatrix: dimension mismatch");
    }
    ComplexMatrix out(dim_);
    for (size_t k = 0; k < entries_.size(); k++) {
        out.entries_[k] = entries_[k] - other.entries_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
    if (other.dim_ != dim_) {
        throw DomainError("ComplexMatrix: dimension mismatch");
    }
    ComplexMatrix out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t k = 0; k < dim_; k++) {
            cplx a = (*this)(i, k);
            if (a == cplx{}) {
                continue;
            }
            for (size_t j = 0; j < dim_; j++) {
                out(i, j) += a * other(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

double ComplexMatrix::hermitian_defect() const {
    double worst = 0;
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = i; j < dim_; j++) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

double ComplexMatrix::frobenius_norm() const {
    return std::sqrt(kernels::parallel::frobenius_squared(entries_));
}

cplx ComplexMatrix::trace() const {
    cplx t = 0;
    for (size_t i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

StateVector::StateVector(int n_first, int n_second, std::vector<cplx> amps)
    : n_first_(n_first), n_second_(n_second), amps_(std::move(amps)) {
    if (n_first < 0 || n_second < 0 || n_first + n_second > 40) {
        throw DomainError("StateVector: register sizes out of range");
    }
    if (amps_.size() != size_t{1} << (n_first + n_second)) {
        throw DomainError("StateVector: expected 2^" + std::to_string(n_first + n_second) + " amplitudes, got " +
                          std::to_string(amps_.size()));
    }
    double n2 = kernels::parallel::frobenius_squared(amps_);
    if (std::abs(n2 - 1) > Tolerances::state_norm) {
        throw DomainError("StateVector: squared norm " + std::to_string(n2) + " is not 1");
    }
}

StateVector StateVector::basis(int n_first, int n_second, uint64_t x, uint64_t y) {
    if (n_first < 0 || n_second < 0 || n_first + n_second > 40 || (x >> n_first) != 0 || (y >> n_second) != 0) {
        throw DomainError("StateVector::basis: label out of range");
    }
    std::vector<cplx> amps(size_t{1} << (n_first + n_second));
    amps[(x << n_second) | y] = 1;
    return StateVector(n_first, n_second, std::move(amps));
}

double StateVector::norm() const {
    return std::sqrt(kernels::serial::frobenius_squared(amps_));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    double defect = matrix_.hermitian_defect();
    if (defect > Tolerances::hermitian) {
        throw DomainError("DensityMatrix: not Hermitian (defect " + std::to_string(defect) + ")");
    }
    cplx tr = matrix_.trace();
    if (std::abs(tr - 1.0) > Tolerances::trace) {
        throw DomainError("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
    }
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum_ij rho_ij rho_ji = sum_ij |rho_ij|^2 for Hermitian rho.
    return kernels::parallel::frobenius_squared(matrix_.entries());
}

double DensityMatrix::min_eigenvalue() const {
    return hermitian_eig(matrix_).eigenvalues.front();
}

ComplexMatrix EigenSystem::reconstruct() const {
    return apply([](double x) { return x; });
}

StateVector tensor(const StateVector &first, const StateVector &second) {
    std::vector<cplx> amps(first.dim() * second.dim());
    auto a = first.amps();
    auto b = second.amps();
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            amps[i * b.size() + j] = a[i] * b[j];
        }
    }
    return StateVector(first.n_first() + first.n_second(), second.n_first() + second.n_second(), std::move(amps));
}

StateVector hadamard_first_register(const StateVector &psi) {
    std::vector<cplx> amps(psi.amps().begin(), psi.amps().end());
    kernels::parallel::fwht_first_register(amps, psi.n_first(), psi.n_second());
    return StateVector(psi.n_first(), psi.n_second(), std::move(amps));
}

DensityMatrix density_of(const StateVector &psi) {
    ComplexMatrix m(psi.dim());
    kernels::parallel::outer_product(psi.amps(), m.entries());
    return DensityMatrix(std::move(m));
}

DensityMatrix dephase(const DensityMatrix &rho) {
    ComplexMatrix m(rho.dim());
    for (size_t i = 0; i < rho.dim(); i++) {
        m(i, i) = rho(i, i);
    }
    return DensityMatrix(std::move(m));
}

namespace {

double off_diagonal_frobenius(const ComplexMatrix &a) {
    double acc = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            if (i != j) {
                acc += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(acc);
}

// Annihilates a(p, q) with the unitary G = diag(1, e^{-i phi}) R(theta) restricted to (p, q),
// where phi = arg a(p, q) and R is the real Jacobi rotation of the phase-corrected 2x2 block.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, size_t p, size_t q) {
    cplx apq = a(p, q);
    double g = std::abs(apq);
    cplx phase = std::conj(apq) / g;  // e^{-i phi}
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double theta = (aqq - app) / (2 * g);
    double t = 1 / (std::abs(theta) + std::sqrt(theta * theta + 1));
    if (theta < 0) {
        t = -t;
    }
    double c = 1 / std::sqrt(t * t + 1);
    double s = t * c;

    const cplx gpp = c;
    const cplx gpq = s;
    const cplx gqp = -s * phase;
    const cplx gqq = c * phase;
    size_t d = a.dim();
    for (size_t k = 0; k < d; k++) {
        cplx akp = a(k, p);
        cplx akq = a(k, q);
        a(k, p) = akp * gpp + akq * gqp;
        a(k, q) = akp * gpq + akq * gqq;
    }
    for (size_t k = 0; k < d; k++) {
        cplx apk = a(p, k);
        cplx aqk = a(q, k);
        a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
        a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = app - t * g;
    a(q, q) = aqq + t * g;
    for (size_t k = 0; k < d; k++) {
        cplx vkp = v(k, p);
        cplx vkq = v(k, q);
        v(k, p) = vkp * gpp + vkq * gqp;
        v(k, q) = vkp * gpq + vkq * gqq;
    }
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix &matrix) {
    double defect = matrix.hermitian_defect();
    if (defect > Tolerances::hermitian) {
        throw DomainError("hermitian_eig: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    size_t d = matrix.dim();
    ComplexMatrix a = matrix;
    for (size_t i = 0; i < d; i++) {
        a(i, i) = a(i, i).real();
    }
    ComplexMatrix v = ComplexMatrix::identity(d);
    double threshold = Tolerances::jacobi_off_diagonal * std::max(1.0, matrix.frobenius_norm());

    bool converged = false;
    for (int sweep = 0; sweep <= Tolerances::jacobi_max_sweeps; sweep++) {
        if (off_diagonal_frobenius(a) <= threshold) {
            converged = true;
            break;
        }
        if (sweep == Tolerances::jacobi_max_sweeps) {
            break;
        }
        for (size_t p = 0; p + 1 < d; p++) {
            for (size_t q = p + 1; q < d; q++) {
                if (std::abs(a(p, q)) > std::numeric_limits<double>::min()) {
                    jacobi_rotate(a, v, p, q);
                }
            }
        }
    }
    if (!converged) {
        throw ConvergenceError("hermitian_eig: no convergence after " +
                               std::to_string(Tolerances::jacobi_max_sweeps) + " sweeps (off-diagonal norm " +
                               std::to_string(off_diagonal_frobenius(a)) + ")");
    }

    std::vector<size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem out{std::vector<double>(d), ComplexMatrix(d)};
    for (size_t k = 0; k < d; k++) {
        size_t src = order[k];
        out.eigenvalues[k] = a(src, src).real();
        cplx phase = 1;
        for (size_t i = 0; i < d; i++) {
            double m = std::abs(v(i, src));
            if (m > 1e-12) {
                phase = std::conj(v(i, src)) / m;
                break;
            }
        }
        for (size_t i = 0; i < d; i++) {
            out.eigenvectors(i, k) = v(i, src) * phase;
        }
    }
    return out;
}

ComplexMatrix matrix_power(const DensityMatrix &rho, double alpha) {
    if (!(alpha > 0 && alpha <= 2) || alpha == 1) {
        throw DomainError("matrix_power: alpha must lie in (0,1) U (1,2], got " + std::to_string(alpha));
    }
    // Tr(rho^2) <= lambda_max, so high purity certifies a projector without diagonalizing.
    if (rho.purity() >= 1 - Tolerances::rank_one) {
        return rho.matrix();
    }
    EigenSystem eig = hermitian_eig(rho);
    if (eig.eigenvalues.back() >= 1 - Tolerances::rank_one) {
        return rho.matrix();
    }
    return eig.apply([alpha](double lambda) { return lambda > Tolerances::eigenvalue_floor ? std::pow(lambda, alpha) : 0.0; });
}

std::vector<double> first_register_distribution(const StateVector &psi) {
    std::vector<double> p(size_t{1} << psi.n_first());
    kernels::parallel::first_register_marginal(psi.amps(), psi.n_first(), psi.n_second(), p);
    return p;
}

std::vector<double> second_register_distribution(const StateVector &psi) {
    size_t cols = size_t{1} << psi.n_second();
    std::vector<double> p(cols);
    auto amps = psi.amps();
    for (size_t j = 0; j < amps.size(); j++) {
        p[j & (cols - 1)] += std::norm(amps[j]);
    }
    return p;
}

}  // namespace simon_coherence
