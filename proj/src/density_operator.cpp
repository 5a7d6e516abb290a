// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "qsim/density_operator.hpp"

#include <cmath>
#include <utility>

#include "qsim/errors.hpp"

namespace qsim {

namespace detail {
CVector apply_to_vector(const Operator& op, const CVector& x);
}

DensityOperator::DensityOperator(Basis basis, CMatrix rho)
    : basis_(std::move(basis)), rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() != basis_.dimension())
        throw InvalidArgument("density operator must be square on its basis " + basis_.str());
}

DensityOperator DensityOperator::from_ket(const StateVector& psi) {
    if (!psi.is_ket()) throw InvalidArgument("density operator promotion expects a ket");
    const double n = psi.norm();
    // Accepts small truncation deficits (e.g. coherent states near their
    // cutoff) and normalizes so the projector has exactly unit trace.
    if (std::abs(n - 1.0) > 1e-6)
        throw InvalidArgument("ket must be unit norm (within 1e-6) to promote to a density operator");
    CMatrix rho = (psi.amplitudes() * psi.amplitudes().adjoint()) / (n * n);
    return DensityOperator(psi.basis(), std::move(rho));
}

DensityOperator DensityOperator::from_matrix(Basis basis, CMatrix rho) {
    DensityOperator out(std::move(basis), std::move(rho));
    if (hermiticity_deviation(out) > 1e-10)
        throw InvalidArgument("density operator must be Hermitian");
    if (std::abs(out.trace() - Complex(1.0)) > 1e-8)
        throw InvalidArgument("density operator must have unit trace");
    if (min_eigenvalue(out) < -1e-8)
        throw InvalidArgument("density operator must be positive semidefinite");
    return out;
}

DensityOperator DensityOperator::unchecked(Basis basis, CMatrix rho) {
    return DensityOperator(std::move(basis), std::move(rho));
}

Complex expect(const Operator& op, const DensityOperator& rho) {
    if (op.basis_left() != op.basis_right() || op.basis_right() != rho.basis())
        throw BasisIncompatible("expect: operator bases (" + op.basis_left().str() + ", " +
                                op.basis_right().str() +
                                ") must both equal the density operator basis (" +
                                rho.basis().str() + ")");
    const CMatrix& r = rho.matrix();
    if (const auto* d = op.get_if<DensePayload>())
        return d->mat.transpose().cwiseProduct(r).sum();
    if (const auto* s = op.get_if<SparsePayload>()) {
        Complex acc = 0.0;
        for (int k = 0; k < s->mat.outerSize(); ++k)
            for (SpCMatrix::InnerIterator it(s->mat, k); it; ++it)
                acc += it.value() * r(it.col(), it.row());
        return acc;
    }
    if (const auto* g = op.get_if<DiagonalPayload>())
        return g->values.cwiseProduct(r.diagonal()).sum();
    // Lazy / transform payloads: tr(A rho) = sum_j (A rho_col_j)_j.
    Complex acc = 0.0;
    for (Eigen::Index j = 0; j < r.cols(); ++j)
        acc += detail::apply_to_vector(op, r.col(j))(j);
    return acc;
}

std::vector<Complex> expect(const Operator& op, const std::vector<DensityOperator>& rhos) {
    std::vector<Complex> out;
    out.reserve(rhos.size());
    for (const auto& r : rhos) out.push_back(expect(op, r));
    return out;
}

double hermiticity_deviation(const DensityOperator& rho) {
    return (rho.matrix() - rho.matrix().adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const DensityOperator& rho) {
    const CMatrix herm = 0.5 * (rho.matrix() + rho.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace qsim
