// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qsim/basis.hpp"
#include "qsim/operator.hpp"
#include "qsim/state.hpp"
#include "qsim/types.hpp"

namespace qsim {

/// Dense square operator with equal left/right bases representing a mixed
/// state. The checked constructors enforce Hermiticity (1e-10), unit trace
/// (1e-8) and positivity (eigenvalues >= -1e-8).
class DensityOperator {
  public:
    /// Pure-state projector |psi><psi| / <psi|psi>. The ket norm must be
    /// within 1e-6 of one; the projector is normalized to exactly unit trace.
    static DensityOperator from_ket(const StateVector& psi);

    /// Validating constructor from an explicit matrix.
    static DensityOperator from_matrix(Basis basis, CMatrix rho);

    /// Trusted constructor used by the evolution engines; skips validation.
    static DensityOperator unchecked(Basis basis, CMatrix rho);

    const Basis& basis() const { return basis_; }
    const CMatrix& matrix() const { return rho_; }
    CMatrix& matrix() { return rho_; }

    Complex trace() const { return rho_.trace(); }
    Eigen::Index dimension() const { return rho_.rows(); }

    /// View as a general operator (dense payload, equal bases).
    Operator as_operator() const { return Operator(basis_, basis_, DensePayload{rho_}); }

  private:
    DensityOperator(Basis basis, CMatrix rho);

    Basis basis_;
    CMatrix rho_;
};

/// trace(A * rho); maps over lists preserving order.
Complex expect(const Operator& op, const DensityOperator& rho);
std::vector<Complex> expect(const Operator& op, const std::vector<DensityOperator>& rhos);

/// max |rho - rho^dagger| element-wise.
double hermiticity_deviation(const DensityOperator& rho);

/// Smallest eigenvalue of the Hermitian part of rho.
double min_eigenvalue(const DensityOperator& rho);

}  // namespace qsim
