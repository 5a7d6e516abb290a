// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qsim/evolution.hpp"
#include "qsim/integrator.hpp"

namespace qsim {

/// Integrate the Lindblad master equation
///   d rho/dt = -i[H, rho] + sum_i r_i (J_i rho J_i^dag
///              - (J_i^dag J_i rho + rho J_i^dag J_i)/2)
/// with the density operator stored dense throughout. Rates default to one
/// per jump operator and must be non-negative.
DensityEvolution master(const std::vector<double>& times, const DensityOperator& rho0,
                        const Operator& H, const std::vector<Operator>& jump_ops,
                        const std::vector<double>& rates = {}, const IntegratorConfig& cfg = {});

/// Convenience overload promoting a unit-norm ket to |psi><psi|.
DensityEvolution master(const std::vector<double>& times, const StateVector& psi0,
                        const Operator& H, const std::vector<Operator>& jump_ops,
                        const std::vector<double>& rates = {}, const IntegratorConfig& cfg = {});

/// Generator callback for time-dependent problems, invoked at every
/// derivative evaluation. Rates from the returned generator take precedence
/// over the `rates` argument.
using MasterFn = std::function<LindbladGenerator(double t, const DensityOperator& rho)>;

DensityEvolution master_dynamic(const std::vector<double>& times, const DensityOperator& rho0,
                                const MasterFn& generator, const std::vector<double>& rates = {},
                                const IntegratorConfig& cfg = {});

DensityEvolution master_dynamic(const std::vector<double>& times, const StateVector& psi0,
                                const MasterFn& generator, const std::vector<double>& rates = {},
                                const IntegratorConfig& cfg = {});

namespace detail {

/// Square operator materialized for fast left/right multiplication in the
/// master-equation right-hand side. Dense and sparse payloads keep their
/// representation; diagonals stay diagonal; lazy/transform payloads are
/// evaluated densely.
class MatOp {
  public:
    explicit MatOp(const Operator& op);

    void mul_left(const Eigen::Ref<const CMatrix>& rho, CMatrix& out) const;   // out = M * rho
    void mul_right(const Eigen::Ref<const CMatrix>& rho, CMatrix& out) const;  // out = rho * M
    MatOp adjoint() const;
    MatOp times(const MatOp& other) const;
    bool hermitian(double tol = 1e-12) const;

  private:
    MatOp() = default;

    enum class Kind { Dense, Sparse, Diag };
    Kind kind_ = Kind::Dense;
    CMatrix dense_;
    SpCMatrix sparse_;
    CVector diag_;
};

/// Lindblad right-hand side evaluator with preallocated workspaces.
/// When the Hamiltonian is Hermitian the commutator is evaluated as
/// -i(H rho - (H rho)^dag), halving the multiplications; both forms agree
/// to roundoff for Hermitian H.
class LindbladRhs {
  public:
    /// `jump_ops_dagger` may be empty, in which case the adjoints are computed.
    LindbladRhs(const Operator& H, const std::vector<Operator>& jump_ops,
                const std::vector<Operator>& jump_ops_dagger, const std::vector<double>& rates,
                Eigen::Index dim);

    void operator()(const Eigen::Ref<const CMatrix>& rho, Eigen::Ref<CMatrix> drho);

    static std::vector<double> resolve_rates(std::size_t n_jumps,
                                             const std::vector<double>& rates);

  private:
    bool h_hermitian_;
    MatOp h_;
    std::vector<MatOp> jumps_;
    std::vector<MatOp> jumps_dag_;
    std::vector<MatOp> jdag_j_;
    std::vector<double> rates_;
    CMatrix work1_, work2_;
};

}  // namespace detail

}  // namespace qsim
