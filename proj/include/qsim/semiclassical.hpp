// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "qsim/evolution.hpp"
#include "qsim/integrator.hpp"

namespace qsim {

/// Joint state of a quantum part (ket or density operator) and a vector of
/// classical variables. Classical values are stored as complex numbers with
/// real-part semantics; their imaginary parts must stay below 1e-10 (checked
/// by assertions in debug builds).
class SemiclassicalState {
  public:
    SemiclassicalState(StateVector quantum, CVector classical);
    SemiclassicalState(DensityOperator quantum, CVector classical);

    bool quantum_is_ket() const { return std::holds_alternative<StateVector>(quantum_); }
    const StateVector& ket() const { return std::get<StateVector>(quantum_); }
    const DensityOperator& density() const { return std::get<DensityOperator>(quantum_); }

    const CVector& classical() const { return classical_; }
    CVector& classical() { return classical_; }

  private:
    std::variant<StateVector, DensityOperator> quantum_;
    CVector classical_;
};

using SemiclassicalEvolution = EvolutionResult<SemiclassicalState>;

/// Quantum generator seeing the synchronously current classical variables.
using SCMasterFn =
    std::function<LindbladGenerator(double t, const DensityOperator& rho, const CVector& u)>;
using SCHamiltonianFn =
    std::function<Operator(double t, const StateVector& psi, const CVector& u)>;

/// Classical derivative callbacks: write du in place (same length as u).
using SCMasterClassicalFn = std::function<void(double t, const DensityOperator& rho,
                                               const CVector& u, Eigen::Ref<CVector> du)>;
using SCKetClassicalFn = std::function<void(double t, const StateVector& psi, const CVector& u,
                                            Eigen::Ref<CVector> du)>;

/// Coupled quantum-classical evolution: the density-operator coefficients and
/// the classical vector form one flat ODE state advanced by the shared
/// adaptive integrator with a single joint error norm. Both callbacks are
/// invoked at every derivative evaluation and see the raw (not renormalized)
/// integrator state; output states are taken as-is at the sample times.
/// A ket quantum part is promoted to a density operator on entry.
SemiclassicalEvolution sc_master_dynamic(const std::vector<double>& times,
                                         const SemiclassicalState& initial, const SCMasterFn& f_q,
                                         const SCMasterClassicalFn& f_cl,
                                         const IntegratorConfig& cfg = {});

/// Closed-quantum-part variant: d|psi>/dt = -i H(t, psi, u) |psi>.
SemiclassicalEvolution sc_schroedinger_dynamic(const std::vector<double>& times,
                                               const SemiclassicalState& initial,
                                               const SCHamiltonianFn& f_q,
                                               const SCKetClassicalFn& f_cl,
                                               const IntegratorConfig& cfg = {});

}  // namespace qsim
