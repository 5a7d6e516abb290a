// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "qsim/evolution.hpp"
#include "qsim/integrator.hpp"

namespace qsim {

/// Integrate d|psi>/dt = -i H |psi| over the given strictly increasing output
/// grid (hbar = 1). H must be square on the basis of psi0.
KetEvolution schroedinger(const std::vector<double>& times, const StateVector& psi0,
                          const Operator& H, const IntegratorConfig& cfg = {});

/// Hamiltonian callback for state-/time-dependent problems. It is invoked at
/// every derivative evaluation (not merely at output times) and may return a
/// lazy or transform-backed operator; it may also mutate payloads it owns
/// (e.g. a shared diagonal updated from |psi|^2).
using HamiltonianFn = std::function<Operator(double t, const StateVector& psi)>;

KetEvolution schroedinger_dynamic(const std::vector<double>& times, const StateVector& psi0,
                                  const HamiltonianFn& hamiltonian,
                                  const IntegratorConfig& cfg = {});

}  // namespace qsim
