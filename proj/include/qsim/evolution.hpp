// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "qsim/density_operator.hpp"
#include "qsim/operator.hpp"
#include "qsim/state.hpp"

namespace qsim {

/// Solution samples on the requested output grid; states[k] belongs to
/// times[k] and all states share one basis.
template <class StateT>
struct EvolutionResult {
    std::vector<double> times;
    std::vector<StateT> states;
};

using KetEvolution = EvolutionResult<StateVector>;
using DensityEvolution = EvolutionResult<DensityOperator>;

/// Hamiltonian plus jump operators (with precomputed adjoints) returned by
/// time-dependent master-equation callbacks. When `rates` is absent the
/// rates passed to the evolution call (default: all one) apply.
struct LindbladGenerator {
    Operator hamiltonian;
    std::vector<Operator> jump_ops;
    std::vector<Operator> jump_ops_dagger;
    std::optional<std::vector<double>> rates;
};

}  // namespace qsim
