// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qsim/evolution.hpp"
#include "qsim/integrator.hpp"

namespace qsim {

/// A single Monte Carlo wave-function trajectory using norm tracking:
/// the ket evolves under the non-Hermitian Hamiltonian
///   H_nh = H - (i/2) * sum_i r_i J_i^dag J_i
/// without renormalization; when |psi|^2 crosses a uniform random threshold
/// the jump time is located by bisection on the dense interpolant, a channel
/// i is selected with probability proportional to r_i |J_i psi|^2, the state
/// is replaced by the normalized J_i psi and a new threshold is drawn.
/// Output states are renormalized at the requested sample times.
///
/// The random stream is a seeded mt19937_64 with
/// std::uniform_real_distribution<double>; identical seeds give bit-identical
/// trajectories within one build of the library.
KetEvolution mcwf(const std::vector<double>& times, const StateVector& psi0, const Operator& H,
                  const std::vector<Operator>& jump_ops, const std::vector<double>& rates,
                  std::uint64_t seed, const IntegratorConfig& cfg = {});

/// Mean expectation traces over an ensemble of trajectories. Trajectory k
/// uses seed base_seed + k, so results are identical for any execution order
/// or thread count. std_error row-wise matches `mean` (standard error of the
/// trajectory mean; zero where all trajectories coincide).
struct EnsembleExpectation {
    std::vector<double> times;
    CMatrix mean;                 // n_observables x n_times
    Eigen::MatrixXd std_error;   // n_observables x n_times
    int n_trajectories = 0;
};

EnsembleExpectation mcwf_ensemble_expect(const std::vector<double>& times,
                                         const StateVector& psi0, const Operator& H,
                                         const std::vector<Operator>& jump_ops,
                                         const std::vector<double>& rates, int n_traj,
                                         std::uint64_t base_seed,
                                         const std::vector<Operator>& observables,
                                         const IntegratorConfig& cfg = {}, int n_threads = 0);

/// Full trajectory states for small ensembles (memory grows with
/// n_traj * n_times * dimension).
std::vector<KetEvolution> mcwf_ensemble(const std::vector<double>& times,
                                        const StateVector& psi0, const Operator& H,
                                        const std::vector<Operator>& jump_ops,
                                        const std::vector<double>& rates, int n_traj,
                                        std::uint64_t base_seed,
                                        const IntegratorConfig& cfg = {}, int n_threads = 0);

}  // namespace qsim
