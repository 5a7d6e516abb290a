// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "qsim/types.hpp"

namespace qsim {

/// Tolerances and step bounds shared by every time-evolution engine.
struct IntegratorConfig {
    double rel_tol = 1e-6;
    double abs_tol = 1e-8;
    double max_step = std::numeric_limits<double>::infinity();
    double initial_step = 0.0;  // 0 = choose automatically

    void validate() const;
};

/// Embedded Dormand-Prince 5(4) stepper on a flat complex vector, with PI
/// step-size control, FSAL, and the order-5 continuous extension for dense
/// output. The error norm is the weighted RMS
///   sqrt(mean(|e_i|^2 / (abs_tol + rel_tol*max(|y_i|, |y_new_i|))^2)).
///
/// Usage: start() once, then step() until finished(); after each accepted
/// step interpolate() evaluates the solution anywhere in [t_begin, t_now].
class DormandPrince54 {
  public:
    using Rhs = std::function<void(double t, const CVector& y, CVector& dydt)>;

    DormandPrince54(Rhs rhs, IntegratorConfig cfg);

    /// Begin integrating from (t0, y0) towards t_end (t_end > t0).
    void start(double t0, const CVector& y0, double t_end);

    /// Restart from a new state mid-run, keeping t_end and the current step
    /// size as the initial guess (used after a quantum jump).
    void restart(double t0, const CVector& y0);

    bool finished() const { return finished_; }

    /// Advance by one accepted step; throws IntegrationFailure on step-size
    /// underflow (below 1e-14 of the total integration span).
    void step();

    double t_begin() const { return t_begin_; }
    double t_now() const { return t_; }
    const CVector& y_now() const { return y_; }

    /// Dense-output evaluation for t in [t_begin, t_now] of the last step.
    void interpolate(double t, CVector& out) const;

    std::size_t n_accepted() const { return n_accepted_; }
    std::size_t n_rejected() const { return n_rejected_; }

  private:
    double initial_step_size() const;
    void prepare_dense_output(double h);

    Rhs rhs_;
    IntegratorConfig cfg_;

    double t_ = 0.0;
    double t_begin_ = 0.0;
    double t_end_ = 0.0;
    double h_ = 0.0;
    double err_old_ = 1e-4;
    bool finished_ = true;
    bool first_step_ = true;

    CVector y_;
    CVector k1_, k2_, k3_, k4_, k5_, k6_, k7_;
    CVector y_tmp_, y_new_, err_;
    CVector rcont1_, rcont2_, rcont3_, rcont4_, rcont5_;

    std::size_t n_accepted_ = 0;
    std::size_t n_rejected_ = 0;
};

/// Integrate rhs from times.front() to times.back() and hand the dense-output
/// samples at every requested time to `emit(index, t, y)`, in order.
/// `times` must be strictly increasing.
void integrate_adaptive(const DormandPrince54::Rhs& rhs, const CVector& y0,
                        const std::vector<double>& times, const IntegratorConfig& cfg,
                        const std::function<void(std::size_t, double, const CVector&)>& emit);

}  // namespace qsim
