// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "qsim/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 0.2;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;

constexpr double c2 = 0.2, c3 = 0.3, c4 = 0.8, c5 = 8.0 / 9.0;

// Difference between the 5th- and 4th-order solutions.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

// Continuous-extension coefficients.
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

// Step-size controller constants (Lund stabilization).
constexpr double kSafety = 0.9;
constexpr double kFacMin = 0.2;
constexpr double kFacMax = 10.0;
constexpr double kBeta = 0.04;

}  // namespace

void IntegratorConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw InvalidArgument("integrator tolerances must be positive");
    if (!(max_step > 0.0)) throw InvalidArgument("max_step must be positive");
    if (initial_step < 0.0) throw InvalidArgument("initial_step must be non-negative");
}

DormandPrince54::DormandPrince54(Rhs rhs, IntegratorConfig cfg)
    : rhs_(std::move(rhs)), cfg_(cfg) {
    cfg_.validate();
}

void DormandPrince54::start(double t0, const CVector& y0, double t_end) {
    if (!(t_end > t0)) throw InvalidArgument("integration requires t_end > t0");
    t_end_ = t_end;
    h_ = 0.0;
    err_old_ = 1e-4;
    restart(t0, y0);
}

void DormandPrince54::restart(double t0, const CVector& y0) {
    t_ = t_begin_ = t0;
    y_ = y0;
    const Eigen::Index n = y0.size();
    k2_.resize(n);
    k3_.resize(n);
    k4_.resize(n);
    k5_.resize(n);
    k6_.resize(n);
    k7_.resize(n);
    y_tmp_.resize(n);
    y_new_.resize(n);
    err_.resize(n);
    k1_.resize(n);
    rhs_(t_, y_, k1_);  // FSAL seed
    finished_ = !(t_ < t_end_);
    first_step_ = true;
}

double DormandPrince54::initial_step_size() const {
    // Standard two-trial-step heuristic.
    double dnf = 0.0;
    double dny = 0.0;
    const Eigen::Index n = y_.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double sc = cfg_.abs_tol + cfg_.rel_tol * std::abs(y_(i));
        dnf += std::norm(k1_(i)) / (sc * sc);
        dny += std::norm(y_(i)) / (sc * sc);
    }
    double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * std::sqrt(dny / dnf);
    h = std::min(h, t_end_ - t_);

    CVector y1 = y_ + h * k1_;
    CVector k2(n);
    rhs_(t_ + h, y1, k2);
    double der2 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double sc = cfg_.abs_tol + cfg_.rel_tol * std::abs(y_(i));
        der2 += std::norm(k2(i) - k1_(i)) / (sc * sc);
    }
    der2 = std::sqrt(der2) / h;

    const double der12 = std::max(der2, std::sqrt(dnf));
    const double h1 = (der12 <= 1e-15) ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / der12, 0.2);
    return std::min({100.0 * h, h1, t_end_ - t_, cfg_.max_step});
}

void DormandPrince54::step() {
    if (finished_) throw Error("step() called on a finished integration");

    if (first_step_) {
        h_ = (cfg_.initial_step > 0.0) ? std::min(cfg_.initial_step, t_end_ - t_)
                                       : initial_step_size();
        first_step_ = false;
    }

    const double span = t_end_ - t_begin_;
    bool rejected = false;
    while (true) {
        if (h_ < 1e-14 * std::max(span, std::abs(t_)))
            throw IntegrationFailure("adaptive step size underflow at t = " + std::to_string(t_), t_);

        h_ = std::min(h_, cfg_.max_step);
        bool last = false;
        if (t_ + 1.01 * h_ >= t_end_) {
            h_ = t_end_ - t_;
            last = true;
        }
        const double h = h_;

        y_tmp_ = y_ + h * (a21 * k1_);
        rhs_(t_ + c2 * h, y_tmp_, k2_);
        y_tmp_ = y_ + h * (a31 * k1_ + a32 * k2_);
        rhs_(t_ + c3 * h, y_tmp_, k3_);
        y_tmp_ = y_ + h * (a41 * k1_ + a42 * k2_ + a43 * k3_);
        rhs_(t_ + c4 * h, y_tmp_, k4_);
        y_tmp_ = y_ + h * (a51 * k1_ + a52 * k2_ + a53 * k3_ + a54 * k4_);
        rhs_(t_ + c5 * h, y_tmp_, k5_);
        y_tmp_ = y_ + h * (a61 * k1_ + a62 * k2_ + a63 * k3_ + a64 * k4_ + a65 * k5_);
        rhs_(t_ + h, y_tmp_, k6_);
        y_new_ = y_ + h * (a71 * k1_ + a73 * k3_ + a74 * k4_ + a75 * k5_ + a76 * k6_);
        rhs_(t_ + h, y_new_, k7_);

        err_ = h * (e1 * k1_ + e3 * k3_ + e4 * k4_ + e5 * k5_ + e6 * k6_ + e7 * k7_);
        double err = 0.0;
        for (Eigen::Index i = 0; i < y_.size(); ++i) {
            const double sc =
                cfg_.abs_tol + cfg_.rel_tol * std::max(std::abs(y_(i)), std::abs(y_new_(i)));
            err += std::norm(err_(i)) / (sc * sc);
        }
        err = std::sqrt(err / double(y_.size()));

        // A non-finite estimate (overflow, NaN from the rhs) rejects the step.
        if (!std::isfinite(err)) {
            h_ = 0.1 * h;
            rejected = true;
            ++n_rejected_;
            continue;
        }
        const double fac11 = std::pow(err, 0.2 - kBeta * 0.75);
        if (err > 1.0) {
            h_ = h / std::min(1.0 / kFacMin, fac11 / kSafety);
            rejected = true;
            ++n_rejected_;
            continue;
        }

        // Accepted.
        const double fac =
            std::clamp(fac11 / std::pow(err_old_, kBeta) / kSafety, 1.0 / kFacMax, 1.0 / kFacMin);
        double h_next = h / fac;
        if (rejected) h_next = std::min(h_next, h);
        err_old_ = std::max(err, 1e-4);

        prepare_dense_output(h);
        t_begin_ = t_;
        t_ += h;
        y_.swap(y_new_);
        k1_.swap(k7_);  // FSAL
        h_ = h_next;
        ++n_accepted_;
        finished_ = last;
        return;
    }
}

void DormandPrince54::prepare_dense_output(double h) {
    rcont1_ = y_;
    rcont2_ = y_new_ - y_;
    rcont3_ = h * k1_ - rcont2_;
    rcont4_ = rcont2_ - h * k7_ - rcont3_;
    rcont5_ = h * (d1 * k1_ + d3 * k3_ + d4 * k4_ + d5 * k5_ + d6 * k6_ + d7 * k7_);
}

void DormandPrince54::interpolate(double t, CVector& out) const {
    const double h = t_ - t_begin_;
    const double theta = (h == 0.0) ? 0.0 : (t - t_begin_) / h;
    const double theta1 = 1.0 - theta;
    out = rcont1_ +
          theta * (rcont2_ + theta1 * (rcont3_ + theta * (rcont4_ + theta1 * rcont5_)));
}

void integrate_adaptive(const DormandPrince54::Rhs& rhs, const CVector& y0,
                        const std::vector<double>& times, const IntegratorConfig& cfg,
                        const std::function<void(std::size_t, double, const CVector&)>& emit) {
    if (times.size() < 2) throw InvalidArgument("need at least two output times");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw InvalidArgument("output times must be strictly increasing");

    emit(0, times[0], y0);

    DormandPrince54 stepper(rhs, cfg);
    stepper.start(times.front(), y0, times.back());
    std::size_t next = 1;
    CVector sample(y0.size());
    while (next < times.size()) {
        stepper.step();
        while (next < times.size() && times[next] <= stepper.t_now()) {
            stepper.interpolate(times[next], sample);
            emit(next, times[next], sample);
            ++next;
        }
        if (stepper.finished() && next < times.size()) {
            // times.back() == t_now up to roundoff; flush remaining samples.
            while (next < times.size()) {
                stepper.interpolate(std::min(times[next], stepper.t_now()), sample);
                emit(next, times[next], sample);
                ++next;
            }
        }
    }
}

}  // namespace qsim
