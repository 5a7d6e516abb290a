// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "qsim/errors.hpp"
#include "qsim/integrator.hpp"

using namespace qsim;

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i) t[i] = a + (b - a) * i / double(n - 1);
    return t;
}

}  // namespace

TEST_CASE("exponential decay reaches e^-1") {
    const auto rhs = [](double, const CVector& y, CVector& dy) { dy = -y; };
    CVector y0(1);
    y0 << 1.0;
    IntegratorConfig cfg;
    double final_value = 0.0;
    integrate_adaptive(rhs, y0, {0.0, 0.5, 1.0}, cfg,
                       [&](std::size_t, double, const CVector& y) { final_value = y(0).real(); });
    CHECK(std::abs(final_value - std::exp(-1.0)) < cfg.rel_tol * 10.0);
}

TEST_CASE("unit circle rotation keeps |y| = 1") {
    const auto rhs = [](double, const CVector& y, CVector& dy) { dy = Complex(0.0, 1.0) * y; };
    CVector y0(1);
    y0 << 1.0;
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-12;
    double worst = 0.0;
    integrate_adaptive(rhs, y0, linspace(0.0, 100.0, 101), cfg,
                       [&](std::size_t, double, const CVector& y) {
                           worst = std::max(worst, std::abs(std::abs(y(0)) - 1.0));
                       });
    CHECK(worst < 1e-8);
}

TEST_CASE("zero right-hand side is integrated exactly") {
    const auto rhs = [](double, const CVector&, CVector& dy) { dy.setZero(); };
    CVector y0(3);
    y0 << Complex(1.0, -2.0), Complex(0.5, 0.5), Complex(-3.0, 0.0);
    integrate_adaptive(rhs, y0, linspace(0.0, 10.0, 37), {},
                       [&](std::size_t, double, const CVector& y) { CHECK(y == y0); });
}

TEST_CASE("dense output matches the analytic solution between steps") {
    const auto rhs = [](double, const CVector& y, CVector& dy) { dy = Complex(0.0, -2.0) * y; };
    CVector y0(1);
    y0 << Complex(1.0, 0.0);
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-9;
    cfg.abs_tol = 1e-11;
    // A fine output grid forces interpolation inside adaptive steps.
    double worst = 0.0;
    integrate_adaptive(rhs, y0, linspace(0.0, 4.0, 4001), cfg,
                       [&](std::size_t, double t, const CVector& y) {
                           worst = std::max(worst, std::abs(y(0) - std::exp(Complex(0.0, -2.0 * t))));
                       });
    CHECK(worst < 1e-7);
}

TEST_CASE("finite-time blow-up raises an integration failure with the last good time") {
    // y' = y^2 with y(0) = 1 is singular at t = 1.
    const auto rhs = [](double, const CVector& y, CVector& dy) { dy = y.cwiseProduct(y); };
    CVector y0(1);
    y0 << 1.0;
    try {
        integrate_adaptive(rhs, y0, {0.0, 2.0}, {}, [](std::size_t, double, const CVector&) {});
        FAIL("expected IntegrationFailure");
    } catch (const IntegrationFailure& e) {
        CHECK(e.last_good_time() > 0.9);
        CHECK(e.last_good_time() < 1.001);
    }
}

TEST_CASE("argument validation") {
    const auto rhs = [](double, const CVector& y, CVector& dy) { dy = -y; };
    const CVector y0 = CVector::Ones(1);
    CHECK_THROWS_AS(
        integrate_adaptive(rhs, y0, {0.0, 1.0, 0.5}, {}, [](std::size_t, double, const CVector&) {}),
        InvalidArgument);
    CHECK_THROWS_AS(
        integrate_adaptive(rhs, y0, {0.0}, {}, [](std::size_t, double, const CVector&) {}),
        InvalidArgument);
    IntegratorConfig bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(
        integrate_adaptive(rhs, y0, {0.0, 1.0}, bad, [](std::size_t, double, const CVector&) {}),
        InvalidArgument);
}

TEST_CASE("max_step and initial_step are honored") {
    int evals = 0;
    const auto rhs = [&evals](double, const CVector& y, CVector& dy) {
        ++evals;
        dy = -0.01 * y;
    };
    CVector y0(1);
    y0 << 1.0;
    IntegratorConfig cfg;
    cfg.max_step = 0.125;
    cfg.initial_step = 0.125;
    DormandPrince54 stepper(rhs, cfg);
    stepper.start(0.0, y0, 1.0);
    while (!stepper.finished()) {
        const double before = stepper.t_now();
        stepper.step();
        CHECK(stepper.t_now() - before <= 0.125 + 1e-12);
    }
    CHECK(stepper.t_now() == doctest::Approx(1.0));
}
