// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qsim/qsim.hpp"

using namespace qsim;

namespace {

std::vector<double> time_grid(double t_end, double dt) {
    std::vector<double> t;
    for (double x = 0.0; x <= t_end + 1e-12; x += dt) t.push_back(x);
    return t;
}

}  // namespace

TEST_CASE("decoupled quantum part matches the master equation") {
    const Basis b = fock_basis(4);
    const Operator h = create(b) * destroy(b);
    const std::vector<Operator> jumps{destroy(b)};
    const std::vector<Operator> jumps_dag{create(b)};
    const std::vector<double> rates{0.3};

    CVector u0(2);
    u0 << Complex(1.5), Complex(-0.5);
    const SemiclassicalState initial(normalize(coherent_state(b, 1.0)), u0);

    IntegratorConfig cfg;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-12;
    const auto times = time_grid(4.0, 0.2);
    const auto joint = sc_master_dynamic(
        times, initial,
        [&](double, const DensityOperator&, const CVector&) {
            return LindbladGenerator{h, jumps, jumps_dag, rates};
        },
        [](double, const DensityOperator&, const CVector&, Eigen::Ref<CVector> du) {
            du.setZero();
        },
        cfg);

    const auto ref = master(times, normalize(coherent_state(b, 1.0)), h, jumps, rates, cfg);
    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK((joint.states[i].density().matrix() - ref.states[i].matrix()).cwiseAbs().maxCoeff() <
              1e-8);
        CHECK((joint.states[i].classical() - u0).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("classical harmonic oscillator traces the analytic circle") {
    const Basis b = fock_basis(1);
    const double mass = 2.0;
    CVector u0(2);
    u0 << Complex(1.0), Complex(0.0);  // x(0) = 1, p(0) = 0
    const SemiclassicalState initial(fock_state(b, 0), u0);
    const Operator h0 = diagonal_operator(b, CVector::Zero(2));

    IntegratorConfig cfg;
    cfg.rel_tol = 1e-9;
    cfg.abs_tol = 1e-11;
    const auto times = time_grid(10.0, 0.1);
    const auto result = sc_schroedinger_dynamic(
        times, initial, [&](double, const StateVector&, const CVector&) { return h0; },
        [&](double, const StateVector&, const CVector& u, Eigen::Ref<CVector> du) {
            du(0) = u(1) / mass;
            du(1) = -u(0);
        },
        cfg);

    const double omega = 1.0 / std::sqrt(mass);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        const double x = result.states[i].classical()(0).real();
        const double p = result.states[i].classical()(1).real();
        CHECK(std::abs(x - std::cos(omega * t)) < 1e-6);
        CHECK(std::abs(p + std::sqrt(mass) * std::sin(omega * t)) < 1e-6);
        CHECK(std::abs(result.states[i].classical()(0).imag()) < 1e-12);
    }
}

TEST_CASE("decoupled ket variant matches schroedinger_dynamic and stays normalized") {
    const Basis b = fock_basis(6);
    const Operator h = create(b) * destroy(b) + Complex(0.4) * (create(b) + destroy(b));
    const StateVector psi0 = normalize(coherent_state(b, 0.9));
    CVector u0(1);
    u0 << Complex(0.25);
    const auto times = time_grid(5.0, 0.25);
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-12;

    const auto joint = sc_schroedinger_dynamic(
        times, SemiclassicalState(psi0, u0),
        [&](double, const StateVector&, const CVector&) { return h; },
        [](double, const StateVector&, const CVector&, Eigen::Ref<CVector> du) { du.setZero(); },
        cfg);
    const auto ref =
        schroedinger_dynamic(times, psi0, [&](double, const StateVector&) { return h; }, cfg);

    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK((joint.states[i].ket().amplitudes() - ref.states[i].amplitudes())
                  .cwiseAbs()
                  .maxCoeff() < 1e-8);
        CHECK(std::abs(joint.states[i].ket().norm() - 1.0) < 1e-6);
    }
}

TEST_CASE("classical callback sees the synchronously current quantum state") {
    // With H = omega * n the coherent amplitude rotates as alpha e^{-i omega t};
    // every recorded (t, <a>) pair must sit on that curve, which fails if the
    // callback ever received a stale quantum state.
    const Basis b = fock_basis(14);
    const double omega = 1.0;
    const Operator h = Complex(omega) * (create(b) * destroy(b));
    const Complex alpha(1.2, 0.0);
    const StateVector psi0 = coherent_state(b, alpha);
    CVector u0(1);
    u0 << Complex(0.0);

    std::vector<std::pair<double, Complex>> probes;
    IntegratorConfig cfg;
    cfg.max_step = 0.02;
    const auto times = time_grid(2.0, 0.5);
    sc_schroedinger_dynamic(
        times, SemiclassicalState(psi0, u0),
        [&](double, const StateVector&, const CVector&) { return h; },
        [&](double t, const StateVector& psi, const CVector&, Eigen::Ref<CVector> du) {
            probes.emplace_back(t, expect(destroy(b), psi) / psi.amplitudes().squaredNorm());
            du(0) = 0.0;
        },
        cfg);

    REQUIRE(probes.size() > 100);
    double last_t = 0.0;
    double worst_backstep = 0.0;
    for (const auto& [t, value] : probes) {
        const Complex expected = alpha * std::exp(Complex(0.0, -omega * t));
        CHECK(std::abs(value - expected) < 1e-3);
        worst_backstep = std::max(worst_backstep, last_t - t);
        last_t = t;
    }
    // Stage times are nondecreasing within one step attempt; t only moves
    // backwards when a step is rejected or re-tried, and then by less than
    // the step length itself.
    CHECK(worst_backstep <= cfg.max_step * 1.01);
}

TEST_CASE("output states reproduce the initial state exactly at t0") {
    const Basis b = fock_basis(3);
    CVector u0(3);
    u0 << Complex(0.1), Complex(-2.0), Complex(3.5);
    const DensityOperator rho0 = DensityOperator::from_ket(fock_state(b, 2));
    const SemiclassicalState initial(rho0, u0);
    const auto result = sc_master_dynamic(
        {0.0, 0.5, 1.0}, initial,
        [&](double, const DensityOperator&, const CVector&) {
            return LindbladGenerator{diagonal_operator(b, CVector::Zero(4)), {}, {}, {}};
        },
        [](double, const DensityOperator&, const CVector&, Eigen::Ref<CVector> du) {
            du.setZero();
        });
    CHECK(result.states.front().density().matrix() == rho0.matrix());
    CHECK(result.states.front().classical() == u0);
}
