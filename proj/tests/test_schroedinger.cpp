// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qsim/qsim.hpp"

using namespace qsim;

namespace {

std::vector<double> time_grid(double t_end, double dt) {
    std::vector<double> t;
    for (double x = 0.0; x <= t_end + 1e-12; x += dt) t.push_back(x);
    return t;
}

struct JaynesCummings {
    Basis bc, ba, joint;
    Operator a, sm, excitation;

    JaynesCummings(int cutoff, double delta, double g)
        : bc(fock_basis(cutoff)),
          ba(spin_basis(0.5)),
          joint(tensor_basis({bc, ba})),
          a(tensor(destroy(bc), identity(ba))),
          sm(tensor(identity(bc), sigmam(ba))),
          excitation(dagger(sm) * sm),
          hamiltonian(Complex(delta) * (dagger(a) * a) +
                      Complex(g) * (dagger(a) * sm + a * dagger(sm))) {}

    Operator hamiltonian;
};

}  // namespace

TEST_CASE("zero hamiltonian leaves the state unchanged") {
    const Basis b = fock_basis(3);
    const StateVector psi0(StateKind::Ket, b, oracles::random_ket_vector(4, 17));
    const Operator h0 = diagonal_operator(b, CVector::Zero(4));
    const auto result = schroedinger(time_grid(5.0, 0.5), psi0, h0);
    for (const auto& s : result.states)
        CHECK((s.amplitudes() - psi0.amplitudes()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("resonant vacuum Rabi oscillation follows cos^2(gt)") {
    const JaynesCummings jc(1, 0.0, 1.0);
    const StateVector psi0 = tensor(fock_state(jc.bc, 0), spin_up(jc.ba));
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-12;
    const auto result = schroedinger(time_grid(10.0, 0.01), psi0, jc.hamiltonian, cfg);
    double worst = 0.0;
    for (std::size_t i = 0; i < result.times.size(); ++i) {
        const double expected = std::pow(std::cos(result.times[i]), 2);
        const double got = expect(jc.excitation, result.states[i]).real();
        worst = std::max(worst, std::abs(got - expected));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("small detuned model matches the matrix exponential propagator") {
    const JaynesCummings jc(3, -0.1, 1.0);
    const StateVector psi0 = tensor(coherent_state(jc.bc, 0.7), spin_down(jc.ba));
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-10;
    cfg.abs_tol = 1e-12;
    const auto result = schroedinger({0.0, 0.5, 1.0, 2.0}, psi0, jc.hamiltonian, cfg);
    const CMatrix h = to_dense(jc.hamiltonian);
    for (std::size_t i = 0; i < result.times.size(); ++i) {
        const CVector expected = oracles::propagator(h, result.times[i]) * psi0.amplitudes();
        CHECK((result.states[i].amplitudes() - expected).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("norm is conserved for hermitian generators") {
    const JaynesCummings jc(5, -0.1, 1.0);
    const StateVector psi0 = normalize(tensor(coherent_state(jc.bc, 1.0), spin_down(jc.ba)));
    IntegratorConfig cfg;  // the tolerances every long physics run below uses
    cfg.rel_tol = 1e-8;
    cfg.abs_tol = 1e-10;
    const auto result = schroedinger(time_grid(20.0, 0.1), psi0, jc.hamiltonian, cfg);
    for (const auto& s : result.states) CHECK(std::abs(s.norm() - 1.0) < 1e-6);
}

TEST_CASE("constant callback reduces to the static solver") {
    const JaynesCummings jc(4, -0.1, 1.0);
    const StateVector psi0 = tensor(fock_state(jc.bc, 1), spin_down(jc.ba));
    // Identical derivative values give an identical step sequence, so the two
    // paths agree far below the integration error.
    const auto fixed = schroedinger(time_grid(3.0, 0.05), psi0, jc.hamiltonian);
    const auto moving = schroedinger_dynamic(
        time_grid(3.0, 0.05), psi0, [&jc](double, const StateVector&) { return jc.hamiltonian; });
    for (std::size_t i = 0; i < fixed.states.size(); ++i)
        CHECK((fixed.states[i].amplitudes() - moving.states[i].amplitudes()).cwiseAbs().maxCoeff() <
              1e-10);
}

TEST_CASE("basis and argument errors") {
    const Basis b = fock_basis(2);
    const StateVector psi0 = fock_state(b, 0);
    CHECK_THROWS_AS(schroedinger({0.0, 1.0}, psi0, number(fock_basis(3))), BasisIncompatible);
    CHECK_THROWS_AS(schroedinger({0.0, 1.0, 0.5}, psi0, number(b)), InvalidArgument);
    CHECK_THROWS_AS(schroedinger({0.0, 1.0}, dagger(psi0), number(b)), InvalidArgument);
    CHECK_THROWS_AS(schroedinger_dynamic({0.0, 1.0}, psi0,
                                         [](double, const StateVector&) {
                                             return number(fock_basis(5));
                                         }),
                    BasisIncompatible);
}

TEST_CASE("self-convergence under tolerance tightening") {
    const JaynesCummings jc(6, -0.1, 1.0);
    const StateVector psi0 = tensor(coherent_state(jc.bc, 1.2), spin_down(jc.ba));
    IntegratorConfig loose;
    loose.rel_tol = 1e-6;
    loose.abs_tol = 1e-8;
    IntegratorConfig tight;
    tight.rel_tol = 1e-7;
    tight.abs_tol = 1e-9;
    const auto rl = schroedinger({0.0, 5.0, 10.0}, psi0, jc.hamiltonian, loose);
    const auto rt = schroedinger({0.0, 5.0, 10.0}, psi0, jc.hamiltonian, tight);
    const double diff = std::abs(expect(jc.excitation, rl.states.back()) -
                                 expect(jc.excitation, rt.states.back()));
    CHECK(diff < loose.rel_tol);
}
