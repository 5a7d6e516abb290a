// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qsim/qsim.hpp"

using namespace qsim;

TEST_CASE("fock states are unit basis vectors") {
    const Basis b = fock_basis(2);
    CHECK(fock_state(b, 0).amplitudes()(0) == Complex(1.0));
    CHECK(fock_state(b, 2).amplitudes()(2) == Complex(1.0));
    CHECK(fock_state(b, 0).norm() == 1.0);
    CHECK_THROWS_AS(fock_state(b, 3), OutOfRange);
}

TEST_CASE("coherent state amplitudes and truncation tail") {
    const Basis b = fock_basis(40);

    SUBCASE("alpha = 0 is the vacuum") {
        const StateVector psi = coherent_state(b, 0.0);
        CHECK((psi.amplitudes() - fock_state(b, 0).amplitudes()).norm() == 0.0);
    }

    SUBCASE("alpha = 4 against the closed form and Poisson tail") {
        const StateVector psi = coherent_state(b, 4.0);
        CHECK(std::abs(psi.amplitudes()(0) - Complex(std::exp(-8.0))) < 1e-18);

        // Brute-force Poisson sum: |c_n|^2 = e^{-16} 16^n / n!.
        double mass = 0.0;
        double mean = 0.0;
        double term = std::exp(-16.0);
        for (int n = 0; n <= 40; ++n) {
            mass += term;
            mean += n * term;
            term *= 16.0 / double(n + 1);
        }
        CHECK(std::abs(psi.amplitudes().squaredNorm() - mass) < 1e-14);
        // True Poisson tail beyond the cutoff: 1.2604e-7.
        CHECK(1.0 - psi.amplitudes().squaredNorm() < 2e-7);

        const Complex n_exp = expect(number(b), psi);
        CHECK(std::abs(n_exp - Complex(mean)) < 1e-12);
        // Truncation reduces <n> below |alpha|^2 by 5.242e-6.
        CHECK(std::abs(n_exp - Complex(16.0)) < 1e-5);
    }
}

TEST_CASE("spin-1/2 states use index 0 = up") {
    const Basis b = spin_basis(0.5);
    CHECK(spin_up(b).amplitudes()(0) == Complex(1.0));
    CHECK(spin_down(b).amplitudes()(1) == Complex(1.0));
    CHECK(inner(spin_up(b), spin_down(b)) == Complex(0.0));
}

TEST_CASE("gaussian state moments on the grid") {
    const Basis b = position_basis(-10.0, 10.0, 300);

    CHECK(std::abs(gaussian_state(b, 0.0, 0.0, 1.5).norm() - 1.0) < 1e-12);
    CHECK_THROWS_AS(gaussian_state(b, 0.0, 0.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(gaussian_state(b, 0.0, 0.0, -1.0), InvalidArgument);

    const StateVector centered = gaussian_state(b, 0.0, 0.0, 1.5);
    CHECK(std::abs(oracles::grid_mean(grid_points(b), centered.amplitudes())) < 1e-6);
    CHECK(std::abs(oracles::grid_variance(grid_points(b), centered.amplitudes()) - 2.25) < 1e-3);

    const StateVector psi = gaussian_state(b, -2.0 * M_PI, 2.0, 1.5);
    const double x_mean = oracles::grid_mean(grid_points(b), psi.amplitudes());
    // The packet sits 2.48 sigma from the grid edge; truncating and
    // renormalizing shifts the grid mean inwards by 0.0264.
    CHECK(std::abs(x_mean + 2.0 * M_PI) < 0.05);
    CHECK(std::abs(expect(position(b), psi) - Complex(x_mean)) < 1e-12);
    CHECK(std::abs(expect(momentum(b), psi) - Complex(2.0)) < 1e-3);
}

TEST_CASE("tensor product index law") {
    SUBCASE("worked example") {
        const StateVector psi =
            tensor(fock_state(fock_basis(1), 1), spin_down(spin_basis(0.5)));
        CHECK(psi.amplitudes().size() == 4);
        CHECK(psi.amplitudes()(3) == Complex(1.0));
        CHECK(psi.amplitudes().cwiseAbs().sum() == 1.0);
    }

    SUBCASE("brute-force double loop up to 4x4") {
        for (int da = 2; da <= 4; ++da) {
            for (int db = 2; db <= 4; ++db) {
                const CVector va = oracles::random_ket_vector(da, 100 * da + db);
                const CVector vb = oracles::random_ket_vector(db, 200 * da + db);
                const StateVector a(StateKind::Ket, fock_basis(da - 1), va);
                const StateVector b(StateKind::Ket, fock_basis(db - 1), vb);
                const StateVector ab = tensor(a, b);
                for (int i = 0; i < da; ++i)
                    for (int j = 0; j < db; ++j)
                        CHECK(ab.amplitudes()(i * db + j) == va(i) * vb(j));
            }
        }
    }

    SUBCASE("norm multiplies and singleton passes through") {
        const StateVector a(StateKind::Ket, fock_basis(3), 2.0 * oracles::random_ket_vector(4, 7));
        const StateVector b(StateKind::Ket, spin_basis(1.0), 0.5 * oracles::random_ket_vector(3, 8));
        CHECK(tensor(a, b).norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-13));
        CHECK(tensor({a}).amplitudes() == a.amplitudes());
    }

    SUBCASE("mixed kinds are rejected") {
        const StateVector a = fock_state(fock_basis(1), 0);
        CHECK_THROWS_AS(tensor(a, dagger(a)), InvalidArgument);
    }
}

TEST_CASE("dagger is an exact involution") {
    const StateVector psi(StateKind::Ket, fock_basis(5), oracles::random_ket_vector(6, 42));
    const StateVector back = dagger(dagger(psi));
    CHECK(back.kind() == StateKind::Ket);
    CHECK(back.amplitudes() == psi.amplitudes());
    CHECK(dagger(psi).kind() == StateKind::Bra);
}

TEST_CASE("state algebra and error paths") {
    const Basis b = fock_basis(3);
    const StateVector psi(StateKind::Ket, b, oracles::random_ket_vector(4, 1));
    const StateVector phi(StateKind::Ket, b, oracles::random_ket_vector(4, 2));

    CHECK(std::abs(inner(psi, psi) - Complex(psi.norm() * psi.norm())) < 1e-14);
    CHECK(std::abs(inner(dagger(psi), phi) - inner(psi, phi)) < 1e-14);

    const StateVector sum = psi + Complex(0.5, 0.25) * phi;
    CHECK(sum.amplitudes() == psi.amplitudes() + Complex(0.5, 0.25) * phi.amplitudes());

    const StateVector other = fock_state(fock_basis(4), 0);
    CHECK_THROWS_AS(psi + other, BasisIncompatible);
    CHECK_THROWS_AS(psi - other, BasisIncompatible);
    CHECK_THROWS_AS(inner(psi, other), BasisIncompatible);
    CHECK_THROWS_AS(psi + tensor(fock_state(fock_basis(1), 0), spin_up(spin_basis(0.5))),
                    BasisIncompatible);

    CHECK_THROWS_AS(normalize(StateVector(StateKind::Ket, b, CVector::Zero(4))), DegenerateState);
}

TEST_CASE("normalized superposition of two gaussians") {
    const Basis b = position_basis(-10.0, 10.0, 300);
    const StateVector psi1 = gaussian_state(b, -2.0 * M_PI, 2.0, 1.5);
    const StateVector psi2 = gaussian_state(b, 2.0 * M_PI, -2.0, 1.5);
    CHECK(std::abs(normalize(psi1 + psi2).norm() - 1.0) < 1e-12);
}

TEST_CASE("Cauchy-Schwarz on random states") {
    std::mt19937 seeds(99);
    for (int trial = 0; trial < 50; ++trial) {
        const Basis b = fock_basis(7);
        StateVector a(StateKind::Ket, b, 3.0 * oracles::random_ket_vector(8, seeds()));
        StateVector c(StateKind::Ket, b, 0.2 * oracles::random_ket_vector(8, seeds()));
        CHECK(std::abs(inner(a, c)) <= a.norm() * c.norm() + 1e-12);
    }
}
