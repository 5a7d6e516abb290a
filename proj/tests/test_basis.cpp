// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "qsim/basis.hpp"
#include "qsim/errors.hpp"

using namespace qsim;

TEST_CASE("fock basis dimension is cutoff + 1") {
    CHECK(fock_basis(40).dimension() == 41);
    CHECK(fock_basis(0).dimension() == 1);
    CHECK(fock_basis(2).dimension() == 3);
    CHECK_THROWS_AS(fock_basis(-1), InvalidArgument);
}

TEST_CASE("spin basis dimension is 2s + 1") {
    CHECK(spin_basis(0.5).dimension() == 2);
    CHECK(spin_basis(1.0).dimension() == 3);
    CHECK(spin_basis(2.5).dimension() == 6);
    CHECK_THROWS_AS(spin_basis(0.3), InvalidArgument);
    CHECK_THROWS_AS(spin_basis(0.0), InvalidArgument);
    CHECK_THROWS_AS(spin_basis(-0.5), InvalidArgument);
}

TEST_CASE("position basis grid excludes the right endpoint") {
    const Basis b = position_basis(-10.0, 10.0, 300);
    CHECK(b.dimension() == 300);
    CHECK(grid_spacing(b) == doctest::Approx(1.0 / 15.0).epsilon(1e-14));
    const RVector x = grid_points(b);
    CHECK(x(0) == doctest::Approx(-10.0));
    CHECK(x(299) == doctest::Approx(10.0 - 1.0 / 15.0));

    const RVector two = grid_points(position_basis(0.0, 1.0, 2));
    CHECK(two(0) == doctest::Approx(0.0));
    CHECK(two(1) == doctest::Approx(0.5));

    CHECK_THROWS_AS(position_basis(1.0, 1.0, 10), InvalidArgument);
    CHECK_THROWS_AS(position_basis(0.0, 1.0, 1), InvalidArgument);
}

TEST_CASE("conjugate momentum basis") {
    const Basis bx = position_basis(-10.0, 10.0, 300);
    const Basis bp = momentum_basis_from(bx);
    CHECK(bp.dimension() == 300);
    CHECK(grid_spacing(bp) == doctest::Approx(M_PI / 10.0).epsilon(1e-14));
    const auto* p = bp.get_if<MomentumBasis>();
    REQUIRE(p != nullptr);
    CHECK(p->p_min == doctest::Approx(-15.0 * M_PI));
    CHECK(p->p_max == doctest::Approx(15.0 * M_PI));

    const Basis bp4 = momentum_basis_from(position_basis(0.0, 2.0 * M_PI, 4));
    CHECK(grid_spacing(bp4) == doctest::Approx(1.0).epsilon(1e-14));
    const RVector pg = grid_points(bp4);
    CHECK(pg(0) == doctest::Approx(-2.0));
    CHECK(pg(2) == doctest::Approx(0.0));

    CHECK_THROWS_AS(momentum_basis_from(fock_basis(3)), InvalidArgument);
}

TEST_CASE("tensor basis flattens and multiplies dimensions") {
    const Basis bc = fock_basis(40);
    const Basis ba = spin_basis(0.5);
    CHECK(tensor_basis({bc, ba}).dimension() == 82);
    CHECK(tensor_basis({bc}) == bc);
    CHECK(tensor_basis({fock_basis(1), fock_basis(1), spin_basis(0.5)}).dimension() == 8);

    const Basis nested = tensor_basis({bc, tensor_basis({ba, fock_basis(1)})});
    const Basis flat = tensor_basis({bc, ba, fock_basis(1)});
    CHECK(nested == flat);

    CHECK_THROWS_AS(tensor_basis({}), InvalidArgument);
}

TEST_CASE("basis equality is structural") {
    CHECK(fock_basis(3) == fock_basis(3));
    CHECK(fock_basis(3) != fock_basis(4));
    // Same dimension, different variants must not compare equal.
    CHECK(fock_basis(1) != spin_basis(0.5));
    CHECK(position_basis(0.0, 1.0, 8) != position_basis(0.0, 2.0, 8));
    const Basis bx = position_basis(0.0, 1.0, 8);
    CHECK(bx != momentum_basis_from(bx));
    // Factor order matters.
    CHECK(tensor_basis({fock_basis(1), spin_basis(0.5)}) !=
          tensor_basis({spin_basis(0.5), fock_basis(1)}));
}

TEST_CASE("grid accessors reject non-grid bases") {
    CHECK_THROWS_AS(grid_points(fock_basis(2)), InvalidArgument);
    CHECK_THROWS_AS(grid_spacing(spin_basis(0.5)), InvalidArgument);
}
