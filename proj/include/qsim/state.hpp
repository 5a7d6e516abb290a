// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qsim/basis.hpp"
#include "qsim/types.hpp"

namespace qsim {

enum class StateKind { Ket, Bra };

/// A ket or bra: a basis plus the complex amplitude vector with respect to it.
/// All operations return new values; callers never observe in-place mutation.
class StateVector {
  public:
    StateVector(StateKind kind, Basis basis, CVector amplitudes);

    StateKind kind() const { return kind_; }
    bool is_ket() const { return kind_ == StateKind::Ket; }
    const Basis& basis() const { return basis_; }
    const CVector& amplitudes() const { return amplitudes_; }
    CVector& amplitudes() { return amplitudes_; }

    double norm() const { return amplitudes_.norm(); }

  private:
    StateKind kind_;
    Basis basis_;
    CVector amplitudes_;
};

/// Number state |n> of a Fock basis.
StateVector fock_state(const Basis& b, int n);

/// Coherent state |alpha> truncated at the basis cutoff (not renormalized);
/// amplitudes follow the stable recurrence c_n = c_{n-1} * alpha / sqrt(n).
StateVector coherent_state(const Basis& b, Complex alpha);

/// sigma_z eigenstates with highest (up) / lowest (down) eigenvalue.
/// For spin-1/2, spin_down is the ground state |g>.
StateVector spin_up(const Basis& b);
StateVector spin_down(const Basis& b);

/// Normalized Gaussian wave packet on a position grid, centered at x0 with
/// mean momentum p0 and position standard deviation sigma. Amplitudes carry
/// the sqrt(dx) convention: psi_j = psi(x_j) * sqrt(dx).
StateVector gaussian_state(const Basis& b, double x0, double p0, double sigma);

/// Kronecker product of states of the same kind; the left factor varies slowest.
StateVector tensor(const StateVector& a, const StateVector& b);
StateVector tensor(const std::vector<StateVector>& factors);

/// Conjugate transpose: flips Ket <-> Bra and conjugates amplitudes.
StateVector dagger(const StateVector& s);

/// Unit-norm copy; throws DegenerateState on a zero vector.
StateVector normalize(const StateVector& s);

double norm(const StateVector& s);

/// Sesquilinear inner product <a|b>. A Ket first argument is conjugated;
/// a Bra first argument is used as-is. Both states must share one basis.
Complex inner(const StateVector& a, const StateVector& b);

StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a);
StateVector operator*(Complex c, const StateVector& s);
StateVector operator*(const StateVector& s, Complex c);
StateVector operator/(const StateVector& s, Complex c);

}  // namespace qsim
