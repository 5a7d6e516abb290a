// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "qsim/schroedinger.hpp"

#include "qsim/errors.hpp"

namespace qsim {

namespace detail {
CVector apply_to_vector(const Operator& op, const CVector& x);
}

namespace {

void check_square_on(const Operator& H, const Basis& b) {
    if (H.basis_left() != H.basis_right() || H.basis_right() != b)
        throw BasisIncompatible("hamiltonian bases (" + H.basis_left().str() + ", " +
                                H.basis_right().str() + ") must be square on the state basis (" +
                                b.str() + ")");
}

}  // namespace

KetEvolution schroedinger(const std::vector<double>& times, const StateVector& psi0,
                          const Operator& H, const IntegratorConfig& cfg) {
    if (!psi0.is_ket()) throw InvalidArgument("schroedinger expects a ket initial state");
    check_square_on(H, psi0.basis());

    KetEvolution result;
    result.times = times;
    result.states.reserve(times.size());

    const auto rhs = [&H](double, const CVector& y, CVector& dy) {
        dy = Complex(0.0, -1.0) * detail::apply_to_vector(H, y);
    };
    integrate_adaptive(rhs, psi0.amplitudes(), times, cfg,
                       [&](std::size_t, double, const CVector& y) {
                           result.states.emplace_back(StateKind::Ket, psi0.basis(), y);
                       });
    return result;
}

KetEvolution schroedinger_dynamic(const std::vector<double>& times, const StateVector& psi0,
                                  const HamiltonianFn& hamiltonian, const IntegratorConfig& cfg) {
    if (!psi0.is_ket()) throw InvalidArgument("schroedinger_dynamic expects a ket initial state");
    const Basis& basis = psi0.basis();

    KetEvolution result;
    result.times = times;
    result.states.reserve(times.size());

    const auto rhs = [&hamiltonian, &basis](double t, const CVector& y, CVector& dy) {
        const StateVector psi(StateKind::Ket, basis, y);
        const Operator H = hamiltonian(t, psi);
        check_square_on(H, basis);
        dy = Complex(0.0, -1.0) * detail::apply_to_vector(H, y);
    };
    integrate_adaptive(rhs, psi0.amplitudes(), times, cfg,
                       [&](std::size_t, double, const CVector& y) {
                           result.states.emplace_back(StateKind::Ket, basis, y);
                       });
    return result;
}

}  // namespace qsim
