// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "qsim/semiclassical.hpp"

#include <cassert>
#include <utility>

#include "qsim/errors.hpp"
#include "qsim/master.hpp"

namespace qsim {

namespace detail {
CVector apply_to_vector(const Operator& op, const CVector& x);
}

namespace {

void assert_real_classical(const Eigen::Ref<const CVector>& u) {
#ifndef NDEBUG
    for (Eigen::Index i = 0; i < u.size(); ++i) assert(std::abs(u(i).imag()) < 1e-10);
#else
    (void)u;
#endif
}

}  // namespace

SemiclassicalState::SemiclassicalState(StateVector quantum, CVector classical)
    : quantum_(std::move(quantum)), classical_(std::move(classical)) {
    if (!std::get<StateVector>(quantum_).is_ket())
        throw InvalidArgument("semiclassical quantum part must be a ket or density operator");
}

SemiclassicalState::SemiclassicalState(DensityOperator quantum, CVector classical)
    : quantum_(std::move(quantum)), classical_(std::move(classical)) {}

SemiclassicalEvolution sc_master_dynamic(const std::vector<double>& times,
                                         const SemiclassicalState& initial, const SCMasterFn& f_q,
                                         const SCMasterClassicalFn& f_cl,
                                         const IntegratorConfig& cfg) {
    const DensityOperator rho0 = initial.quantum_is_ket()
                                     ? DensityOperator::from_ket(initial.ket())
                                     : initial.density();
    const Basis basis = rho0.basis();
    const Eigen::Index dim = rho0.dimension();
    const Eigen::Index n_cl = initial.classical().size();
    const Eigen::Index n_q = dim * dim;

    CVector y0(n_q + n_cl);
    y0.head(n_q) = Eigen::Map<const CVector>(rho0.matrix().data(), n_q);
    y0.tail(n_cl) = initial.classical();

    const auto rhs = [&](double t, const CVector& y, CVector& dy) {
        const Eigen::Map<const CMatrix> rho_map(y.data(), dim, dim);
        const CVector u = y.tail(n_cl);
        assert_real_classical(u);
        const DensityOperator rho = DensityOperator::unchecked(basis, rho_map);

        const LindbladGenerator gen = f_q(t, rho, u);
        const std::vector<double> rates =
            gen.rates.has_value() ? *gen.rates : std::vector<double>{};
        detail::LindbladRhs lindblad(gen.hamiltonian, gen.jump_ops, gen.jump_ops_dagger, rates, dim);
        Eigen::Map<CMatrix> drho(dy.data(), dim, dim);
        lindblad(rho.matrix(), drho);

        dy.tail(n_cl).setZero();
        f_cl(t, rho, u, dy.tail(n_cl));
    };

    SemiclassicalEvolution result;
    result.times = times;
    result.states.reserve(times.size());
    integrate_adaptive(rhs, y0, times, cfg, [&](std::size_t, double, const CVector& y) {
        const Eigen::Map<const CMatrix> m(y.data(), dim, dim);
        result.states.emplace_back(DensityOperator::unchecked(basis, m), CVector(y.tail(n_cl)));
    });
    return result;
}

SemiclassicalEvolution sc_schroedinger_dynamic(const std::vector<double>& times,
                                               const SemiclassicalState& initial,
                                               const SCHamiltonianFn& f_q,
                                               const SCKetClassicalFn& f_cl,
                                               const IntegratorConfig& cfg) {
    if (!initial.quantum_is_ket())
        throw InvalidArgument("sc_schroedinger_dynamic requires a ket quantum part");
    const StateVector& psi0 = initial.ket();
    const Basis basis = psi0.basis();
    const Eigen::Index n_q = psi0.amplitudes().size();
    const Eigen::Index n_cl = initial.classical().size();

    CVector y0(n_q + n_cl);
    y0.head(n_q) = psi0.amplitudes();
    y0.tail(n_cl) = initial.classical();

    const auto rhs = [&](double t, const CVector& y, CVector& dy) {
        const StateVector psi(StateKind::Ket, basis, y.head(n_q));
        const CVector u = y.tail(n_cl);
        assert_real_classical(u);

        const Operator H = f_q(t, psi, u);
        if (H.basis_left() != H.basis_right() || H.basis_right() != basis)
            throw BasisIncompatible("hamiltonian bases (" + H.basis_left().str() + ", " +
                                    H.basis_right().str() +
                                    ") must be square on the state basis (" + basis.str() + ")");
        dy.head(n_q) = Complex(0.0, -1.0) * detail::apply_to_vector(H, psi.amplitudes());

        dy.tail(n_cl).setZero();
        f_cl(t, psi, u, dy.tail(n_cl));
    };

    SemiclassicalEvolution result;
    result.times = times;
    result.states.reserve(times.size());
    integrate_adaptive(rhs, y0, times, cfg, [&](std::size_t, double, const CVector& y) {
        result.states.emplace_back(StateVector(StateKind::Ket, basis, y.head(n_q)),
                                   CVector(y.tail(n_cl)));
    });
    return result;
}

}  // namespace qsim
