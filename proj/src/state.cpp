// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "qsim/state.hpp"

#include <cmath>
#include <utility>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

void require_same_basis(const StateVector& a, const StateVector& b, const char* op) {
    if (a.basis() != b.basis())
        throw BasisIncompatible(std::string(op) + ": bases differ, " + a.basis().str() + " vs " +
                                b.basis().str());
}

void require_same_kind(const StateVector& a, const StateVector& b, const char* op) {
    if (a.kind() != b.kind()) throw InvalidArgument(std::string(op) + ": mixed ket/bra kinds");
}

}  // namespace

StateVector::StateVector(StateKind kind, Basis basis, CVector amplitudes)
    : kind_(kind), basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != basis_.dimension())
        throw InvalidArgument("amplitude vector length " + std::to_string(amplitudes_.size()) +
                              " does not match dimension of basis " + basis_.str());
}

StateVector fock_state(const Basis& b, int n) {
    const auto* fock = b.get_if<FockBasis>();
    if (fock == nullptr) throw InvalidArgument("fock_state expects a Fock basis, got " + b.str());
    if (n < 0 || n > fock->cutoff)
        throw OutOfRange("Fock level " + std::to_string(n) + " outside |0>..|" +
                         std::to_string(fock->cutoff) + ">");
    CVector amp = CVector::Zero(b.dimension());
    amp(n) = 1.0;
    return {StateKind::Ket, b, std::move(amp)};
}

StateVector coherent_state(const Basis& b, Complex alpha) {
    const auto* fock = b.get_if<FockBasis>();
    if (fock == nullptr)
        throw InvalidArgument("coherent_state expects a Fock basis, got " + b.str());
    CVector amp(b.dimension());
    amp(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= fock->cutoff; ++n) amp(n) = amp(n - 1) * alpha / std::sqrt(double(n));
    return {StateKind::Ket, b, std::move(amp)};
}

StateVector spin_up(const Basis& b) {
    if (!b.is<SpinBasis>()) throw InvalidArgument("spin_up expects a spin basis, got " + b.str());
    CVector amp = CVector::Zero(b.dimension());
    amp(0) = 1.0;
    return {StateKind::Ket, b, std::move(amp)};
}

StateVector spin_down(const Basis& b) {
    if (!b.is<SpinBasis>()) throw InvalidArgument("spin_down expects a spin basis, got " + b.str());
    CVector amp = CVector::Zero(b.dimension());
    amp(b.dimension() - 1) = 1.0;
    return {StateKind::Ket, b, std::move(amp)};
}

StateVector gaussian_state(const Basis& b, double x0, double p0, double sigma) {
    if (!b.is<PositionBasis>())
        throw InvalidArgument("gaussian_state expects a position basis, got " + b.str());
    if (!(sigma > 0.0)) throw InvalidArgument("gaussian_state requires sigma > 0");
    const RVector x = grid_points(b);
    const double dx = grid_spacing(b);
    const double prefactor = std::sqrt(dx) * std::pow(2.0 * M_PI * sigma * sigma, -0.25);
    CVector amp(x.size());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        const double d = x(j) - x0;
        amp(j) = prefactor * std::exp(Complex(-d * d / (4.0 * sigma * sigma), p0 * x(j)));
    }
    // Renormalize on the grid to absorb boundary truncation.
    return normalize(StateVector(StateKind::Ket, b, std::move(amp)));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    require_same_kind(a, b, "tensor");
    CVector amp(a.amplitudes().size() * b.amplitudes().size());
    for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i)
        amp.segment(i * b.amplitudes().size(), b.amplitudes().size()) =
            a.amplitudes()(i) * b.amplitudes();
    return {a.kind(), tensor_basis({a.basis(), b.basis()}), std::move(amp)};
}

StateVector tensor(const std::vector<StateVector>& factors) {
    if (factors.empty()) throw InvalidArgument("tensor requires at least one state");
    StateVector result = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) result = tensor(result, factors[i]);
    return result;
}

StateVector dagger(const StateVector& s) {
    return {s.is_ket() ? StateKind::Bra : StateKind::Ket, s.basis(), s.amplitudes().conjugate()};
}

StateVector normalize(const StateVector& s) {
    const double n = s.norm();
    if (n == 0.0) throw DegenerateState("cannot normalize a zero state vector");
    return {s.kind(), s.basis(), s.amplitudes() / n};
}

double norm(const StateVector& s) { return s.norm(); }

Complex inner(const StateVector& a, const StateVector& b) {
    require_same_basis(a, b, "inner");
    if (a.is_ket()) return a.amplitudes().dot(b.amplitudes());  // dot conjugates the first factor
    return a.amplitudes().transpose() * b.amplitudes();
}

StateVector operator+(const StateVector& a, const StateVector& b) {
    require_same_kind(a, b, "add");
    require_same_basis(a, b, "add");
    return {a.kind(), a.basis(), a.amplitudes() + b.amplitudes()};
}

StateVector operator-(const StateVector& a, const StateVector& b) {
    require_same_kind(a, b, "sub");
    require_same_basis(a, b, "sub");
    return {a.kind(), a.basis(), a.amplitudes() - b.amplitudes()};
}

StateVector operator-(const StateVector& a) { return {a.kind(), a.basis(), -a.amplitudes()}; }

StateVector operator*(Complex c, const StateVector& s) {
    return {s.kind(), s.basis(), c * s.amplitudes()};
}

StateVector operator*(const StateVector& s, Complex c) { return c * s; }

StateVector operator/(const StateVector& s, Complex c) { return (1.0 / c) * s; }

}  // namespace qsim
