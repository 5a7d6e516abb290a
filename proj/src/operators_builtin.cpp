// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
//
// Predefined quantum-optics operators and the position/momentum transforms.
#include <cmath>
#include <utility>
#include <vector>

#include "qsim/errors.hpp"
#include "qsim/operator.hpp"

namespace qsim {

namespace {

const FockBasis& require_fock(const Basis& b, const char* who) {
    const auto* f = b.get_if<FockBasis>();
    if (f == nullptr) throw InvalidArgument(std::string(who) + " expects a Fock basis, got " + b.str());
    return *f;
}

const SpinBasis& require_spin(const Basis& b, const char* who) {
    const auto* s = b.get_if<SpinBasis>();
    if (s == nullptr) throw InvalidArgument(std::string(who) + " expects a spin basis, got " + b.str());
    return *s;
}

SpCMatrix lowering_matrix(Eigen::Index dim, const std::vector<double>& amps) {
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(amps.size());
    for (std::size_t n = 0; n < amps.size(); ++n)
        trip.emplace_back(Eigen::Index(n) + 1, Eigen::Index(n), amps[n]);
    SpCMatrix m(dim, dim);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

// Centered position grid conjugate to a momentum grid (used by position()).
Basis position_basis_from(const MomentumBasis& p) {
    const double dp = (p.p_max - p.p_min) / p.n_points;
    const double x_lim = M_PI / dp;
    return position_basis(-x_lim, x_lim, p.n_points);
}

}  // namespace

Operator destroy(const Basis& b) {
    const auto& f = require_fock(b, "destroy");
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(f.cutoff);
    for (int n = 1; n <= f.cutoff; ++n) trip.emplace_back(n - 1, n, std::sqrt(double(n)));
    SpCMatrix m(b.dimension(), b.dimension());
    m.setFromTriplets(trip.begin(), trip.end());
    return Operator(b, b, SparsePayload{std::move(m)});
}

Operator create(const Basis& b) { return dagger(destroy(b)); }

Operator number(const Basis& b) {
    const auto& f = require_fock(b, "number");
    CVector values(f.cutoff + 1);
    for (int n = 0; n <= f.cutoff; ++n) values(n) = double(n);
    return Operator(b, b, DiagonalPayload{std::move(values)});
}

Operator sigmam(const Basis& b) {
    const auto& sb = require_spin(b, "sigmam");
    const double s = sb.two_s / 2.0;
    // Index i holds m = s - i; S^-|m> = sqrt(s(s+1) - m(m-1)) |m-1>.
    std::vector<double> amps(sb.two_s);
    for (int i = 0; i < sb.two_s; ++i) {
        const double m = s - i;
        amps[i] = std::sqrt(s * (s + 1.0) - m * (m - 1.0));
    }
    return Operator(b, b, SparsePayload{lowering_matrix(b.dimension(), amps)});
}

Operator sigmap(const Basis& b) { return dagger(sigmam(b)); }

Operator sigmaz(const Basis& b) {
    const auto& sb = require_spin(b, "sigmaz");
    CVector values(sb.two_s + 1);
    for (int i = 0; i <= sb.two_s; ++i) values(i) = double(sb.two_s - 2 * i);
    return Operator(b, b, DiagonalPayload{std::move(values)});
}

Operator identity(const Basis& b) {
    return Operator(b, b, DiagonalPayload{CVector::Ones(b.dimension())});
}

Operator diagonal_operator(const Basis& b, CVector values) {
    if (values.size() != b.dimension())
        throw InvalidArgument("diagonal_operator: values length " + std::to_string(values.size()) +
                              " does not match dimension of basis " + b.str());
    return Operator(b, b, DiagonalPayload{std::move(values)});
}

Operator transform(const Basis& target, const Basis& source) {
    const auto* tx = target.get_if<PositionBasis>();
    const auto* tp = target.get_if<MomentumBasis>();
    const auto* sx = source.get_if<PositionBasis>();
    const auto* sp = source.get_if<MomentumBasis>();

    const PositionBasis* xb = tx != nullptr ? tx : sx;
    const MomentumBasis* pb = tp != nullptr ? tp : sp;
    if (xb == nullptr || pb == nullptr)
        throw BasisIncompatible("transform connects a position basis and a momentum basis, got " +
                                target.str() + " and " + source.str());
    if (xb->n_points != pb->n_points)
        throw BasisIncompatible("transform: grids differ in size, " + target.str() + " vs " +
                                source.str());
    const Eigen::Index n = xb->n_points;
    const double dx = (xb->x_max - xb->x_min) / n;
    const double dp = (pb->p_max - pb->p_min) / n;
    if (std::abs(dx * dp * double(n) - 2.0 * M_PI) > 1e-9 * 2.0 * M_PI)
        throw BasisIncompatible("transform: grids are not Fourier conjugates, " + target.str() +
                                " vs " + source.str());

    const double sqrt_n = std::sqrt(double(n));
    CVector pre(n);
    CVector post(n);
    if (tp != nullptr) {
        // position -> momentum: post ∘ FFT ∘ pre with
        // pre_j = exp(-i p_min x_j), post_k = exp(-i x_min k dp) / sqrt(n)
        for (Eigen::Index j = 0; j < n; ++j)
            pre(j) = std::exp(Complex(0.0, -pb->p_min * (xb->x_min + j * dx)));
        for (Eigen::Index k = 0; k < n; ++k)
            post(k) = std::exp(Complex(0.0, -xb->x_min * k * dp)) / sqrt_n;
        return Operator(target, source,
                        FourierPayload{FourierDirection::PositionToMomentum, std::move(pre),
                                       std::move(post)});
    }
    // momentum -> position: the adjoint map, evaluated with the inverse FFT.
    // Eigen's inverse transform scales by 1/n, hence the sqrt(n) in post.
    for (Eigen::Index k = 0; k < n; ++k) pre(k) = std::exp(Complex(0.0, xb->x_min * k * dp));
    for (Eigen::Index j = 0; j < n; ++j)
        post(j) = std::exp(Complex(0.0, pb->p_min * (xb->x_min + j * dx))) * sqrt_n;
    return Operator(target, source,
                    FourierPayload{FourierDirection::MomentumToPosition, std::move(pre),
                                   std::move(post)});
}

Operator position(const Basis& b) {
    if (b.is<PositionBasis>()) {
        return Operator(b, b, DiagonalPayload{grid_points(b).cast<Complex>()});
    }
    if (const auto* pb = b.get_if<MomentumBasis>()) {
        const Basis bx = position_basis_from(*pb);
        const CMatrix to_p = to_dense(transform(b, bx));
        const CMatrix to_x = to_dense(transform(bx, b));
        CMatrix m = to_p * grid_points(bx).cast<Complex>().asDiagonal() * to_x;
        return Operator(b, b, DensePayload{std::move(m)});
    }
    throw InvalidArgument("position expects a position or momentum basis, got " + b.str());
}

Operator momentum(const Basis& b) {
    if (b.is<MomentumBasis>()) {
        return Operator(b, b, DiagonalPayload{grid_points(b).cast<Complex>()});
    }
    if (b.is<PositionBasis>()) {
        const Basis bp = momentum_basis_from(b);
        const CMatrix to_x = to_dense(transform(b, bp));
        const CMatrix to_p = to_dense(transform(bp, b));
        CMatrix m = to_x * grid_points(bp).cast<Complex>().asDiagonal() * to_p;
        return Operator(b, b, DensePayload{std::move(m)});
    }
    throw InvalidArgument("momentum expects a position or momentum basis, got " + b.str());
}

}  // namespace qsim
