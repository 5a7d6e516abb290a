// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "qsim/basis.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qsim/errors.hpp"

namespace qsim {

Basis::Basis(FockBasis b) : v_(b) {
    if (b.cutoff < 0) throw InvalidArgument("Fock cutoff must be non-negative");
}

Basis::Basis(SpinBasis b) : v_(b) {
    if (b.two_s < 1) throw InvalidArgument("spin must satisfy 2s >= 1");
}

Basis::Basis(PositionBasis b) : v_(b) {
    if (!(b.x_max > b.x_min)) throw InvalidArgument("position basis requires x_max > x_min");
    if (b.n_points < 2) throw InvalidArgument("position basis requires n_points >= 2");
}

Basis::Basis(MomentumBasis b) : v_(b) {
    if (!(b.p_max > b.p_min)) throw InvalidArgument("momentum basis requires p_max > p_min");
    if (b.n_points < 2) throw InvalidArgument("momentum basis requires n_points >= 2");
}

Basis::Basis(CompositeBasis b) : v_(std::move(b)) {
    const auto& factors = std::get<CompositeBasis>(v_).factors;
    if (factors.size() < 2) throw InvalidArgument("composite basis requires at least two factors");
    for (const auto& f : factors)
        if (f.is<CompositeBasis>())
            throw InvalidArgument("composite basis factors must not be composites themselves");
}

Eigen::Index Basis::dimension() const {
    return std::visit(
        [](const auto& b) -> Eigen::Index {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, FockBasis>) {
                return b.cutoff + 1;
            } else if constexpr (std::is_same_v<T, SpinBasis>) {
                return b.two_s + 1;
            } else if constexpr (std::is_same_v<T, PositionBasis> || std::is_same_v<T, MomentumBasis>) {
                return b.n_points;
            } else {
                Eigen::Index d = 1;
                for (const auto& f : b.factors) d *= f.dimension();
                return d;
            }
        },
        v_);
}

namespace {

bool same(const FockBasis& a, const FockBasis& b) { return a.cutoff == b.cutoff; }
bool same(const SpinBasis& a, const SpinBasis& b) { return a.two_s == b.two_s; }
bool same(const PositionBasis& a, const PositionBasis& b) {
    return a.x_min == b.x_min && a.x_max == b.x_max && a.n_points == b.n_points;
}
bool same(const MomentumBasis& a, const MomentumBasis& b) {
    return a.p_min == b.p_min && a.p_max == b.p_max && a.n_points == b.n_points;
}

}  // namespace

bool Basis::operator==(const Basis& other) const {
    if (v_.index() != other.v_.index()) return false;
    return std::visit(
        [&other](const auto& a) -> bool {
            using T = std::decay_t<decltype(a)>;
            const auto& b = std::get<T>(other.v_);
            if constexpr (std::is_same_v<T, CompositeBasis>) {
                if (a.factors.size() != b.factors.size()) return false;
                for (std::size_t i = 0; i < a.factors.size(); ++i)
                    if (a.factors[i] != b.factors[i]) return false;
                return true;
            } else {
                return same(a, b);
            }
        },
        v_);
}

std::string Basis::str() const {
    std::ostringstream os;
    std::visit(
        [&os](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, FockBasis>) {
                os << "Fock(" << b.cutoff << ")";
            } else if constexpr (std::is_same_v<T, SpinBasis>) {
                if (b.two_s % 2 == 0)
                    os << "Spin(" << b.two_s / 2 << ")";
                else
                    os << "Spin(" << b.two_s << "/2)";
            } else if constexpr (std::is_same_v<T, PositionBasis>) {
                os << "Position(" << b.x_min << "," << b.x_max << "," << b.n_points << ")";
            } else if constexpr (std::is_same_v<T, MomentumBasis>) {
                os << "Momentum(" << b.p_min << "," << b.p_max << "," << b.n_points << ")";
            } else {
                bool first = true;
                for (const auto& f : b.factors) {
                    if (!first) os << "⊗";
                    os << f.str();
                    first = false;
                }
            }
        },
        v_);
    return os.str();
}

Basis fock_basis(int cutoff) { return Basis(FockBasis{cutoff}); }

Basis spin_basis(double spin) {
    const double two_s = 2.0 * spin;
    const double rounded = std::round(two_s);
    if (!(two_s > 0.0) || std::abs(two_s - rounded) > 1e-9)
        throw InvalidArgument("spin must be a positive half-integer or integer");
    return Basis(SpinBasis{static_cast<int>(rounded)});
}

Basis position_basis(double x_min, double x_max, int n_points) {
    return Basis(PositionBasis{x_min, x_max, n_points});
}

Basis momentum_basis_from(const Basis& position) {
    const auto* p = position.get_if<PositionBasis>();
    if (p == nullptr)
        throw InvalidArgument("momentum_basis_from expects a position basis, got " + position.str());
    const double dx = (p->x_max - p->x_min) / p->n_points;
    const double p_lim = M_PI / dx;
    return Basis(MomentumBasis{-p_lim, p_lim, p->n_points});
}

Basis tensor_basis(const std::vector<Basis>& factors) {
    if (factors.empty()) throw InvalidArgument("tensor_basis requires at least one factor");
    if (factors.size() == 1) return factors.front();
    std::vector<Basis> flat;
    flat.reserve(factors.size());
    for (const auto& f : factors) {
        if (const auto* c = f.get_if<CompositeBasis>())
            flat.insert(flat.end(), c->factors.begin(), c->factors.end());
        else
            flat.push_back(f);
    }
    return Basis(CompositeBasis{std::move(flat)});
}

double grid_spacing(const Basis& b) {
    if (const auto* x = b.get_if<PositionBasis>()) return (x->x_max - x->x_min) / x->n_points;
    if (const auto* p = b.get_if<MomentumBasis>()) return (p->p_max - p->p_min) / p->n_points;
    throw InvalidArgument("grid_spacing is defined for position/momentum bases, got " + b.str());
}

RVector grid_points(const Basis& b) {
    const double d = grid_spacing(b);
    if (const auto* x = b.get_if<PositionBasis>())
        return RVector::LinSpaced(x->n_points, x->x_min, x->x_min + d * (x->n_points - 1));
    const auto* p = b.get_if<MomentumBasis>();
    return RVector::LinSpaced(p->n_points, p->p_min, p->p_min + d * (p->n_points - 1));
}

}  // namespace qsim
