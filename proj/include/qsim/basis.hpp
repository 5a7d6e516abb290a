// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qsim/types.hpp"

namespace qsim {

class Basis;

/// Truncated bosonic number basis |0>, ..., |cutoff>; dimension cutoff + 1.
struct FockBasis {
    int cutoff;
};

/// Spin-s basis with 2s + 1 levels; stores the integer numerator of 2s.
/// Index 0 is the highest m (spin-up), the last index the lowest (spin-down).
struct SpinBasis {
    int two_s;
};

/// Uniform position grid x_j = x_min + j*dx, j = 0..n_points-1, with
/// dx = (x_max - x_min)/n_points. The right endpoint is excluded so that the
/// discrete Fourier transform between conjugate grids is exactly unitary.
struct PositionBasis {
    double x_min;
    double x_max;
    int n_points;
};

/// Uniform momentum grid p_k = p_min + k*dp, right endpoint excluded.
struct MomentumBasis {
    double p_min;
    double p_max;
    int n_points;
};

/// Ordered tensor product of at least two factors. Factors are never
/// composites themselves; tensor_basis flattens nested products.
struct CompositeBasis {
    std::vector<Basis> factors;
};

/// Algebraic descriptor of a Hilbert-space factor or tensor product.
/// Every state and operator carries its bases, and all binary operations
/// check structural basis equality, not just matching dimensions.
/// Basis values are immutable and freely shareable between threads.
class Basis {
  public:
    using Variant = std::variant<FockBasis, SpinBasis, PositionBasis, MomentumBasis, CompositeBasis>;

    Basis(FockBasis b);       // NOLINT(google-explicit-constructor)
    Basis(SpinBasis b);       // NOLINT(google-explicit-constructor)
    Basis(PositionBasis b);   // NOLINT(google-explicit-constructor)
    Basis(MomentumBasis b);   // NOLINT(google-explicit-constructor)
    Basis(CompositeBasis b);  // NOLINT(google-explicit-constructor)

    Eigen::Index dimension() const;

    const Variant& data() const { return v_; }

    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&v_);
    }

    template <class T>
    bool is() const {
        return std::holds_alternative<T>(v_);
    }

    bool operator==(const Basis& other) const;
    bool operator!=(const Basis& other) const { return !(*this == other); }

    /// Human-readable form, e.g. "Fock(40)⊗Spin(1/2)"; used in error messages.
    std::string str() const;

  private:
    Variant v_;
};

/// Fock basis with levels |0>..|cutoff| (dimension cutoff + 1).
Basis fock_basis(int cutoff);

/// Spin basis for half-integer or integer spin; dimension 2s + 1.
Basis spin_basis(double spin);

/// Position grid on [x_min, x_max), n_points >= 2 equally spaced points.
Basis position_basis(double x_min, double x_max, int n_points);

/// Conjugate momentum grid of a position basis: same n_points,
/// p in [-pi/dx, +pi/dx) with spacing dp = 2*pi/(x_max - x_min). (hbar = 1)
Basis momentum_basis_from(const Basis& position);

/// Tensor product of the given factors, flattening nested composites.
/// A single factor is returned unchanged.
Basis tensor_basis(const std::vector<Basis>& factors);

/// Grid spacing dx (position) or dp (momentum).
double grid_spacing(const Basis& b);

/// The grid points x_j or p_k of a position/momentum basis.
RVector grid_points(const Basis& b);

}  // namespace qsim
