// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference computations used by the tests. Everything here is
// built directly from definitions (explicit matrices, brute-force sums,
// grid quadrature, scaling-and-squaring exponentials) so that it exercises
// none of the code paths it is used to check.
#pragma once

#include <complex>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "qsim/qsim.hpp"

namespace oracles {

using qsim::CMatrix;
using qsim::Complex;
using qsim::CVector;
using qsim::RVector;

/// Explicit unitary DFT matrix between conjugate grids, element by element:
/// to momentum: M(k, j) = exp(-i p_k x_j) / sqrt(n).
inline CMatrix dft_matrix_to_momentum(const qsim::Basis& momentum, const qsim::Basis& position) {
    const RVector p = qsim::grid_points(momentum);
    const RVector x = qsim::grid_points(position);
    const double scale = 1.0 / std::sqrt(double(x.size()));
    CMatrix m(p.size(), x.size());
    for (Eigen::Index k = 0; k < p.size(); ++k)
        for (Eigen::Index j = 0; j < x.size(); ++j)
            m(k, j) = scale * std::exp(Complex(0.0, -p(k) * x(j)));
    return m;
}

/// Dense propagator exp(-i H t) via scaling-and-squaring (Eigen's matrix
/// exponential), independent of the adaptive integrator.
inline CMatrix propagator(const CMatrix& h, double t) {
    const CMatrix a = Complex(0.0, -1.0) * t * h;
    return a.exp();
}

/// Mean of x over the grid probability |psi_j|^2 (amplitudes carry sqrt(dx)).
inline double grid_mean(const RVector& x, const CVector& amplitudes) {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j) acc += x(j) * std::norm(amplitudes(j));
    return acc;
}

/// Variance of x over the grid probability.
inline double grid_variance(const RVector& x, const CVector& amplitudes) {
    const double mean = grid_mean(x, amplitudes);
    double acc = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        const double d = x(j) - mean;
        acc += d * d * std::norm(amplitudes(j));
    }
    return acc;
}

inline CVector random_ket_vector(Eigen::Index n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return v / v.norm();
}

inline CMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

inline qsim::Operator random_dense_operator(const qsim::Basis& bl, const qsim::Basis& br,
                                            unsigned seed) {
    return qsim::Operator(bl, br,
                          qsim::DensePayload{random_matrix(bl.dimension(), br.dimension(), seed)});
}

/// Oscillation amplitude max - min of a trace restricted to a time window.
inline double window_amplitude(const std::vector<double>& times, const std::vector<double>& values,
                               double t_lo, double t_hi) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < t_lo || times[i] > t_hi) continue;
        lo = std::min(lo, values[i]);
        hi = std::max(hi, values[i]);
    }
    return hi - lo;
}

}  // namespace oracles
