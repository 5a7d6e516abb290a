// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace qsim {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using SpCMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr Complex kImag{0.0, 1.0};

}  // namespace qsim
