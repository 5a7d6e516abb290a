// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "qsim/basis.hpp"
#include "qsim/state.hpp"
#include "qsim/types.hpp"

namespace qsim {

class Operator;

/// Row-major-agnostic dense matrix payload.
struct DensePayload {
    CMatrix mat;
};

/// Compressed sparse matrix payload.
struct SparsePayload {
    SpCMatrix mat;
};

/// Diagonal payload. The values vector is deliberately mutable through
/// Operator::diagonal_values(): state-dependent Hamiltonians update it in
/// place between derivative evaluations, and apply() never caches it.
struct DiagonalPayload {
    CVector values;
};

enum class FourierDirection { PositionToMomentum, MomentumToPosition };

/// Unitary discrete Fourier map between a position grid and its conjugate
/// momentum grid. Applying it to a state costs O(n log n); the explicit
/// matrix (including the grid phase offsets from nonzero x_min/p_min and the
/// sqrt(dx)/sqrt(dp) convention) is only ever materialized by to_dense().
struct FourierPayload {
    FourierDirection direction;
    CVector pre;   // element-wise factor applied before the FFT
    CVector post;  // element-wise factor applied after (includes 1/sqrt(n))
};

/// Deferred sum: apply(lazy_sum, psi) evaluates sum_k c_k * (term_k psi).
/// Terms are shared, so mutating a term through its own handle (e.g. a
/// diagonal payload) is visible to every composite holding it.
struct LazySumPayload {
    std::vector<std::shared_ptr<Operator>> terms;
    std::vector<Complex> coefficients;
};

/// Deferred product: factors are applied to the state right-to-left.
struct LazyProductPayload {
    std::vector<std::shared_ptr<Operator>> factors;
    Complex coefficient{1.0};
};

using OperatorPayload = std::variant<DensePayload, SparsePayload, DiagonalPayload, FourierPayload,
                                     LazySumPayload, LazyProductPayload>;

/// A linear map between two (possibly different) Hilbert spaces: a left
/// basis for the co-domain, a right basis for the domain, and one of six
/// representation payloads. Operators are shareable across threads for
/// read-only use.
class Operator {
  public:
    Operator(Basis basis_left, Basis basis_right, OperatorPayload payload);

    const Basis& basis_left() const { return basis_left_; }
    const Basis& basis_right() const { return basis_right_; }
    bool is_square() const { return basis_left_ == basis_right_; }

    const OperatorPayload& payload() const { return payload_; }

    template <class T>
    const T* get_if() const {
        return std::get_if<T>(&payload_);
    }

    /// Mutable access to a diagonal payload's values (throws otherwise).
    CVector& diagonal_values();

    Eigen::Index rows() const { return basis_left_.dimension(); }
    Eigen::Index cols() const { return basis_right_.dimension(); }

  private:
    Basis basis_left_;
    Basis basis_right_;
    OperatorPayload payload_;
};

// --- predefined constructors -----------------------------------------------

/// Bosonic annihilation operator on a Fock basis (sparse): <n-1|a|n> = sqrt(n).
Operator destroy(const Basis& b);

/// Bosonic creation operator, the adjoint of destroy (sparse).
Operator create(const Basis& b);

/// Number operator diag(0, 1, ..., cutoff) on a Fock basis (diagonal).
Operator number(const Basis& b);

/// Spin lowering operator S^- (sparse); for spin-1/2 it lowers |up> -> |down>.
Operator sigmam(const Basis& b);

/// Spin raising operator, the adjoint of sigmam (sparse).
Operator sigmap(const Basis& b);

/// Twice the z projection, diag(2m) for m = s..-s; diag(+1, -1) for spin-1/2.
Operator sigmaz(const Basis& b);

/// Identity on any basis (diagonal of ones).
Operator identity(const Basis& b);

/// Position operator. Diagonal on a position basis; on a momentum basis the
/// dense matrix obtained by Fourier-conjugating the diagonal of the centered
/// conjugate position grid.
Operator position(const Basis& b);

/// Momentum operator. Diagonal on a momentum basis; on a position basis the
/// dense matrix T_xp * diag(p) * T_px with T the transform operators below.
Operator momentum(const Basis& b);

/// Diagonal operator with the given values (length must match dimension).
Operator diagonal_operator(const Basis& b, CVector values);

/// Fourier transform operator mapping amplitudes in `source` to amplitudes
/// in `target`. The pair must be a conjugate (momentum, position) or
/// (position, momentum) grid pair: equal n_points and dp*dx = 2*pi/n.
Operator transform(const Basis& target, const Basis& source);

/// Deferred sum of operators with identical basis pairs. Coefficients
/// default to one. Scalar multiplication folds into the coefficients.
Operator lazy_sum(std::vector<Operator> terms, std::vector<Complex> coefficients = {});
Operator lazy_sum(std::vector<std::shared_ptr<Operator>> terms,
                  std::vector<Complex> coefficients = {});

/// Deferred product of operators with chained bases, applied right-to-left.
Operator lazy_product(std::vector<Operator> factors);
Operator lazy_product(std::vector<std::shared_ptr<Operator>> factors);

// --- algebra ----------------------------------------------------------------

/// Conjugate transpose; swaps the two bases. An involution and an
/// antihomomorphism over products.
Operator dagger(const Operator& op);

/// Kronecker products; composite bases are flattened left-to-right.
Operator tensor(const Operator& a, const Operator& b);
Operator tensor(const std::vector<Operator>& factors);

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator-(const Operator& a);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex c, const Operator& op);
Operator operator*(const Operator& op, Complex c);
Operator operator/(const Operator& op, Complex c);

/// Apply an operator to a ket: basis_right must equal the ket's basis.
StateVector apply(const Operator& op, const StateVector& psi);
StateVector operator*(const Operator& op, const StateVector& psi);

/// Materialize any payload as a dense matrix. This is the only operation
/// that forces evaluation of lazy and Fourier payloads.
CMatrix to_dense(const Operator& op);

/// Materialize any payload as a sparse matrix (lazy/Fourier go via to_dense).
SpCMatrix to_sparse(const Operator& op);

/// Convenience wrappers carrying the original bases.
Operator as_dense_operator(const Operator& op);
Operator as_sparse_operator(const Operator& op);

/// max |A - A^dagger| element-wise deviation from Hermiticity.
double hermiticity_deviation(const Operator& op);
bool is_hermitian(const Operator& op, double tol = 1e-12);

/// Expectation value <psi|A|psi>. Maps over lists preserving order.
Complex expect(const Operator& op, const StateVector& psi);
std::vector<Complex> expect(const Operator& op, const std::vector<StateVector>& states);

}  // namespace qsim
