// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "qsim/operator.hpp"

#include <cmath>
#include <utility>

#include <unsupported/Eigen/FFT>
#include <unsupported/Eigen/KroneckerProduct>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

void check_same_basis_pair(const Operator& a, const Operator& b, const char* op) {
    if (a.basis_left() != b.basis_left())
        throw BasisIncompatible(std::string(op) + ": left bases differ, " + a.basis_left().str() +
                                " vs " + b.basis_left().str());
    if (a.basis_right() != b.basis_right())
        throw BasisIncompatible(std::string(op) + ": right bases differ, " + a.basis_right().str() +
                                " vs " + b.basis_right().str());
}

void check_chain(const Operator& a, const Operator& b, const char* op) {
    if (a.basis_right() != b.basis_left())
        throw BasisIncompatible(std::string(op) + ": right basis of left operand (" +
                                a.basis_right().str() + ") does not match left basis of right operand (" +
                                b.basis_left().str() + ")");
}

bool is_lazy_or_fourier(const Operator& op) {
    return op.get_if<FourierPayload>() != nullptr || op.get_if<LazySumPayload>() != nullptr ||
           op.get_if<LazyProductPayload>() != nullptr;
}

bool is_dense(const Operator& op) { return op.get_if<DensePayload>() != nullptr; }
bool is_diag(const Operator& op) { return op.get_if<DiagonalPayload>() != nullptr; }

SpCMatrix dense_to_sparse_exact(const CMatrix& m) {
    std::vector<Eigen::Triplet<Complex>> trip;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != Complex(0.0)) trip.emplace_back(i, j, m(i, j));
    SpCMatrix s(m.rows(), m.cols());
    s.setFromTriplets(trip.begin(), trip.end());
    return s;
}

SpCMatrix diag_to_sparse(const CVector& v) {
    SpCMatrix s(v.size(), v.size());
    s.reserve(Eigen::VectorXi::Constant(v.size(), 1));
    for (Eigen::Index i = 0; i < v.size(); ++i) s.insert(i, i) = v(i);
    s.makeCompressed();
    return s;
}

CVector apply_fourier(const FourierPayload& f, const CVector& x) {
    thread_local Eigen::FFT<double> fft;  // caches plans per length, one per thread
    CVector w = f.pre.cwiseProduct(x);
    CVector transformed(w.size());
    if (f.direction == FourierDirection::PositionToMomentum)
        fft.fwd(transformed, w);
    else
        fft.inv(transformed, w);
    return f.post.cwiseProduct(transformed);
}

CVector apply_vec(const Operator& op, const CVector& x);

struct ApplyVisitor {
    const Operator& op;
    const CVector& x;

    CVector operator()(const DensePayload& p) const { return p.mat * x; }
    CVector operator()(const SparsePayload& p) const { return p.mat * x; }
    CVector operator()(const DiagonalPayload& p) const { return p.values.cwiseProduct(x); }
    CVector operator()(const FourierPayload& p) const { return apply_fourier(p, x); }
    CVector operator()(const LazySumPayload& p) const {
        CVector acc = p.coefficients[0] * apply_vec(*p.terms[0], x);
        for (std::size_t k = 1; k < p.terms.size(); ++k)
            acc += p.coefficients[k] * apply_vec(*p.terms[k], x);
        return acc;
    }
    CVector operator()(const LazyProductPayload& p) const {
        CVector v = apply_vec(*p.factors.back(), x);
        for (auto it = p.factors.rbegin() + 1; it != p.factors.rend(); ++it)
            v = apply_vec(**it, v);
        return p.coefficient * v;
    }
};

CVector apply_vec(const Operator& op, const CVector& x) {
    return std::visit(ApplyVisitor{op, x}, op.payload());
}

CMatrix fourier_matrix(const Operator& op) {
    const auto& f = std::get<FourierPayload>(op.payload());
    if (f.direction == FourierDirection::PositionToMomentum) {
        const RVector p = grid_points(op.basis_left());
        const RVector x = grid_points(op.basis_right());
        const double scale = 1.0 / std::sqrt(double(x.size()));
        CMatrix m(p.size(), x.size());
        for (Eigen::Index k = 0; k < p.size(); ++k)
            for (Eigen::Index j = 0; j < x.size(); ++j)
                m(k, j) = scale * std::exp(Complex(0.0, -p(k) * x(j)));
        return m;
    }
    const RVector x = grid_points(op.basis_left());
    const RVector p = grid_points(op.basis_right());
    const double scale = 1.0 / std::sqrt(double(x.size()));
    CMatrix m(x.size(), p.size());
    for (Eigen::Index j = 0; j < x.size(); ++j)
        for (Eigen::Index k = 0; k < p.size(); ++k)
            m(j, k) = scale * std::exp(Complex(0.0, p(k) * x(j)));
    return m;
}

}  // namespace

namespace detail {
CVector apply_to_vector(const Operator& op, const CVector& x) { return apply_vec(op, x); }
}  // namespace detail

Operator::Operator(Basis basis_left, Basis basis_right, OperatorPayload payload)
    : basis_left_(std::move(basis_left)),
      basis_right_(std::move(basis_right)),
      payload_(std::move(payload)) {
    const Eigen::Index nl = basis_left_.dimension();
    const Eigen::Index nr = basis_right_.dimension();
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, DensePayload>) {
                if (p.mat.rows() != nl || p.mat.cols() != nr)
                    throw InvalidArgument("dense payload shape does not match bases");
            } else if constexpr (std::is_same_v<T, SparsePayload>) {
                if (p.mat.rows() != nl || p.mat.cols() != nr)
                    throw InvalidArgument("sparse payload shape does not match bases");
            } else if constexpr (std::is_same_v<T, DiagonalPayload>) {
                if (nl != nr || p.values.size() != nl)
                    throw InvalidArgument("diagonal payload requires equal dimensions");
            } else if constexpr (std::is_same_v<T, FourierPayload>) {
                if (p.pre.size() != nr || p.post.size() != nl)
                    throw InvalidArgument("fourier payload shape does not match bases");
            }
            // Lazy payloads are validated by their constructors.
        },
        payload_);
}

CVector& Operator::diagonal_values() {
    auto* d = std::get_if<DiagonalPayload>(&payload_);
    if (d == nullptr) throw InvalidArgument("operator payload is not diagonal");
    return d->values;
}

// --- lazy constructors -------------------------------------------------------

Operator lazy_sum(std::vector<std::shared_ptr<Operator>> terms, std::vector<Complex> coefficients) {
    if (terms.empty()) throw InvalidArgument("lazy_sum requires at least one term");
    if (coefficients.empty()) coefficients.assign(terms.size(), Complex(1.0));
    if (coefficients.size() != terms.size())
        throw InvalidArgument("lazy_sum coefficient count does not match term count");
    for (const auto& t : terms) check_same_basis_pair(*terms.front(), *t, "lazy_sum");
    Basis bl = terms.front()->basis_left();
    Basis br = terms.front()->basis_right();
    return Operator(std::move(bl), std::move(br),
                    LazySumPayload{std::move(terms), std::move(coefficients)});
}

Operator lazy_sum(std::vector<Operator> terms, std::vector<Complex> coefficients) {
    std::vector<std::shared_ptr<Operator>> shared;
    shared.reserve(terms.size());
    for (auto& t : terms) shared.push_back(std::make_shared<Operator>(std::move(t)));
    return lazy_sum(std::move(shared), std::move(coefficients));
}

Operator lazy_product(std::vector<std::shared_ptr<Operator>> factors) {
    if (factors.empty()) throw InvalidArgument("lazy_product requires at least one factor");
    for (std::size_t k = 0; k + 1 < factors.size(); ++k)
        check_chain(*factors[k], *factors[k + 1], "lazy_product");
    Basis bl = factors.front()->basis_left();
    Basis br = factors.back()->basis_right();
    return Operator(std::move(bl), std::move(br), LazyProductPayload{std::move(factors), 1.0});
}

Operator lazy_product(std::vector<Operator> factors) {
    std::vector<std::shared_ptr<Operator>> shared;
    shared.reserve(factors.size());
    for (auto& f : factors) shared.push_back(std::make_shared<Operator>(std::move(f)));
    return lazy_product(std::move(shared));
}

// --- conversions -------------------------------------------------------------

CMatrix to_dense(const Operator& op) {
    return std::visit(
        [&op](const auto& p) -> CMatrix {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, DensePayload>) {
                return p.mat;
            } else if constexpr (std::is_same_v<T, SparsePayload>) {
                return CMatrix(p.mat);
            } else if constexpr (std::is_same_v<T, DiagonalPayload>) {
                return CMatrix(p.values.asDiagonal());
            } else if constexpr (std::is_same_v<T, FourierPayload>) {
                return fourier_matrix(op);
            } else if constexpr (std::is_same_v<T, LazySumPayload>) {
                CMatrix acc = p.coefficients[0] * to_dense(*p.terms[0]);
                for (std::size_t k = 1; k < p.terms.size(); ++k)
                    acc += p.coefficients[k] * to_dense(*p.terms[k]);
                return acc;
            } else {
                CMatrix acc = to_dense(*p.factors.front());
                for (std::size_t k = 1; k < p.factors.size(); ++k)
                    acc = acc * to_dense(*p.factors[k]);
                return p.coefficient * acc;
            }
        },
        op.payload());
}

SpCMatrix to_sparse(const Operator& op) {
    if (const auto* s = op.get_if<SparsePayload>()) return s->mat;
    if (const auto* d = op.get_if<DensePayload>()) return dense_to_sparse_exact(d->mat);
    if (const auto* g = op.get_if<DiagonalPayload>()) return diag_to_sparse(g->values);
    return dense_to_sparse_exact(to_dense(op));
}

Operator as_dense_operator(const Operator& op) {
    return Operator(op.basis_left(), op.basis_right(), DensePayload{to_dense(op)});
}

Operator as_sparse_operator(const Operator& op) {
    return Operator(op.basis_left(), op.basis_right(), SparsePayload{to_sparse(op)});
}

// --- algebra -----------------------------------------------------------------

Operator dagger(const Operator& op) {
    return std::visit(
        [&op](const auto& p) -> Operator {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, DensePayload>) {
                return Operator(op.basis_right(), op.basis_left(), DensePayload{p.mat.adjoint()});
            } else if constexpr (std::is_same_v<T, SparsePayload>) {
                SpCMatrix adj = p.mat.adjoint();
                return Operator(op.basis_right(), op.basis_left(), SparsePayload{std::move(adj)});
            } else if constexpr (std::is_same_v<T, DiagonalPayload>) {
                return Operator(op.basis_right(), op.basis_left(),
                                DiagonalPayload{p.values.conjugate()});
            } else if constexpr (std::is_same_v<T, FourierPayload>) {
                return transform(op.basis_right(), op.basis_left());  // unitary: adjoint = inverse
            } else if constexpr (std::is_same_v<T, LazySumPayload>) {
                std::vector<std::shared_ptr<Operator>> terms;
                std::vector<Complex> coeffs;
                terms.reserve(p.terms.size());
                coeffs.reserve(p.terms.size());
                for (std::size_t k = 0; k < p.terms.size(); ++k) {
                    terms.push_back(std::make_shared<Operator>(dagger(*p.terms[k])));
                    coeffs.push_back(std::conj(p.coefficients[k]));
                }
                return lazy_sum(std::move(terms), std::move(coeffs));
            } else {
                std::vector<std::shared_ptr<Operator>> factors;
                factors.reserve(p.factors.size());
                for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it)
                    factors.push_back(std::make_shared<Operator>(dagger(**it)));
                Operator prod = lazy_product(std::move(factors));
                return std::conj(p.coefficient) * prod;
            }
        },
        op.payload());
}

Operator operator+(const Operator& a, const Operator& b) {
    check_same_basis_pair(a, b, "add");
    if (is_lazy_or_fourier(a) || is_lazy_or_fourier(b)) {
        std::vector<std::shared_ptr<Operator>> terms;
        std::vector<Complex> coeffs;
        auto append = [&](const Operator& op) {
            if (const auto* s = op.get_if<LazySumPayload>()) {
                terms.insert(terms.end(), s->terms.begin(), s->terms.end());
                coeffs.insert(coeffs.end(), s->coefficients.begin(), s->coefficients.end());
            } else {
                terms.push_back(std::make_shared<Operator>(op));
                coeffs.push_back(1.0);
            }
        };
        append(a);
        append(b);
        return lazy_sum(std::move(terms), std::move(coeffs));
    }
    if (is_diag(a) && is_diag(b)) {
        return Operator(a.basis_left(), a.basis_right(),
                        DiagonalPayload{std::get<DiagonalPayload>(a.payload()).values +
                                        std::get<DiagonalPayload>(b.payload()).values});
    }
    if (is_dense(a) || is_dense(b)) {
        return Operator(a.basis_left(), a.basis_right(), DensePayload{to_dense(a) + to_dense(b)});
    }
    SpCMatrix sum = to_sparse(a) + to_sparse(b);
    return Operator(a.basis_left(), a.basis_right(), SparsePayload{std::move(sum)});
}

Operator operator-(const Operator& a, const Operator& b) { return a + (-b); }

Operator operator-(const Operator& a) { return Complex(-1.0) * a; }

Operator operator*(const Operator& a, const Operator& b) {
    check_chain(a, b, "multiply");
    if (is_lazy_or_fourier(a) || is_lazy_or_fourier(b)) {
        std::vector<std::shared_ptr<Operator>> factors;
        Complex coeff = 1.0;
        auto append = [&](const Operator& op) {
            if (const auto* p = op.get_if<LazyProductPayload>()) {
                factors.insert(factors.end(), p->factors.begin(), p->factors.end());
                coeff *= p->coefficient;
            } else {
                factors.push_back(std::make_shared<Operator>(op));
            }
        };
        append(a);
        append(b);
        Operator prod = lazy_product(std::move(factors));
        return coeff == Complex(1.0) ? prod : coeff * prod;
    }
    if (is_diag(a) && is_diag(b)) {
        return Operator(a.basis_left(), b.basis_right(),
                        DiagonalPayload{std::get<DiagonalPayload>(a.payload()).values.cwiseProduct(
                            std::get<DiagonalPayload>(b.payload()).values)});
    }
    if (is_dense(a) || is_dense(b)) {
        return Operator(a.basis_left(), b.basis_right(), DensePayload{to_dense(a) * to_dense(b)});
    }
    SpCMatrix prod = to_sparse(a) * to_sparse(b);
    return Operator(a.basis_left(), b.basis_right(), SparsePayload{std::move(prod)});
}

Operator operator*(Complex c, const Operator& op) {
    return std::visit(
        [&](const auto& p) -> Operator {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, DensePayload>) {
                return Operator(op.basis_left(), op.basis_right(), DensePayload{c * p.mat});
            } else if constexpr (std::is_same_v<T, SparsePayload>) {
                SpCMatrix scaled = c * p.mat;
                return Operator(op.basis_left(), op.basis_right(), SparsePayload{std::move(scaled)});
            } else if constexpr (std::is_same_v<T, DiagonalPayload>) {
                return Operator(op.basis_left(), op.basis_right(), DiagonalPayload{c * p.values});
            } else if constexpr (std::is_same_v<T, FourierPayload>) {
                return lazy_sum(std::vector<std::shared_ptr<Operator>>{std::make_shared<Operator>(op)},
                                std::vector<Complex>{c});
            } else if constexpr (std::is_same_v<T, LazySumPayload>) {
                std::vector<Complex> coeffs = p.coefficients;
                for (auto& x : coeffs) x *= c;
                auto terms = p.terms;  // shared structure is preserved
                return Operator(op.basis_left(), op.basis_right(),
                                LazySumPayload{std::move(terms), std::move(coeffs)});
            } else {
                auto factors = p.factors;
                return Operator(op.basis_left(), op.basis_right(),
                                LazyProductPayload{std::move(factors), c * p.coefficient});
            }
        },
        op.payload());
}

Operator operator*(const Operator& op, Complex c) { return c * op; }

Operator operator/(const Operator& op, Complex c) { return (1.0 / c) * op; }

Operator tensor(const Operator& a, const Operator& b) {
    if (is_lazy_or_fourier(a) || is_lazy_or_fourier(b))
        throw InvalidArgument("tensor products of lazy or transform operators are not supported");
    const Basis bl = tensor_basis({a.basis_left(), b.basis_left()});
    const Basis br = tensor_basis({a.basis_right(), b.basis_right()});
    if (is_diag(a) && is_diag(b)) {
        const CVector& va = std::get<DiagonalPayload>(a.payload()).values;
        const CVector& vb = std::get<DiagonalPayload>(b.payload()).values;
        CVector out(va.size() * vb.size());
        for (Eigen::Index i = 0; i < va.size(); ++i)
            out.segment(i * vb.size(), vb.size()) = va(i) * vb;
        return Operator(bl, br, DiagonalPayload{std::move(out)});
    }
    if (is_dense(a) || is_dense(b)) {
        CMatrix out = Eigen::kroneckerProduct(to_dense(a), to_dense(b));
        return Operator(bl, br, DensePayload{std::move(out)});
    }
    SpCMatrix sa = to_sparse(a);
    SpCMatrix sb = to_sparse(b);
    SpCMatrix out = Eigen::kroneckerProduct(sa, sb);
    return Operator(bl, br, SparsePayload{std::move(out)});
}

Operator tensor(const std::vector<Operator>& factors) {
    if (factors.empty()) throw InvalidArgument("tensor requires at least one operator");
    Operator result = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) result = tensor(result, factors[i]);
    return result;
}

StateVector apply(const Operator& op, const StateVector& psi) {
    if (!psi.is_ket()) throw InvalidArgument("apply expects a ket");
    if (op.basis_right() != psi.basis())
        throw BasisIncompatible("apply: operator right basis (" + op.basis_right().str() +
                                ") does not match state basis (" + psi.basis().str() + ")");
    return {StateKind::Ket, op.basis_left(), apply_vec(op, psi.amplitudes())};
}

StateVector operator*(const Operator& op, const StateVector& psi) { return apply(op, psi); }

double hermiticity_deviation(const Operator& op) {
    if (op.basis_left() != op.basis_right())
        throw BasisIncompatible("hermiticity is defined for square operators on one basis");
    if (const auto* d = op.get_if<DiagonalPayload>()) return d->values.imag().cwiseAbs().maxCoeff();
    if (const auto* s = op.get_if<SparsePayload>()) {
        SpCMatrix diff = s->mat - SpCMatrix(s->mat.adjoint());
        double dev = 0.0;
        for (int k = 0; k < diff.outerSize(); ++k)
            for (SpCMatrix::InnerIterator it(diff, k); it; ++it)
                dev = std::max(dev, std::abs(it.value()));
        return dev;
    }
    const CMatrix m = to_dense(op);
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Operator& op, double tol) { return hermiticity_deviation(op) <= tol; }

Complex expect(const Operator& op, const StateVector& psi) {
    if (!psi.is_ket()) throw InvalidArgument("expect requires a ket");
    if (op.basis_left() != op.basis_right() || op.basis_right() != psi.basis())
        throw BasisIncompatible("expect: operator bases (" + op.basis_left().str() + ", " +
                                op.basis_right().str() + ") must both equal the state basis (" +
                                psi.basis().str() + ")");
    return psi.amplitudes().dot(apply_vec(op, psi.amplitudes()));
}

std::vector<Complex> expect(const Operator& op, const std::vector<StateVector>& states) {
    std::vector<Complex> out;
    out.reserve(states.size());
    for (const auto& s : states) out.push_back(expect(op, s));
    return out;
}

}  // namespace qsim
