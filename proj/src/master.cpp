// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "qsim/master.hpp"

#include <utility>

#include "qsim/errors.hpp"

namespace qsim {

namespace detail {

MatOp::MatOp(const Operator& op) {
    if (const auto* s = op.get_if<SparsePayload>()) {
        kind_ = Kind::Sparse;
        sparse_ = s->mat;
    } else if (const auto* d = op.get_if<DiagonalPayload>()) {
        kind_ = Kind::Diag;
        diag_ = d->values;
    } else {
        kind_ = Kind::Dense;
        dense_ = to_dense(op);
    }
}

void MatOp::mul_left(const Eigen::Ref<const CMatrix>& rho, CMatrix& out) const {
    switch (kind_) {
        case Kind::Dense: out.noalias() = dense_ * rho; break;
        case Kind::Sparse: out = sparse_ * rho; break;
        case Kind::Diag: out = diag_.asDiagonal() * rho; break;
    }
}

void MatOp::mul_right(const Eigen::Ref<const CMatrix>& rho, CMatrix& out) const {
    switch (kind_) {
        case Kind::Dense: out.noalias() = rho * dense_; break;
        case Kind::Sparse: out = rho * sparse_; break;
        case Kind::Diag: out = rho * diag_.asDiagonal(); break;
    }
}

MatOp MatOp::adjoint() const {
    MatOp out;
    out.kind_ = kind_;
    switch (kind_) {
        case Kind::Dense: out.dense_ = dense_.adjoint(); break;
        case Kind::Sparse: out.sparse_ = sparse_.adjoint(); break;
        case Kind::Diag: out.diag_ = diag_.conjugate(); break;
    }
    return out;
}

MatOp MatOp::times(const MatOp& other) const {
    MatOp out;
    if (kind_ == Kind::Diag && other.kind_ == Kind::Diag) {
        out.kind_ = Kind::Diag;
        out.diag_ = diag_.cwiseProduct(other.diag_);
        return out;
    }
    if (kind_ != Kind::Dense && other.kind_ != Kind::Dense) {
        const SpCMatrix a = kind_ == Kind::Sparse ? sparse_ : SpCMatrix(diag_.asDiagonal());
        const SpCMatrix b =
            other.kind_ == Kind::Sparse ? other.sparse_ : SpCMatrix(other.diag_.asDiagonal());
        out.kind_ = Kind::Sparse;
        out.sparse_ = a * b;
        return out;
    }
    auto densify = [](const MatOp& m) -> CMatrix {
        switch (m.kind_) {
            case Kind::Dense: return m.dense_;
            case Kind::Sparse: return CMatrix(m.sparse_);
            default: return CMatrix(m.diag_.asDiagonal());
        }
    };
    out.kind_ = Kind::Dense;
    out.dense_ = densify(*this) * densify(other);
    return out;
}

bool MatOp::hermitian(double tol) const {
    switch (kind_) {
        case Kind::Diag: return diag_.imag().cwiseAbs().maxCoeff() <= tol;
        case Kind::Sparse: {
            const SpCMatrix diff = sparse_ - SpCMatrix(sparse_.adjoint());
            for (int k = 0; k < diff.outerSize(); ++k)
                for (SpCMatrix::InnerIterator it(diff, k); it; ++it)
                    if (std::abs(it.value()) > tol) return false;
            return true;
        }
        default: return (dense_ - dense_.adjoint()).cwiseAbs().maxCoeff() <= tol;
    }
}

std::vector<double> LindbladRhs::resolve_rates(std::size_t n_jumps,
                                               const std::vector<double>& rates) {
    std::vector<double> out = rates.empty() ? std::vector<double>(n_jumps, 1.0) : rates;
    if (out.size() != n_jumps)
        throw InvalidArgument("rates length does not match the number of jump operators");
    for (double r : out)
        if (r < 0.0) throw InvalidArgument("jump rates must be non-negative");
    return out;
}

LindbladRhs::LindbladRhs(const Operator& H, const std::vector<Operator>& jump_ops,
                         const std::vector<Operator>& jump_ops_dagger,
                         const std::vector<double>& rates, Eigen::Index dim)
    : h_(H), rates_(resolve_rates(jump_ops.size(), rates)) {
    if (!jump_ops_dagger.empty() && jump_ops_dagger.size() != jump_ops.size())
        throw InvalidArgument("jump operator adjoint count does not match jump operator count");
    h_hermitian_ = h_.hermitian();
    jumps_.reserve(jump_ops.size());
    for (std::size_t i = 0; i < jump_ops.size(); ++i) {
        jumps_.emplace_back(jump_ops[i]);
        if (jump_ops_dagger.empty())
            jumps_dag_.push_back(jumps_.back().adjoint());
        else
            jumps_dag_.emplace_back(jump_ops_dagger[i]);
        jdag_j_.push_back(jumps_dag_.back().times(jumps_.back()));
    }
    work1_.resize(dim, dim);
    work2_.resize(dim, dim);
}

void LindbladRhs::operator()(const Eigen::Ref<const CMatrix>& rho, Eigen::Ref<CMatrix> drho) {
    const Complex minus_i(0.0, -1.0);
    h_.mul_left(rho, work1_);  // H rho
    if (h_hermitian_) {
        drho = minus_i * (work1_ - work1_.adjoint());
    } else {
        h_.mul_right(rho, work2_);
        drho = minus_i * (work1_ - work2_);
    }
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
        const double r = rates_[i];
        if (r == 0.0) continue;
        jumps_[i].mul_left(rho, work1_);        // A = J rho, reused below
        jumps_dag_[i].mul_right(work1_, work2_);
        drho += r * work2_;                     // J rho Jdag
        jumps_dag_[i].mul_left(work1_, work2_);
        drho -= (0.5 * r) * work2_;             // Jdag J rho
        jdag_j_[i].mul_right(rho, work2_);
        drho -= (0.5 * r) * work2_;             // rho Jdag J
    }
}

}  // namespace detail

namespace {

void check_generator_bases(const Operator& H, const std::vector<Operator>& jump_ops,
                           const Basis& b) {
    auto check = [&b](const Operator& op, const char* what) {
        if (op.basis_left() != op.basis_right() || op.basis_right() != b)
            throw BasisIncompatible(std::string(what) + " bases (" + op.basis_left().str() + ", " +
                                    op.basis_right().str() + ") must be square on the state basis (" +
                                    b.str() + ")");
    };
    check(H, "hamiltonian");
    for (const auto& j : jump_ops) check(j, "jump operator");
}

DensityEvolution run_master(const std::vector<double>& times, const DensityOperator& rho0,
                            const DormandPrince54::Rhs& rhs, const IntegratorConfig& cfg) {
    const Eigen::Index dim = rho0.dimension();
    DensityEvolution result;
    result.times = times;
    result.states.reserve(times.size());

    const CVector y0 = Eigen::Map<const CVector>(rho0.matrix().data(), dim * dim);
    integrate_adaptive(rhs, y0, times, cfg, [&](std::size_t, double, const CVector& y) {
        const Eigen::Map<const CMatrix> m(y.data(), dim, dim);
        result.states.push_back(DensityOperator::unchecked(rho0.basis(), m));
    });
    return result;
}

}  // namespace

DensityEvolution master(const std::vector<double>& times, const DensityOperator& rho0,
                        const Operator& H, const std::vector<Operator>& jump_ops,
                        const std::vector<double>& rates, const IntegratorConfig& cfg) {
    check_generator_bases(H, jump_ops, rho0.basis());
    const Eigen::Index dim = rho0.dimension();
    detail::LindbladRhs lindblad(H, jump_ops, {}, rates, dim);

    const auto rhs = [&lindblad, dim](double, const CVector& y, CVector& dy) {
        const Eigen::Map<const CMatrix> rho(y.data(), dim, dim);
        Eigen::Map<CMatrix> drho(dy.data(), dim, dim);
        lindblad(rho, drho);
    };
    return run_master(times, rho0, rhs, cfg);
}

DensityEvolution master(const std::vector<double>& times, const StateVector& psi0,
                        const Operator& H, const std::vector<Operator>& jump_ops,
                        const std::vector<double>& rates, const IntegratorConfig& cfg) {
    return master(times, DensityOperator::from_ket(psi0), H, jump_ops, rates, cfg);
}

DensityEvolution master_dynamic(const std::vector<double>& times, const DensityOperator& rho0,
                                const MasterFn& generator, const std::vector<double>& rates,
                                const IntegratorConfig& cfg) {
    const Eigen::Index dim = rho0.dimension();
    const Basis basis = rho0.basis();

    const auto rhs = [&generator, &rates, dim, basis](double t, const CVector& y, CVector& dy) {
        const Eigen::Map<const CMatrix> rho_map(y.data(), dim, dim);
        const DensityOperator rho = DensityOperator::unchecked(basis, rho_map);
        const LindbladGenerator gen = generator(t, rho);
        check_generator_bases(gen.hamiltonian, gen.jump_ops, basis);
        const std::vector<double>& r = gen.rates.has_value() ? *gen.rates : rates;
        detail::LindbladRhs lindblad(gen.hamiltonian, gen.jump_ops, gen.jump_ops_dagger, r, dim);
        Eigen::Map<CMatrix> drho(dy.data(), dim, dim);
        lindblad(rho.matrix(), drho);
    };
    return run_master(times, rho0, rhs, cfg);
}

DensityEvolution master_dynamic(const std::vector<double>& times, const StateVector& psi0,
                                const MasterFn& generator, const std::vector<double>& rates,
                                const IntegratorConfig& cfg) {
    return master_dynamic(times, DensityOperator::from_ket(psi0), generator, rates, cfg);
}

}  // namespace qsim
