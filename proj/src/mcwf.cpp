// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "qsim/mcwf.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <utility>

#include "qsim/errors.hpp"
#include "qsim/master.hpp"

namespace qsim {

namespace detail {
CVector apply_to_vector(const Operator& op, const CVector& x);
}

namespace {

constexpr double kJumpTimeRelTol = 1e-6;  // bisection width relative to the step length

struct TrajectoryContext {
    Operator h_nh;                  // H - (i/2) sum r_i Jdag J
    std::vector<Operator> jumps;    // shares payloads with the caller's operators
    std::vector<double> rates;
};

TrajectoryContext build_context(const StateVector& psi0, const Operator& H,
                                const std::vector<Operator>& jump_ops,
                                const std::vector<double>& rates) {
    if (!psi0.is_ket()) throw InvalidArgument("mcwf expects a ket initial state");
    auto check = [&psi0](const Operator& op, const char* what) {
        if (op.basis_left() != op.basis_right() || op.basis_right() != psi0.basis())
            throw BasisIncompatible(std::string(what) + " bases (" + op.basis_left().str() + ", " +
                                    op.basis_right().str() +
                                    ") must be square on the state basis (" + psi0.basis().str() +
                                    ")");
    };
    check(H, "hamiltonian");
    for (const auto& j : jump_ops) check(j, "jump operator");
    const std::vector<double> r = detail::LindbladRhs::resolve_rates(jump_ops.size(), rates);

    Operator h_nh = H;
    for (std::size_t i = 0; i < jump_ops.size(); ++i) {
        if (r[i] == 0.0) continue;
        h_nh = h_nh + Complex(0.0, -0.5 * r[i]) * (dagger(jump_ops[i]) * jump_ops[i]);
    }
    return {std::move(h_nh), jump_ops, r};
}

/// Locate the crossing of |psi(t)|^2 = threshold inside the last accepted step.
double bisect_jump_time(const DormandPrince54& stepper, double threshold, CVector& work) {
    double lo = stepper.t_begin();
    double hi = stepper.t_now();
    const double width_tol = kJumpTimeRelTol * (hi - lo);
    while (hi - lo > width_tol) {
        const double mid = 0.5 * (lo + hi);
        stepper.interpolate(mid, work);
        if (work.squaredNorm() > threshold)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

KetEvolution run_trajectory(const std::vector<double>& times, const StateVector& psi0,
                            const TrajectoryContext& ctx, std::uint64_t seed,
                            const IntegratorConfig& cfg) {
    if (times.size() < 2) throw InvalidArgument("need at least two output times");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw InvalidArgument("output times must be strictly increasing");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    KetEvolution result;
    result.times = times;
    result.states.reserve(times.size());
    const Basis& basis = psi0.basis();
    auto emit = [&](const CVector& y) {
        const double n = y.norm();
        if (n == 0.0) throw DegenerateState("mcwf sampled a zero state");
        result.states.emplace_back(StateKind::Ket, basis, y / n);
    };
    emit(psi0.amplitudes());

    const auto rhs = [&ctx](double, const CVector& y, CVector& dy) {
        dy = Complex(0.0, -1.0) * detail::apply_to_vector(ctx.h_nh, y);
    };

    DormandPrince54 stepper(rhs, cfg);
    stepper.start(times.front(), psi0.amplitudes(), times.back());

    double threshold = uniform(rng);
    std::size_t next = 1;
    CVector sample(psi0.amplitudes().size());
    CVector jumped;

    while (next < times.size()) {
        stepper.step();

        while (stepper.y_now().squaredNorm() < threshold) {
            const double t_jump = bisect_jump_time(stepper, threshold, sample);
            // Emit any overdue samples that precede the jump.
            while (next < times.size() && times[next] <= t_jump) {
                stepper.interpolate(times[next], sample);
                emit(sample);
                ++next;
            }
            stepper.interpolate(t_jump, sample);

            // Select the jump channel with probability r_i |J_i psi|^2 / total.
            std::vector<double> weights(ctx.jumps.size());
            std::vector<CVector> candidates(ctx.jumps.size());
            double total = 0.0;
            for (std::size_t i = 0; i < ctx.jumps.size(); ++i) {
                candidates[i] = detail::apply_to_vector(ctx.jumps[i], sample);
                weights[i] = ctx.rates[i] * candidates[i].squaredNorm();
                total += weights[i];
            }
            if (total <= 0.0)
                throw DegenerateJump("all jump channels have zero weight at t = " +
                                     std::to_string(t_jump));
            const double pick = uniform(rng) * total;
            double acc = 0.0;
            std::size_t channel = ctx.jumps.size() - 1;
            for (std::size_t i = 0; i < ctx.jumps.size(); ++i) {
                acc += weights[i];
                if (pick <= acc) {
                    channel = i;
                    break;
                }
            }
            jumped = candidates[channel] / candidates[channel].norm();

            threshold = uniform(rng);
            if (next >= times.size()) break;
            stepper.restart(t_jump, jumped);
            stepper.step();
        }

        while (next < times.size() && times[next] <= stepper.t_now()) {
            stepper.interpolate(times[next], sample);
            emit(sample);
            ++next;
        }
        if (stepper.finished() && next < times.size()) {
            while (next < times.size()) {
                stepper.interpolate(std::min(times[next], stepper.t_now()), sample);
                emit(sample);
                ++next;
            }
        }
    }
    return result;
}

int resolve_threads(int n_threads, int n_traj) {
    if (n_threads > 0) return std::min(n_threads, n_traj);
    const unsigned hw = std::thread::hardware_concurrency();
    return std::min<int>(n_traj, hw == 0 ? 1 : int(hw));
}

}  // namespace

KetEvolution mcwf(const std::vector<double>& times, const StateVector& psi0, const Operator& H,
                  const std::vector<Operator>& jump_ops, const std::vector<double>& rates,
                  std::uint64_t seed, const IntegratorConfig& cfg) {
    return run_trajectory(times, psi0, build_context(psi0, H, jump_ops, rates), seed, cfg);
}

EnsembleExpectation mcwf_ensemble_expect(const std::vector<double>& times,
                                         const StateVector& psi0, const Operator& H,
                                         const std::vector<Operator>& jump_ops,
                                         const std::vector<double>& rates, int n_traj,
                                         std::uint64_t base_seed,
                                         const std::vector<Operator>& observables,
                                         const IntegratorConfig& cfg, int n_threads) {
    if (n_traj < 1) throw InvalidArgument("ensemble requires n_traj >= 1");
    if (observables.empty()) throw InvalidArgument("ensemble requires at least one observable");
    const TrajectoryContext ctx = build_context(psi0, H, jump_ops, rates);

    const std::size_t n_obs = observables.size();
    const std::size_t n_times = times.size();
    // One expectation trace per trajectory, reduced in trajectory order below
    // so the result is independent of the execution schedule.
    std::vector<CMatrix> per_traj(n_traj);

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int k = next.fetch_add(1); k < n_traj; k = next.fetch_add(1)) {
            const KetEvolution traj =
                run_trajectory(times, psi0, ctx, base_seed + std::uint64_t(k), cfg);
            CMatrix vals(n_obs, n_times);
            for (std::size_t o = 0; o < n_obs; ++o)
                for (std::size_t s = 0; s < n_times; ++s)
                    vals(o, s) = expect(observables[o], traj.states[s]);
            per_traj[k] = std::move(vals);
        }
    };

    const int threads = resolve_threads(n_threads, n_traj);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    EnsembleExpectation out;
    out.times = times;
    out.n_trajectories = n_traj;
    out.mean = CMatrix::Zero(n_obs, n_times);
    for (int k = 0; k < n_traj; ++k) out.mean += per_traj[k];
    out.mean /= double(n_traj);

    out.std_error = Eigen::MatrixXd::Zero(n_obs, n_times);
    if (n_traj > 1) {
        for (int k = 0; k < n_traj; ++k)
            out.std_error += (per_traj[k] - out.mean).cwiseAbs2();
        out.std_error = (out.std_error / double(n_traj - 1) / double(n_traj)).cwiseSqrt();
    }
    return out;
}

std::vector<KetEvolution> mcwf_ensemble(const std::vector<double>& times, const StateVector& psi0,
                                        const Operator& H, const std::vector<Operator>& jump_ops,
                                        const std::vector<double>& rates, int n_traj,
                                        std::uint64_t base_seed, const IntegratorConfig& cfg,
                                        int n_threads) {
    if (n_traj < 1) throw InvalidArgument("ensemble requires n_traj >= 1");
    const TrajectoryContext ctx = build_context(psi0, H, jump_ops, rates);
    std::vector<KetEvolution> out(n_traj);

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int k = next.fetch_add(1); k < n_traj; k = next.fetch_add(1))
            out[k] = run_trajectory(times, psi0, ctx, base_seed + std::uint64_t(k), cfg);
    };
    const int threads = resolve_threads(n_threads, n_traj);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return out;
}

}  // namespace qsim
