// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "models.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>
#include <stdexcept>

#include "qsim/qsim.hpp"

namespace qsim::cli {

namespace {

std::vector<double> time_grid(double t_end, double dt) {
    if (!(t_end > 0.0) || !(dt > 0.0)) throw InvalidArgument("t-end and dt must be positive");
    std::vector<double> t;
    t.reserve(std::size_t(t_end / dt) + 2);
    for (long k = 0;; ++k) {
        const double x = k * dt;
        if (x > t_end + 1e-12) break;
        t.push_back(x);
    }
    return t;
}

struct JaynesCummingsSetup {
    Basis bc, ba;
    Operator a, sm, excitation, hamiltonian;
    StateVector psi0;

    JaynesCummingsSetup(const std::map<std::string, double>& p)
        : bc(fock_basis(int(p.at("cutoff")))),
          ba(spin_basis(0.5)),
          a(tensor(destroy(bc), identity(ba))),
          sm(tensor(identity(bc), sigmam(ba))),
          excitation(dagger(sm) * sm),
          hamiltonian(Complex(p.at("delta")) * (dagger(a) * a) +
                      Complex(p.at("g")) * (dagger(a) * sm + a * dagger(sm))),
          psi0(tensor(coherent_state(bc, p.at("alpha")), spin_down(ba))) {}

    std::vector<Operator> jumps() const { return {a, dagger(a), sm}; }
    std::vector<double> rates(const std::map<std::string, double>& p) const {
        const double kappa = p.at("kappa");
        const double n_th = p.at("n-th");
        return {(n_th + 1.0) * kappa, n_th * kappa, p.at("gamma")};
    }
};

ModelOutput run_jc(const RunSpec& spec, const std::map<std::string, double>& p) {
    const JaynesCummingsSetup m(p);
    const auto times = time_grid(p.at("t-end"), p.at("dt"));
    const auto result = schroedinger(times, m.psi0, m.hamiltonian, spec.integrator);

    ModelOutput out;
    out.title = "Atomic excitation, closed cavity-atom model";
    out.table.header = {"t", "excitation"};
    for (std::size_t i = 0; i < times.size(); ++i)
        out.table.rows.push_back({times[i], expect(m.excitation, result.states[i]).real()});
    return out;
}

ModelOutput run_jc_lossy(const RunSpec& spec, const std::map<std::string, double>& p) {
    const JaynesCummingsSetup m(p);
    const auto times = time_grid(p.at("t-end"), p.at("dt"));
    const auto result =
        master(times, m.psi0, m.hamiltonian, m.jumps(), m.rates(p), spec.integrator);

    ModelOutput out;
    out.title = "Atomic excitation with cavity and atomic damping";
    out.table.header = {"t", "excitation"};
    for (std::size_t i = 0; i < times.size(); ++i)
        out.table.rows.push_back({times[i], expect(m.excitation, result.states[i]).real()});
    return out;
}

ModelOutput run_jc_mcwf(const RunSpec& spec, const std::map<std::string, double>& p) {
    const JaynesCummingsSetup m(p);
    const auto times = time_grid(p.at("t-end"), p.at("dt"));

    std::vector<double> trajectory(times.size());
    if (spec.ntraj <= 1) {
        const auto traj = mcwf(times, m.psi0, m.hamiltonian, m.jumps(), m.rates(p), spec.seed,
                               spec.integrator);
        for (std::size_t i = 0; i < times.size(); ++i)
            trajectory[i] = expect(m.excitation, traj.states[i]).real();
    } else {
        const auto ens =
            mcwf_ensemble_expect(times, m.psi0, m.hamiltonian, m.jumps(), m.rates(p), spec.ntraj,
                                 spec.seed, {m.excitation}, spec.integrator, spec.threads);
        for (std::size_t i = 0; i < times.size(); ++i) trajectory[i] = ens.mean(0, i).real();
    }

    const auto rho_t =
        master(times, m.psi0, m.hamiltonian, m.jumps(), m.rates(p), spec.integrator);

    ModelOutput out;
    out.title = "Quantum trajectory vs master equation";
    out.table.header = {"t", "excitation_trajectory", "excitation_master"};
    for (std::size_t i = 0; i < times.size(); ++i)
        out.table.rows.push_back(
            {times[i], trajectory[i], expect(m.excitation, rho_t.states[i]).real()});
    return out;
}

ModelOutput run_jc_timedep(const RunSpec& spec, const std::map<std::string, double>& p) {
    const JaynesCummingsSetup m(p);
    const double delta = p.at("delta");
    const double g = p.at("g");
    const auto times = time_grid(p.at("t-end"), p.at("dt"));

    // Frame rotating at the detuning: the coupling picks up exp(+/- i delta t).
    const Operator h1 = Complex(g) * (dagger(m.a) * m.sm);
    const Operator h2 = dagger(h1);
    const std::vector<Operator> jumps = m.jumps();
    std::vector<Operator> jumps_dag;
    for (const auto& j : jumps) jumps_dag.push_back(dagger(j));
    const std::vector<double> rates = m.rates(p);

    const auto generator = [&](double t, const DensityOperator&) {
        return LindbladGenerator{std::exp(Complex(0.0, delta * t)) * h1 +
                                     std::exp(Complex(0.0, -delta * t)) * h2,
                                 jumps, jumps_dag, rates};
    };
    const auto result = master_dynamic(times, m.psi0, generator, {}, spec.integrator);

    ModelOutput out;
    out.title = "Atomic excitation, rotating-frame time-dependent coupling";
    out.table.header = {"t", "excitation"};
    for (std::size_t i = 0; i < times.size(); ++i)
        out.table.rows.push_back({times[i], expect(m.excitation, result.states[i]).real()});
    return out;
}

ModelOutput run_gpe(const RunSpec& spec, const std::map<std::string, double>& p) {
    const int n = int(p.at("n-points"));
    const Basis bx = position_basis(p.at("x-min"), p.at("x-max"), n);
    const Basis bp = momentum_basis_from(bx);
    const double dx = grid_spacing(bx);
    const double mass = p.at("m");
    const double g = p.at("g");
    const double x0 = p.at("x0");
    const double p0 = p.at("p0");
    const double sigma = p.at("sigma");
    const int packets = int(p.at("packets"));

    auto to_x = std::make_shared<Operator>(transform(bx, bp));
    auto to_p = std::make_shared<Operator>(transform(bp, bx));
    auto kinetic_p = std::make_shared<Operator>((momentum(bp) * momentum(bp)) / Complex(2.0 * mass));
    auto h_kin = std::make_shared<Operator>(
        lazy_product(std::vector<std::shared_ptr<Operator>>{to_x, kinetic_p, to_p}));
    auto h_psi = std::make_shared<Operator>(diagonal_operator(bx, CVector::Zero(n)));
    const Operator h0 = lazy_sum(std::vector<std::shared_ptr<Operator>>{h_kin, h_psi});

    StateVector psi0 = gaussian_state(bx, -x0, p0, sigma);
    if (packets == 2) {
        psi0 = normalize(psi0 + gaussian_state(bx, x0, -p0, sigma));
    } else if (packets != 1) {
        throw InvalidArgument("packets must be 1 or 2");
    }

    const auto hamiltonian = [&](double, const StateVector& psi) {
        h_psi->diagonal_values() = (g / dx) * psi.amplitudes().cwiseAbs2().cast<Complex>();
        return h0;
    };

    const auto times = time_grid(p.at("t-end"), p.at("dt"));
    const auto result = schroedinger_dynamic(times, psi0, hamiltonian, spec.integrator);

    ModelOutput out;
    out.plot = PlotKind::Heatmap;
    out.title = "Wave-packet density |psi|^2 over position and time";
    out.table.header.push_back("t");
    for (int j = 0; j < n; ++j) out.table.header.push_back("density_" + std::to_string(j));
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::vector<double> row(1 + n);
        row[0] = times[i];
        for (int j = 0; j < n; ++j) row[1 + j] = std::norm(result.states[i].amplitudes()(j));
        out.table.rows.push_back(std::move(row));
    }
    return out;
}

ModelOutput run_cooling(const RunSpec& spec, const std::map<std::string, double>& p) {
    const Basis bc = fock_basis(int(p.at("cutoff")));
    const Basis ba = spin_basis(0.5);
    const Operator a = tensor(destroy(bc), identity(ba));
    const Operator sm = tensor(identity(bc), sigmam(ba));
    const double kappa = p.at("kappa"), eta = p.at("eta"), g = p.at("g"), gamma = p.at("gamma");
    const double delta_c = p.at("delta-c"), delta_a = p.at("delta-a");
    const double mass = p.at("m"), wavenumber = p.at("k");
    const double x0 = p.at("x0");
    const double p0 = std::isnan(p.at("p0")) ? 2.0 * mass : p.at("p0");

    const Operator h_cavity = Complex(-delta_c) * (dagger(a) * a) + Complex(eta) * (a + dagger(a));
    const Operator h_atom = Complex(-delta_a) * (dagger(sm) * sm);
    const Operator h0 = h_cavity + h_atom;
    const Operator h_coupling = Complex(g) * (a * dagger(sm) + dagger(a) * sm);  // ~ cos(k x)

    const std::vector<Operator> jumps{a, sm};
    const std::vector<Operator> jumps_dag{dagger(a), dagger(sm)};
    const std::vector<double> rates{kappa, gamma};
    const Operator photon_number = dagger(a) * a;
    const Operator adag_sm = dagger(a) * sm;

    const auto f_q = [&](double, const DensityOperator&, const CVector& u) {
        const double x = u(0).real();
        return LindbladGenerator{h0 + Complex(std::cos(wavenumber * x)) * h_coupling, jumps,
                                 jumps_dag, rates};
    };
    const auto f_cl = [&](double, const DensityOperator& rho, const CVector& u,
                          Eigen::Ref<CVector> du) {
        const double x = u(0).real();
        du(0) = u(1).real() / mass;
        du(1) = 2.0 * g * wavenumber * std::sin(wavenumber * x) * expect(adag_sm, rho).real();
    };

    CVector u0(2);
    u0 << Complex(x0), Complex(p0);
    const SemiclassicalState initial(tensor(fock_state(bc, 0), spin_down(ba)), u0);

    const auto times = time_grid(p.at("t-end"), p.at("dt"));
    const auto result = sc_master_dynamic(times, initial, f_q, f_cl, spec.integrator);

    ModelOutput out;
    out.title = "Cavity cooling: position, momentum, photon number, kinetic energy";
    out.table.header = {"t", "x", "p", "n", "Ekin"};
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double x = result.states[i].classical()(0).real();
        const double mom = result.states[i].classical()(1).real();
        const double n_phot = expect(photon_number, result.states[i].density()).real();
        out.table.rows.push_back({times[i], x, mom, n_phot, mom * mom / (2.0 * mass)});
    }
    return out;
}

}  // namespace

ModelOutput run_model(const RunSpec& spec, const std::map<std::string, double>& params) {
    if (spec.model == "jc") return run_jc(spec, params);
    if (spec.model == "jc-lossy") return run_jc_lossy(spec, params);
    if (spec.model == "jc-mcwf") return run_jc_mcwf(spec, params);
    if (spec.model == "jc-timedep") return run_jc_timedep(spec, params);
    if (spec.model == "gpe") return run_gpe(spec, params);
    if (spec.model == "cooling") return run_cooling(spec, params);
    throw InvalidArgument("unknown model: " + spec.model);
}

// --- benchmark harness -------------------------------------------------------

namespace {

struct BenchSystem {
    Operator hamiltonian;
    std::vector<Operator> jumps;
    std::vector<double> rates;
    DensityOperator rho0;
};

BenchSystem bench_cavity(int dim) {
    const Basis b = fock_basis(dim - 1);
    return {Complex(0.5) * (create(b) * destroy(b)) + Complex(1.0) * (destroy(b) + create(b)),
            {destroy(b)},
            {1.0},
            DensityOperator::from_ket(fock_state(b, 0))};
}

BenchSystem bench_jc(int dim) {
    const Basis bc = fock_basis(dim / 2 - 1);
    const Basis ba = spin_basis(0.5);
    const Operator a = tensor(destroy(bc), identity(ba));
    const Operator sm = tensor(identity(bc), sigmam(ba));
    return {Complex(-0.1) * (dagger(a) * a) + dagger(a) * sm + a * dagger(sm),
            {a, sm},
            {0.1, 0.05},
            DensityOperator::from_ket(
                normalize(tensor(coherent_state(bc, 1.0), spin_down(ba))))};
}

BenchSystem bench_particle(int dim) {
    const Basis bx = position_basis(-6.0, 6.0, dim);
    const Operator x = position(bx);
    const Operator px = momentum(bx);  // dense
    const Operator h = (px * px) / Complex(2.0) + Complex(0.5) * (x * x);
    // Harmonic-oscillator lowering operator, dense in the position representation.
    const Operator lower = (x + Complex(0.0, 1.0) * px) / Complex(std::sqrt(2.0));
    return {h, {lower}, {0.5}, DensityOperator::from_ket(gaussian_state(bx, 0.5, 0.0, 1.0))};
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

}  // namespace

std::vector<BenchRow> run_bench(const RunSpec& spec) {
    std::vector<std::string> cases = spec.bench_cases;
    if (cases.empty()) cases = {"cavity-decay", "jc-master", "particle-master"};
    std::vector<int> dims = spec.bench_dims;
    if (dims.empty()) dims = {16, 32, 64, 128};
    const int reps = std::max(1, spec.bench_reps);

    const auto times = time_grid(1.0, 0.1);
    std::vector<BenchRow> report;
    for (const auto& name : cases) {
        for (int dim : dims) {
            BenchSystem sys = [&] {
                if (name == "cavity-decay") return bench_cavity(dim);
                if (name == "jc-master") return bench_jc(dim);
                if (name == "particle-master") return bench_particle(dim);
                throw InvalidArgument("unknown bench case: " + name);
            }();

            for (const char* repr : {"sparse", "dense"}) {
                const bool dense = std::string(repr) == "dense";
                const Operator h =
                    dense ? as_dense_operator(sys.hamiltonian) : as_sparse_operator(sys.hamiltonian);
                std::vector<Operator> jumps;
                for (const auto& j : sys.jumps)
                    jumps.push_back(dense ? as_dense_operator(j) : as_sparse_operator(j));

                std::vector<double> samples;
                for (int rep = 0; rep < reps; ++rep) {
                    const auto start = std::chrono::steady_clock::now();
                    const auto result =
                        master(times, sys.rho0, h, jumps, sys.rates, spec.integrator);
                    const auto stop = std::chrono::steady_clock::now();
                    if (result.states.size() != times.size())
                        throw Error("benchmark run produced a short result");
                    samples.push_back(std::chrono::duration<double>(stop - start).count());
                }
                report.push_back({name, repr, dim, median(samples), reps});
            }
        }
    }
    return report;
}

void write_bench_csv(const std::vector<BenchRow>& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "case,representation,dimension,median_seconds,reps\n";
    char buf[32];
    for (const auto& row : report) {
        std::snprintf(buf, sizeof(buf), "%.17g", row.median_seconds);
        out << row.case_name << ',' << row.representation << ',' << row.dimension << ',' << buf
            << ',' << row.reps << '\n';
    }
}

}  // namespace qsim::cli
