// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>
#include <cmath>
#include <string>

#include "runspec.hpp"

using qsim::cli::model_params;
using qsim::cli::OutputFormat;
using qsim::cli::RunSpec;

int main(int argc, char** argv) {
    CLI::App app{
        "qsim: open quantum system simulator.\n"
        "Each model ships a frozen default parameter set (shown per option) so the\n"
        "bundled reference runs can be reproduced with no arguments."};
    app.require_subcommand(1);

    RunSpec spec;
    std::string format = "csv";

    for (const auto& model : qsim::cli::model_names()) {
        const char* description =
            model == "jc"           ? "closed cavity-atom model (collapse and revival)"
            : model == "jc-lossy"   ? "cavity-atom model with damping (master equation)"
            : model == "jc-mcwf"    ? "single quantum trajectory vs master equation"
            : model == "jc-timedep" ? "rotating-frame time-dependent coupling"
            : model == "gpe"        ? "nonlinear wave-packet collision on a grid"
            : model == "cooling"    ? "semiclassical cavity cooling of a moving atom"
                                    : "dense-vs-sparse representation timings";
        auto* sub = app.add_subcommand(model, description);

        for (const auto& p : model_params(model)) {
            auto* opt = sub->add_option_function<double>(
                "--" + std::string(p.name),
                [&spec, name = std::string(p.name)](double v) { spec.params[name] = v; }, p.help);
            if (!std::isnan(p.default_value)) opt->default_val(p.default_value);
        }

        sub->add_option("--out", spec.out_path, "output path (default <model>.<format>)");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "svg"}));
        sub->add_option("--rel-tol", spec.integrator.rel_tol, "integrator relative tolerance")
            ->capture_default_str();
        sub->add_option("--abs-tol", spec.integrator.abs_tol, "integrator absolute tolerance")
            ->capture_default_str();
        if (model == "jc-mcwf") {
            sub->add_option("--seed", spec.seed, "random seed of the trajectory")
                ->capture_default_str();
            sub->add_option("--ntraj", spec.ntraj, "average this many trajectories")
                ->capture_default_str();
            sub->add_option("--threads", spec.threads, "trajectory worker threads (0 = auto)");
        }
        if (model == "bench") {
            sub->add_option("--cases", spec.bench_cases,
                            "subset of {cavity-decay, jc-master, particle-master}")
                ->delimiter(',');
            sub->add_option("--reps", spec.bench_reps, "repetitions per measurement")
                ->capture_default_str();
            sub->add_option("--dims", spec.bench_dims, "Hilbert-space dimensions to sweep")
                ->delimiter(',');
        }
        sub->callback([&spec, model] { spec.model = model; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    spec.format = format == "svg" ? OutputFormat::Svg : OutputFormat::Csv;
    return qsim::cli::run(spec);
}
