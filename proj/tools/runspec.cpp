// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "runspec.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "models.hpp"
#include "qsim/errors.hpp"

namespace qsim::cli {

namespace {

constexpr double kComputed = std::numeric_limits<double>::quiet_NaN();

const std::vector<ParamSpec> kJcParams = {
    {"g", 1.0, "atom-cavity coupling strength"},
    {"delta", -0.1, "cavity-atom detuning"},
    {"alpha", 4.0, "initial coherent-state amplitude of the cavity"},
    {"cutoff", 40, "Fock-space cutoff (dimension cutoff+1)"},
    {"t-end", 35.0, "final time"},
    {"dt", 0.01, "output sampling step"},
};

std::vector<ParamSpec> with_damping(std::vector<ParamSpec> base) {
    base.push_back({"kappa", 0.01, "cavity field decay rate"});
    base.push_back({"gamma", 0.01, "atomic spontaneous emission rate"});
    base.push_back({"n-th", 0.75, "mean thermal photon number of the bath"});
    return base;
}

const std::vector<ParamSpec> kJcLossyParams = with_damping(kJcParams);

const std::vector<ParamSpec> kGpeParams = {
    {"x-min", -10.0, "left edge of the position grid"},
    {"x-max", 10.0, "right edge of the position grid (excluded)"},
    {"n-points", 300, "number of grid points"},
    {"m", 1.0, "particle mass"},
    {"x0", 2.0 * M_PI, "initial packet displacement (packets start at -x0 and +x0)"},
    {"p0", 2.0, "initial packet momentum (counter-propagating)"},
    {"sigma", 1.5, "packet position-space standard deviation"},
    {"g", -3.33, "interaction strength (negative = attractive)"},
    {"packets", 2, "number of initial wave packets (1 or 2)"},
    {"t-end", 6.0, "final time"},
    {"dt", 0.01, "output sampling step"},
};

const std::vector<ParamSpec> kCoolingParams = {
    {"kappa", 1.0, "cavity field decay rate"},
    {"eta", 1.0, "pump amplitude"},
    {"g", 0.5, "atom-cavity coupling strength"},
    {"gamma", 2.0, "atomic spontaneous emission rate"},
    {"delta-c", 0.0, "pump-cavity detuning"},
    {"delta-a", -1.0, "pump-atom detuning"},
    {"m", 3.33, "atomic mass"},
    {"k", 1.0, "cavity mode wavenumber"},
    {"x0", -2.0 * M_PI, "initial atomic position"},
    {"p0", kComputed, "initial atomic momentum (default 2*m)"},
    {"cutoff", 16, "Fock-space cutoff"},
    {"t-end", 100.0, "final time"},
    {"dt", 0.1, "output sampling step"},
};

const std::vector<ParamSpec> kBenchParams = {};

const std::vector<std::string> kModels = {"jc",  "jc-lossy", "jc-mcwf", "jc-timedep",
                                          "gpe", "cooling",  "bench"};

}  // namespace

const std::vector<std::string>& model_names() { return kModels; }

const std::vector<ParamSpec>& model_params(const std::string& model) {
    if (model == "jc") return kJcParams;
    if (model == "jc-lossy" || model == "jc-mcwf" || model == "jc-timedep") return kJcLossyParams;
    if (model == "gpe") return kGpeParams;
    if (model == "cooling") return kCoolingParams;
    if (model == "bench") return kBenchParams;
    throw InvalidArgument("unknown model: " + model);
}

std::map<std::string, double> resolve_params(const RunSpec& spec) {
    const auto& schema = model_params(spec.model);
    std::map<std::string, double> resolved;
    for (const auto& p : schema) resolved[p.name] = p.default_value;
    for (const auto& [name, value] : spec.params) {
        const auto it = resolved.find(name);
        if (it == resolved.end())
            throw InvalidArgument("unknown parameter '" + name + "' for model " + spec.model);
        it->second = value;
    }
    return resolved;
}

int run(const RunSpec& spec) {
    try {
        const std::string extension = spec.format == OutputFormat::Csv ? ".csv" : ".svg";
        const std::string path =
            spec.out_path.empty() ? spec.model + extension : spec.out_path;

        if (spec.model == "bench") {
            if (spec.format == OutputFormat::Svg)
                throw InvalidArgument("the bench report is CSV only");
            write_bench_csv(run_bench(spec), path);
            return 0;
        }

        const auto params = resolve_params(spec);
        const ModelOutput output = run_model(spec, params);
        if (spec.format == OutputFormat::Csv) {
            write_csv(output.table, path);
        } else if (output.plot == PlotKind::Heatmap) {
            write_svg_heatmap(output.table, output.title, path);
        } else {
            write_svg_lines(output.table, output.title, path);
        }
        return 0;
    } catch (const IntegrationFailure& e) {
        std::cerr << "integration failure: " << e.what()
                  << " (last good time: " << e.last_good_time() << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qsim::cli
