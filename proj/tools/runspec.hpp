// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsim/integrator.hpp"

namespace qsim::cli {

enum class OutputFormat { Csv, Svg };

/// One CLI invocation: a model, its parameter overrides, and output options.
struct RunSpec {
    std::string model;
    std::map<std::string, double> params;  // overrides; defaults fill the rest
    std::string out_path;                  // empty = "<model>.<format>"
    OutputFormat format = OutputFormat::Csv;
    IntegratorConfig integrator;
    std::uint64_t seed = 2;
    int ntraj = 1;
    int threads = 0;  // 0 = hardware concurrency

    // bench-only knobs
    std::vector<std::string> bench_cases;
    int bench_reps = 3;
    std::vector<int> bench_dims;
};

struct ParamSpec {
    const char* name;
    double default_value;  // NaN = computed from other parameters
    const char* help;
};

/// The models exposed as subcommands, in presentation order.
const std::vector<std::string>& model_names();

/// Frozen default parameter set of a model (throws on unknown models).
const std::vector<ParamSpec>& model_params(const std::string& model);

/// Defaults merged with overrides; rejects unknown parameter names.
std::map<std::string, double> resolve_params(const RunSpec& spec);

/// Execute the run end to end and write the output file.
/// Returns the process exit code: 0 ok, 2 bad arguments, 3 integration failure.
int run(const RunSpec& spec);

}  // namespace qsim::cli
