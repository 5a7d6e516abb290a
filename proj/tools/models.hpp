// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "output.hpp"
#include "runspec.hpp"

namespace qsim::cli {

enum class PlotKind { Lines, Heatmap };

struct ModelOutput {
    Table table;
    PlotKind plot = PlotKind::Lines;
    std::string title;
};

/// Run one of the physics models with fully resolved parameters.
ModelOutput run_model(const RunSpec& spec, const std::map<std::string, double>& params);

/// One measurement of the dense/sparse representation micro-benchmark.
struct BenchRow {
    std::string case_name;
    std::string representation;
    int dimension = 0;
    double median_seconds = 0.0;
    int reps = 0;
};

std::vector<BenchRow> run_bench(const RunSpec& spec);
void write_bench_csv(const std::vector<BenchRow>& report, const std::string& path);

}  // namespace qsim::cli
