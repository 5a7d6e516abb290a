// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace qsim::cli {

/// Column-oriented numeric results ready for CSV or SVG output.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;  // each row matches header length
};

/// Write UTF-8, comma-separated, LF-terminated CSV with a header row.
/// Values are printed with 17 significant digits so parsing the file
/// recovers every double bit-exactly.
void write_csv(const Table& table, const std::string& path);

/// Parse a CSV produced by write_csv (used by tests for round trips).
Table read_csv(const std::string& path);

/// Line plot of columns 1.. against column 0.
void write_svg_lines(const Table& table, const std::string& title, const std::string& path);

/// Heat map of columns 1.. (cells) over column 0 (time axis).
void write_svg_heatmap(const Table& table, const std::string& title, const std::string& path);

}  // namespace qsim::cli
