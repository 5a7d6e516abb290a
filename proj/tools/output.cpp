// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qsim::cli {

namespace {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double span() const { return hi > lo ? hi - lo : 1.0; }
};

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

// Piecewise-linear dark-blue -> green -> yellow color ramp.
std::string ramp(double v) {
    v = std::clamp(v, 0.0, 1.0);
    const double stops[5][3] = {{68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98},
                                {253, 231, 37}};
    const double pos = v * 4.0;
    const int k = std::min(3, int(pos));
    const double f = pos - k;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  int(stops[k][0] + f * (stops[k + 1][0] - stops[k][0])),
                  int(stops[k][1] + f * (stops[k + 1][1] - stops[k][1])),
                  int(stops[k][2] + f * (stops[k + 1][2] - stops[k][2])));
    return buf;
}

}  // namespace

void write_csv(const Table& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c > 0) out << ',';
        out << table.header[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << ',';
            out << format_value(row[c]);
        }
        out << '\n';
    }
}

Table read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    Table table;
    std::string line;
    if (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) table.header.push_back(cell);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_svg_lines(const Table& table, const std::string& title, const std::string& path) {
    const int width = 860;
    const int height = 500;
    const int ml = 70, mr = 20, mt = 40, mb = 50;

    Range xr, yr;
    for (const auto& row : table.rows) {
        xr.include(row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) yr.include(row[c]);
    }

    auto px = [&](double x) { return ml + (x - xr.lo) / xr.span() * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (y - yr.lo) / yr.span() * (height - mt - mb); };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
        << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << width / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
        << "</text>\n";
    out << "<line x1='" << ml << "' y1='" << height - mb << "' x2='" << width - mr << "' y2='"
        << height - mb << "' stroke='black'/>\n";
    out << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << height - mb
        << "' stroke='black'/>\n";
    for (int tick = 0; tick <= 4; ++tick) {
        const double xv = xr.lo + xr.span() * tick / 4.0;
        const double yv = yr.lo + yr.span() * tick / 4.0;
        out << "<text x='" << px(xv) << "' y='" << height - mb + 18
            << "' text-anchor='middle' font-size='11'>" << format_value(xv).substr(0, 8)
            << "</text>\n";
        out << "<text x='" << ml - 6 << "' y='" << py(yv) + 4
            << "' text-anchor='end' font-size='11'>" << format_value(yv).substr(0, 8)
            << "</text>\n";
    }
    for (std::size_t c = 1; c < table.header.size(); ++c) {
        out << "<polyline fill='none' stroke='" << kPalette[(c - 1) % 6]
            << "' stroke-width='1.2' points='";
        for (const auto& row : table.rows) out << px(row[0]) << ',' << py(row[c]) << ' ';
        out << "'/>\n";
        out << "<text x='" << width - mr - 140 << "' y='" << mt + 16 * c << "' fill='"
            << kPalette[(c - 1) % 6] << "' font-size='12'>" << table.header[c] << "</text>\n";
    }
    out << "</svg>\n";
}

void write_svg_heatmap(const Table& table, const std::string& title, const std::string& path) {
    const int width = 860;
    const int height = 520;
    const int ml = 70, mr = 20, mt = 40, mb = 50;

    const std::size_t n_rows = table.rows.size();
    const std::size_t n_cells = table.header.size() - 1;
    // Subsample to keep the file size reasonable.
    const std::size_t max_cols = 200, max_rows = 200;
    const std::size_t step_t = std::max<std::size_t>(1, n_rows / max_cols);
    const std::size_t step_c = std::max<std::size_t>(1, n_cells / max_rows);

    double peak = 0.0;
    for (const auto& row : table.rows)
        for (std::size_t c = 1; c < row.size(); ++c) peak = std::max(peak, row[c]);
    if (peak <= 0.0) peak = 1.0;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
        << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << width / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
        << "</text>\n";

    const double cell_w = double(width - ml - mr) / std::ceil(double(n_rows) / step_t);
    const double cell_h = double(height - mt - mb) / std::ceil(double(n_cells) / step_c);
    std::size_t col = 0;
    for (std::size_t r = 0; r < n_rows; r += step_t, ++col) {
        std::size_t cell = 0;
        for (std::size_t c = 1; c < table.rows[r].size(); c += step_c, ++cell) {
            out << "<rect x='" << ml + col * cell_w << "' y='"
                << height - mb - (cell + 1) * cell_h << "' width='" << cell_w + 0.5
                << "' height='" << cell_h + 0.5 << "' fill='" << ramp(table.rows[r][c] / peak)
                << "'/>\n";
        }
    }
    out << "<text x='" << width / 2 << "' y='" << height - 14
        << "' text-anchor='middle' font-size='12'>t: " << format_value(table.rows.front()[0])
        << " to " << format_value(table.rows.back()[0]) << "</text>\n";
    out << "</svg>\n";
}

}  // namespace qsim::cli
