#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ysim/csv.hpp"
#include "ysim/errors.hpp"
#include "ysim/impact.hpp"
#include "ysim/regression.hpp"

namespace ysim {

// Shortest representation that round-trips a double exactly.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// --- histogram files: bin_index,midpoint_log,count,ln_count_plus_1 ---------

inline void write_histogram_file(std::ostream& out, const log_binned_points& pts) {
    out << "bin_index,midpoint_log,count,ln_count_plus_1\n";
    for (std::size_t j = 0; j < pts.x.size(); ++j) {
        out << j << ',' << format_double(pts.y[j]) << ',' << pts.hist.counts[j] << ','
            << format_double(pts.x[j]) << '\n';
    }
}

// --- fit-line files: the fitted line evaluated at the two endpoints --------

inline void write_fit_line_file(std::ostream& out, const linear_fit_result& fit, double y_min,
                                double y_max) {
    out << "y,fitted_x\n";
    out << format_double(y_min) << ',' << format_double(fit.fitted_x(y_min)) << '\n';
    out << format_double(y_max) << ',' << format_double(fit.fitted_x(y_max)) << '\n';
}

// --- size-frequency files: size,count ---------------------------------------

inline void write_size_frequency_file(std::ostream& out,
                                      const std::map<std::uint64_t, std::uint64_t>& freq) {
    out << "size,count\n";
    for (const auto& [size, count] : freq) out << size << ',' << count << '\n';
}

// Overload for real-valued overlay curves (expected frequencies).
inline void write_size_frequency_file(std::ostream& out,
                                      const std::vector<std::pair<std::uint64_t, double>>& freq) {
    out << "size,count\n";
    for (const auto& [size, count] : freq) out << size << ',' << format_double(count) << '\n';
}

inline std::map<std::uint64_t, std::uint64_t> read_size_frequency_file(std::string_view text) {
    const auto records = csv::parse(text, ',');
    if (records.size() < 2) throw empty_input_error("size-frequency file has no data rows");
    std::map<std::uint64_t, std::uint64_t> freq;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() < 2)
            throw parse_error("size-frequency row needs two columns", rec.line);
        try {
            freq[std::stoull(rec.fields[0])] += std::stoull(rec.fields[1]);
        } catch (const std::exception&) {
            throw parse_error("size-frequency row is not numeric", rec.line);
        }
    }
    return freq;
}

// --- fit inputs -------------------------------------------------------------

struct xy_points {
    std::vector<double> x, y;
};

namespace detail {

inline double parse_double_cell(const std::string& cell, std::size_t line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(cell, &pos);
        while (pos < cell.size() && (cell[pos] == ' ' || cell[pos] == '\t')) ++pos;
        if (pos != cell.size()) throw std::invalid_argument(cell);
        return v;
    } catch (const std::exception&) {
        throw parse_error("value '" + cell + "' is not numeric", line);
    }
}

} // namespace detail

// Reads fit input: either a previously emitted histogram file (recognized by
// its header), in which case x is recomputed as ln(count+1) from the exact
// integer counts and y is the midpoint column, or a plain two-column (x, y)
// table with an optional header row.
inline xy_points read_fit_input(std::string_view text) {
    const auto records = csv::parse(text, ',');
    if (records.empty()) throw empty_input_error("fit input has no content");

    const auto& first = records.front().fields;
    bool histogram_layout = false;
    std::size_t col_mid = 0, col_count = 0;
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (first[i] == "midpoint_log") { col_mid = i; histogram_layout = true; }
    }
    if (histogram_layout) {
        bool have_count = false;
        for (std::size_t i = 0; i < first.size(); ++i)
            if (first[i] == "count") { col_count = i; have_count = true; }
        if (!have_count)
            throw parse_error("histogram header lacks a 'count' column", records.front().line);
    }

    xy_points pts;
    std::size_t start = 1;
    std::size_t cx = 0, cy = 1;
    if (histogram_layout) {
        cx = col_count;
        cy = col_mid;
    } else {
        // Header row is optional on plain (x, y) tables.
        bool numeric_first = true;
        if (first.size() < 2) numeric_first = false;
        if (numeric_first) {
            try {
                std::size_t pos = 0;
                std::stod(first[0], &pos);
                std::stod(first[1], &pos);
            } catch (const std::exception&) {
                numeric_first = false;
            }
        }
        if (numeric_first) start = 0;
        if (records.size() == start) throw empty_input_error("fit input has no data rows");
    }

    for (std::size_t r = start; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() <= std::max(cx, cy))
            throw parse_error("row has too few columns for a fit input", rec.line);
        const double xv = detail::parse_double_cell(rec.fields[cx], rec.line);
        const double yv = detail::parse_double_cell(rec.fields[cy], rec.line);
        if (histogram_layout) {
            if (xv < 0 || xv != std::floor(xv))
                throw parse_error("histogram count must be a non-negative integer", rec.line);
            pts.x.push_back(std::log1p(xv));
        } else {
            pts.x.push_back(xv);
        }
        pts.y.push_back(yv);
    }
    return pts;
}

// --- small filesystem helpers ----------------------------------------------

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

inline void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write file: " + path);
    out << text;
    if (!out) throw io_error("write failed: " + path);
}

} // namespace ysim
