#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ysim/corpus.hpp"
#include "ysim/hindex.hpp"
#include "ysim/impact.hpp"
#include "ysim/regression.hpp"

namespace ysim {

struct analyze_options {
    int bins = 25;
    log_transform transform = log_transform::plus_one;
};

// One report row: the truncation summary plus the fit statistics.
struct analysis_row {
    std::string name;
    std::optional<int> award_year;
    std::int64_t h = 0;
    std::int64_t min_inlinks = 0;
    std::int64_t max_inlinks = 0;
    std::int64_t total_range = 0;
    std::int64_t total_inlinks = 0;
    std::int64_t n_works = 0;
    double r_squared = 0.0;
    double f_stat = 0.0;
    double p_value = 1.0;
    significance level = significance::none;
    double uncited_fraction = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
};

// Full per-profile result, including the artifacts the report emitter writes.
struct profile_analysis {
    analysis_row row;
    log_binned_points points;
    linear_fit_result fit;
};

inline profile_analysis analyze_profile(const researcher_profile& profile,
                                        const analyze_options& options = {}) {
    const auto counts = profile.inlink_counts();
    if (counts.empty()) throw empty_input_error("analyze_profile: profile has no works");

    profile_analysis result;
    const auto dist = truncate_top_h(counts);
    result.points = log_pipeline(dist, options.bins, options.transform);
    result.fit = ols_fit(result.points.x, result.points.y);
    const auto stats = summary_stats(counts);

    auto& row = result.row;
    row.name = profile.name;
    row.award_year = profile.award_year;
    row.h = dist.h();
    row.min_inlinks = dist.min_inlinks;
    row.max_inlinks = dist.max_inlinks;
    row.total_range = dist.total_range;
    row.total_inlinks = dist.total_inlinks;
    row.n_works = stats.n_works;
    row.r_squared = result.fit.r_squared;
    row.f_stat = result.fit.f_stat;
    row.p_value = result.fit.p_value;
    row.level = result.fit.level;
    row.uncited_fraction = stats.uncited_fraction;
    row.slope = result.fit.slope;
    row.intercept = result.fit.intercept;
    return result;
}

// A row either analyzed cleanly or carries the error that stopped it; one
// failing profile never aborts the rest of a run.
struct report_entry {
    std::string name;
    std::optional<analysis_row> row;
    std::string error;
};

struct analysis_report {
    std::vector<report_entry> entries;

    bool all_succeeded() const {
        return std::all_of(entries.begin(), entries.end(),
                           [](const report_entry& e) { return e.row.has_value(); });
    }
};

namespace detail {

inline std::string fixed(double v, int decimals) {
    if (std::isinf(v)) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

inline std::string level_label(significance s) {
    switch (s) {
        case significance::one_percent: return "1%";
        case significance::five_percent: return "5%";
        default: return "-";
    }
}

} // namespace detail

// Plain-text table in the shape of the published summary tables. Values are
// rounded only here: R-squared to 4 decimals, F to 2.
inline std::string render_table(const analysis_report& report) {
    std::ostringstream out;
    const char* fmt = "%-20s %6s %6s %6s %6s %8s %10s %9s %9s %6s %9s\n";
    char line[256];
    std::snprintf(line, sizeof(line), fmt, "name", "year", "h", "min", "max", "range", "total",
                  "R2", "F", "sig", "uncited");
    out << line;
    for (const auto& e : report.entries) {
        if (!e.row) {
            std::snprintf(line, sizeof(line), "%-20s error: %s\n", e.name.c_str(),
                          e.error.c_str());
            out << line;
            continue;
        }
        const auto& r = *e.row;
        std::snprintf(line, sizeof(line), fmt, r.name.c_str(),
                      r.award_year ? std::to_string(*r.award_year).c_str() : "-",
                      std::to_string(r.h).c_str(), std::to_string(r.min_inlinks).c_str(),
                      std::to_string(r.max_inlinks).c_str(),
                      std::to_string(r.total_range).c_str(),
                      std::to_string(r.total_inlinks).c_str(),
                      detail::fixed(r.r_squared, 4).c_str(), detail::fixed(r.f_stat, 2).c_str(),
                      detail::level_label(r.level).c_str(),
                      detail::fixed(r.uncited_fraction, 4).c_str());
        out << line;
    }
    return out.str();
}

// Machine-readable report; one object per researcher, schema-versioned.
// An infinite F statistic serializes as the string "inf" since JSON numbers
// cannot carry it.
inline nlohmann::json report_to_json(const analysis_report& report) {
    nlohmann::json doc;
    doc["schema"] = "ysim-report/1";
    doc["rows"] = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json row;
        row["name"] = e.name;
        if (!e.row) {
            row["error"] = e.error;
        } else {
            const auto& r = *e.row;
            if (r.award_year) row["award_year"] = *r.award_year;
            row["h"] = r.h;
            row["min_inlinks"] = r.min_inlinks;
            row["max_inlinks"] = r.max_inlinks;
            row["total_range"] = r.total_range;
            row["total_inlinks"] = r.total_inlinks;
            row["n_works"] = r.n_works;
            row["r_squared"] = r.r_squared;
            if (std::isinf(r.f_stat))
                row["f_stat"] = "inf";
            else
                row["f_stat"] = r.f_stat;
            row["p_value"] = r.p_value;
            row["significance"] = to_string(r.level);
            row["uncited_fraction"] = r.uncited_fraction;
            row["slope"] = r.slope;
            row["intercept"] = r.intercept;
        }
        doc["rows"].push_back(std::move(row));
    }
    return doc;
}

} // namespace ysim
