#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "ysim/errors.hpp"

namespace ysim {

// Largest h such that at least h of the counts are >= h. Zero for an empty
// or all-zero list.
inline std::int64_t h_index(std::span<const std::int64_t> counts) {
    std::vector<std::int64_t> sorted(counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::int64_t h = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= static_cast<std::int64_t>(i) + 1)
            h = static_cast<std::int64_t>(i) + 1;
        else
            break;
    }
    return h;
}

inline std::int64_t h_index(const std::vector<std::int64_t>& counts) {
    return h_index(std::span<const std::int64_t>(counts));
}

// The top-h slice of an inlink distribution, plus the range arithmetic the
// summary tables are built from.
struct truncated_distribution {
    std::vector<std::int64_t> counts; // descending, length h
    std::int64_t min_inlinks = 0;
    std::int64_t max_inlinks = 0;
    std::int64_t total_range = 0; // max - min + 1
    std::int64_t total_inlinks = 0;

    std::int64_t h() const { return static_cast<std::int64_t>(counts.size()); }
};

// Keeps exactly the h largest counts. Boundary ties are broken by input
// order, which only matters when callers track which works were retained;
// the retained multiset of counts is the same either way.
inline truncated_distribution truncate_top_h(std::span<const std::int64_t> counts) {
    const std::int64_t h = h_index(counts);
    if (h < 1) throw truncation_error("truncate_top_h: h = 0, nothing to analyze");

    truncated_distribution dist;
    dist.counts.assign(counts.begin(), counts.end());
    std::stable_sort(dist.counts.begin(), dist.counts.end(), std::greater<>());
    dist.counts.resize(static_cast<std::size_t>(h));
    dist.max_inlinks = dist.counts.front();
    dist.min_inlinks = dist.counts.back();
    dist.total_range = dist.max_inlinks - dist.min_inlinks + 1;
    dist.total_inlinks = std::accumulate(dist.counts.begin(), dist.counts.end(), std::int64_t{0});
    return dist;
}

inline truncated_distribution truncate_top_h(const std::vector<std::int64_t>& counts) {
    return truncate_top_h(std::span<const std::int64_t>(counts));
}

struct summary_statistics {
    std::int64_t n_works = 0;
    double uncited_fraction = 0.0;
};

inline summary_statistics summary_stats(std::span<const std::int64_t> counts) {
    if (counts.empty()) throw empty_input_error("summary_stats: no works");
    std::int64_t zeros = 0;
    for (auto c : counts)
        if (c == 0) ++zeros;
    return {static_cast<std::int64_t>(counts.size()),
            static_cast<double>(zeros) / static_cast<double>(counts.size())};
}

inline summary_statistics summary_stats(const std::vector<std::int64_t>& counts) {
    return summary_stats(std::span<const std::int64_t>(counts));
}

} // namespace ysim
