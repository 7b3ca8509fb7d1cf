#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ysim/binning.hpp"
#include "ysim/errors.hpp"
#include "ysim/hindex.hpp"

namespace ysim {

// How raw counts are mapped into log space. plus_one is the canonical choice:
// c -> ln(c+1) for every count, keeping zero counts representable and the map
// monotone. zeros_only reproduces the alternative reading in which only zero
// counts get the +1 shift (making counts 0 and 1 coincide); it exists for
// reconciliation experiments and nothing in the pipeline defaults to it.
enum class log_transform { plus_one, zeros_only };

inline double log_shift(std::int64_t count, log_transform t = log_transform::plus_one) {
    if (count < 0) throw input_error("log_shift: negative count");
    if (t == log_transform::zeros_only && count > 0)
        return std::log(static_cast<double>(count));
    return std::log1p(static_cast<double>(count));
}

// The k-bin log-domain layout of a truncated distribution: works are mapped
// by c -> ln(c+1), allocated to k equal-width bins spanning the transformed
// range, and each bin contributes one (x, y) point with x = ln(#works + 1)
// and y = the bin midpoint.
struct log_binned_points {
    std::vector<double> x; // ln(bin count + 1), length k
    std::vector<double> y; // log-domain bin midpoints, length k
    binned_histogram hist;
};

inline log_binned_points log_pipeline(const truncated_distribution& dist, int k = 25,
                                      log_transform transform = log_transform::plus_one) {
    if (dist.counts.empty()) throw truncation_error("log_pipeline: empty distribution");
    if (dist.min_inlinks == dist.max_inlinks)
        throw range_error("log_pipeline: degenerate range, all counts equal");

    const bin_spec spec(k, log_shift(dist.min_inlinks, transform),
                        log_shift(dist.max_inlinks, transform), bin_domain::log);

    std::vector<double> transformed;
    transformed.reserve(dist.counts.size());
    for (auto c : dist.counts) transformed.push_back(log_shift(c, transform));

    log_binned_points pts;
    pts.hist = bin_frequencies(transformed, spec);
    pts.x.reserve(static_cast<std::size_t>(k));
    pts.y.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        pts.x.push_back(std::log1p(static_cast<double>(pts.hist.counts[static_cast<std::size_t>(j)])));
        pts.y.push_back(spec.midpoint(j));
    }
    return pts;
}

} // namespace ysim
