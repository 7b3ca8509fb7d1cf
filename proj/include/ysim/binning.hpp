#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ysim/errors.hpp"

namespace ysim {

enum class bin_domain { linear, log };

// k equal-width bins spanning [lower, upper] in the stated domain.
struct bin_spec {
    int k = 25;
    double lower = 0.0;
    double upper = 0.0;
    bin_domain domain = bin_domain::linear;

    bin_spec() = default;
    bin_spec(int k_, double lower_, double upper_, bin_domain domain_)
        : k(k_), lower(lower_), upper(upper_), domain(domain_) {
        if (k < 2) throw input_error("bin_spec: need at least 2 bins");
        if (!(upper > lower))
            throw range_error("bin_spec: degenerate range, upper must exceed lower");
    }

    double width() const { return (upper - lower) / k; }

    // Upper edge of bin j; the final edge is pinned to `upper` so the
    // maximum value can never fall off the top.
    double upper_edge(int j) const {
        return j + 1 == k ? upper : lower + (j + 1) * width();
    }

    double midpoint(int j) const { return lower + (j + 0.5) * width(); }
};

struct binned_histogram {
    bin_spec spec;
    std::vector<std::int64_t> counts; // length spec.k

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto c : counts) s += c;
        return s;
    }

    std::vector<double> midpoints() const {
        std::vector<double> m(counts.size());
        for (int j = 0; j < static_cast<int>(counts.size()); ++j) m[j] = spec.midpoint(j);
        return m;
    }
};

// Allocates values to bins the way a spreadsheet FREQUENCY call does: bin j
// receives v with upper_edge(j-1) < v <= upper_edge(j), and the lowest bin
// additionally takes v = lower. Every value must lie within [lower, upper].
inline binned_histogram bin_frequencies(std::span<const double> values, const bin_spec& spec) {
    if (!(spec.upper > spec.lower))
        throw range_error("bin_frequencies: degenerate range");

    std::vector<double> edges(spec.k);
    for (int j = 0; j < spec.k; ++j) edges[j] = spec.upper_edge(j);

    binned_histogram hist{spec, std::vector<std::int64_t>(spec.k, 0)};
    for (double v : values) {
        if (v < spec.lower || v > spec.upper)
            throw range_error("bin_frequencies: value " + std::to_string(v) +
                              " outside [" + std::to_string(spec.lower) + ", " +
                              std::to_string(spec.upper) + "]");
        // First edge >= v is the receiving bin; the last edge equals `upper`,
        // so the range check above guarantees a hit.
        const auto it = std::lower_bound(edges.begin(), edges.end(), v);
        ++hist.counts[static_cast<std::size_t>(it - edges.begin())];
    }
    return hist;
}

inline binned_histogram bin_frequencies(const std::vector<double>& values, const bin_spec& spec) {
    return bin_frequencies(std::span<const double>(values), spec);
}

} // namespace ysim
