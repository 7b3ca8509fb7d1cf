#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "ysim/errors.hpp"
#include "ysim/regression.hpp"

namespace ysim {

struct tail_slope_estimate {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t points_used = 0;
};

// Which occupied sizes enter the log-log fit.
//
// contiguous_head uses the unbroken run of positive frequencies starting at
// the first occupied size >= min_size and stops at the first empty size.
// Beyond that point a sampled histogram holds isolated single-count sizes
// whose log-frequency sits at zero regardless of the underlying density,
// which flattens the fitted exponent badly; the head run is where counts
// still resolve the distribution. all_positive keeps every occupied size and
// is appropriate for exact (non-sampled) frequency tables.
enum class tail_fit_mode { contiguous_head, all_positive };

// Least-squares slope of ln(frequency) against ln(size) over sizes >=
// min_size with strictly positive frequency.
inline tail_slope_estimate tail_slope(const std::map<std::uint64_t, std::uint64_t>& histogram,
                                      std::uint64_t min_size,
                                      tail_fit_mode mode = tail_fit_mode::contiguous_head) {
    std::vector<double> log_freq, log_size;
    if (mode == tail_fit_mode::all_positive) {
        for (const auto& [size, freq] : histogram) {
            if (size < min_size || freq == 0) continue;
            log_size.push_back(std::log(static_cast<double>(size)));
            log_freq.push_back(std::log(static_cast<double>(freq)));
        }
    } else {
        auto it = histogram.lower_bound(min_size);
        while (it != histogram.end() && it->second == 0) ++it;
        if (it != histogram.end()) {
            std::uint64_t expected = it->first;
            for (; it != histogram.end() && it->first == expected && it->second > 0;
                 ++it, ++expected) {
                log_size.push_back(std::log(static_cast<double>(it->first)));
                log_freq.push_back(std::log(static_cast<double>(it->second)));
            }
        }
    }
    if (log_size.size() < 3)
        throw fit_error("tail_slope: fewer than 3 usable points at or above min_size");

    const linear_fit_result fit = ols_fit(log_freq, log_size);
    return {fit.slope, fit.intercept, fit.r_squared, fit.n};
}

} // namespace ysim
