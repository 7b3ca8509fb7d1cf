#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ysim/errors.hpp"
#include "ysim/rng.hpp"
#include "ysim/special.hpp"

namespace ysim {

// Limiting size distribution of the preferential-growth process:
// f(i) = rho * B(i, rho + 1). For rho = 1 this reduces to 1/(i(i+1)).
inline double yule_limit_pmf(double rho, std::uint64_t i) {
    if (!(rho > 0.0)) throw input_error("yule_limit_pmf: rho must be positive");
    if (i < 1) throw input_error("yule_limit_pmf: i must be >= 1");
    const double di = static_cast<double>(i);
    return rho * std::exp(lbeta(di, rho + 1.0));
}

// Survival function of the limit distribution, P(size > n) = n * B(n, rho+1).
// Handy as the exact tail term in normalization checks.
inline double yule_limit_sf(double rho, std::uint64_t n) {
    if (!(rho > 0.0)) throw input_error("yule_limit_sf: rho must be positive");
    if (n < 1) throw input_error("yule_limit_sf: n must be >= 1");
    const double dn = static_cast<double>(n);
    return dn * std::exp(lbeta(dn, rho + 1.0));
}

// Species count of a single genus founded at time zero, after t doubling
// periods of the linear pure-birth process: geometric on {1,2,...} with
// p = 2^-t, so the mean is 2^t.
inline double yule_cohort_pmf(double t, std::uint64_t n) {
    if (!(t >= 0.0)) throw input_error("yule_cohort_pmf: t must be non-negative");
    if (n < 1) throw input_error("yule_cohort_pmf: n must be >= 1");
    const double p = std::exp2(-t);
    if (n == 1) return p;
    return p * std::exp(static_cast<double>(n - 1) * std::log1p(-p));
}

enum class arrival_model { single_cohort, geometric_stream };

inline arrival_model parse_arrival_model(const std::string& name) {
    if (name == "cohort") return arrival_model::single_cohort;
    if (name == "stream") return arrival_model::geometric_stream;
    throw input_error("unknown arrival model '" + name + "' (expected cohort|stream)");
}

struct genus_histogram {
    double t = 0.0;                                // snapshot time, doubling periods
    std::map<std::uint64_t, std::uint64_t> counts; // genus size -> number of genera

    std::uint64_t monospecific_count() const {
        const auto it = counts.find(1);
        return it == counts.end() ? 0 : it->second;
    }

    std::uint64_t total_genera() const {
        std::uint64_t s = 0;
        for (const auto& [size, c] : counts) s += c;
        return s;
    }

    std::uint64_t total_species() const {
        std::uint64_t s = 0;
        for (const auto& [size, c] : counts) s += size * c;
        return s;
    }
};

// Simulates genus sizes as independent pure-birth processes and returns one
// size histogram per snapshot.
//
// single_cohort founds every genus at time zero. geometric_stream draws
// founding times with density proportional to 2^u on [0, t_end], i.e. the
// genus count itself doubles once per period and reaches total_genera at
// t_end.
//
// Between consecutive snapshots each species lineage evolves independently,
// so a genus of size n advances by summing n geometric draws with
// p = 2^-(dt). Snapshots of one run are therefore path-consistent: sizes
// never shrink.
inline std::vector<genus_histogram> simulate_genera(arrival_model model,
                                                    std::uint64_t total_genera, double t_end,
                                                    std::vector<double> snapshots,
                                                    std::uint64_t seed) {
    if (total_genera < 1) throw input_error("simulate_genera: need at least one genus");
    if (!(t_end >= 0.0)) throw input_error("simulate_genera: t_end must be non-negative");
    if (!std::is_sorted(snapshots.begin(), snapshots.end()))
        throw input_error("simulate_genera: snapshots must be sorted ascending");
    for (double t : snapshots)
        if (t < 0.0 || t > t_end)
            throw input_error("simulate_genera: snapshot outside [0, t_end]");

    rng gen(seed);

    std::vector<double> founded(total_genera, 0.0);
    if (model == arrival_model::geometric_stream) {
        const double scale = std::exp2(t_end) - 1.0;
        for (auto& f : founded) f = std::log2(1.0 + gen.uniform() * scale);
        std::sort(founded.begin(), founded.end());
    }

    std::vector<std::uint64_t> sizes(total_genera, 0); // 0 = not yet founded
    std::vector<genus_histogram> result;
    result.reserve(snapshots.size());

    double prev_t = 0.0;
    for (double t : snapshots) {
        for (std::uint64_t g = 0; g < total_genera; ++g) {
            if (founded[g] > t) break; // founding times ascend
            if (sizes[g] == 0) {
                sizes[g] = gen.geometric(std::exp2(-(t - founded[g])));
            } else if (t > prev_t) {
                const double p = std::exp2(-(t - prev_t));
                std::uint64_t next = 0;
                for (std::uint64_t s = 0; s < sizes[g]; ++s) next += gen.geometric(p);
                sizes[g] = next;
            }
        }
        genus_histogram hist;
        hist.t = t;
        for (std::uint64_t g = 0; g < total_genera; ++g)
            if (founded[g] <= t) ++hist.counts[sizes[g]];
        result.push_back(std::move(hist));
        prev_t = t;
    }
    return result;
}

} // namespace ysim
