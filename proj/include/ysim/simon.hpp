#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ysim/errors.hpp"
#include "ysim/rng.hpp"

namespace ysim {

struct simon_process_config {
    double alpha = 0.1;                // probability a unit founds a new element
    std::uint64_t epochs = 0;
    std::uint64_t initial_elements = 1; // all start at unit size
    std::uint64_t seed = 0;
};

struct simon_population {
    std::vector<std::uint64_t> sizes; // one entry per element
    std::uint64_t epochs_run = 0;
    std::uint64_t initial_elements = 0;

    std::uint64_t aggregate_size() const {
        std::uint64_t s = 0;
        for (auto v : sizes) s += v;
        return s;
    }

    std::map<std::uint64_t, std::uint64_t> size_frequencies() const {
        std::map<std::uint64_t, std::uint64_t> freq;
        for (auto v : sizes) ++freq[v];
        return freq;
    }
};

// One epoch adds one unit. With probability alpha the unit founds a new
// element of size 1; otherwise it lands on an existing element with
// probability proportional to that element's size. Size-proportional
// selection is realized by keeping one owner entry per unit and picking a
// unit uniformly, which is the same distribution with O(1) work per epoch.
inline simon_population run_simon(const simon_process_config& config) {
    if (!(config.alpha > 0.0) || config.alpha > 1.0)
        throw input_error("run_simon: alpha must lie in (0,1]");
    if (config.initial_elements < 1)
        throw input_error("run_simon: need at least one initial element");

    rng gen(config.seed);
    simon_population pop;
    pop.initial_elements = config.initial_elements;
    pop.sizes.assign(config.initial_elements, 1);

    std::vector<std::uint32_t> unit_owner;
    unit_owner.reserve(config.initial_elements + config.epochs);
    for (std::uint64_t e = 0; e < config.initial_elements; ++e)
        unit_owner.push_back(static_cast<std::uint32_t>(e));

    for (std::uint64_t epoch = 0; epoch < config.epochs; ++epoch) {
        if (gen.bernoulli(config.alpha)) {
            pop.sizes.push_back(1);
            unit_owner.push_back(static_cast<std::uint32_t>(pop.sizes.size() - 1));
        } else {
            const std::uint32_t owner =
                unit_owner[gen.uniform_below(unit_owner.size())];
            ++pop.sizes[owner];
            unit_owner.push_back(owner);
        }
    }
    pop.epochs_run = config.epochs;
    return pop;
}

} // namespace ysim
