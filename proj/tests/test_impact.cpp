#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "ysim/hindex.hpp"
#include "ysim/impact.hpp"
#include "ysim/regression.hpp"

using namespace ysim;

namespace {

// Reference rows (R-squared, published F, expected level) from the two
// published laureate/medalist fit tables.
struct reference_row {
    const char* name;
    double r2;
    double f;
    significance level;
};

const reference_row reference_rows[] = {
    {"corey", 0.6152, 36.77, significance::one_percent},
    {"heeger", 0.7397, 65.35, significance::one_percent},
    {"shimomura", 0.6501, 42.73, significance::one_percent},
    {"yonath", 0.4685, 20.28, significance::one_percent},
    {"negishi", 0.4779, 21.05, significance::one_percent},
    {"donaldson", 0.1846, 5.21, significance::five_percent},
    {"faltings", 0.3004, 9.88, significance::one_percent},
    {"kontsevich", 0.3580, 12.83, significance::one_percent},
    {"chau", 0.0072, 0.17, significance::none},
    {"lindenstrauss", 0.03797, 0.91, significance::none},
};

} // namespace

TEST_CASE("published F statistics reconstruct from R-squared at df = 23") {
    for (const auto& row : reference_rows) {
        const double f = (row.r2 / (1.0 - row.r2)) * 23.0;
        INFO(row.name);
        CHECK(f == Catch::Approx(row.f).margin(0.02));

        const auto sig = f_significance(f, 1, 23);
        CHECK(sig.level == row.level);
    }
}

TEST_CASE("log_pipeline: conserves the truncated works") {
    std::vector<std::int64_t> counts(50, 52);
    counts[0] = 929;
    counts[1] = 500;
    counts[2] = 200;
    const auto dist = truncate_top_h(counts);
    const auto pts = log_pipeline(dist, 25);
    REQUIRE(pts.x.size() == 25);
    REQUIRE(pts.y.size() == 25);
    CHECK(pts.hist.total() == dist.h());

    // 25 points feed a fit with n = 25 and df = 23
    const auto fit = ols_fit(pts.x, pts.y);
    CHECK(fit.n == 25);
    CHECK(fit.df == 23);
}

TEST_CASE("log_pipeline: geometric bin loading is an exact line") {
    // Bins over [ln16, ln256] with k = 4 have width ln2, so placing
    // 2^(j+1)-1 works in bin j makes x_j = (j+1)ln2, linear in the midpoint.
    std::vector<std::int64_t> counts;
    counts.push_back(15);                              // bin 0, the minimum
    for (int i = 0; i < 3; ++i) counts.push_back(40);  // bin 1
    for (int i = 0; i < 7; ++i) counts.push_back(90);  // bin 2
    counts.push_back(255);                             // bin 3, the maximum
    for (int i = 0; i < 14; ++i) counts.push_back(200);

    truncated_distribution dist;
    dist.counts = counts;
    dist.min_inlinks = 15;
    dist.max_inlinks = 255;
    dist.total_range = 255 - 15 + 1;
    dist.total_inlinks = 0;
    for (auto c : counts) dist.total_inlinks += c;

    const auto pts = log_pipeline(dist, 4);
    REQUIRE(pts.hist.counts == std::vector<std::int64_t>{1, 3, 7, 15});

    const auto fit = ols_fit(pts.x, pts.y);
    CHECK(fit.r_squared == 1.0);
    CHECK(std::isinf(fit.f_stat));
}

TEST_CASE("log_pipeline: degenerate range") {
    const auto dist = truncate_top_h(std::vector<std::int64_t>{5, 5, 5, 5, 5});
    CHECK_THROWS_AS(log_pipeline(dist, 25), range_error);
}

TEST_CASE("log transform variants") {
    CHECK(log_shift(0) == 0.0);
    CHECK(log_shift(7) == Catch::Approx(std::log(8.0)));

    // the zeros-only variant maps 0 and 1 to the same point
    CHECK(log_shift(0, log_transform::zeros_only) == 0.0);
    CHECK(log_shift(1, log_transform::zeros_only) == 0.0);
    CHECK(log_shift(10, log_transform::zeros_only) == Catch::Approx(std::log(10.0)));

    CHECK_THROWS_AS(log_shift(-1), input_error);
}

TEST_CASE("log_pipeline: zeros_only variant spans ln(min)..ln(max)") {
    std::vector<std::int64_t> counts = {100, 80, 60, 40, 20, 10, 5};
    const auto dist = truncate_top_h(counts);
    const auto pts = log_pipeline(dist, 5, log_transform::zeros_only);
    CHECK(pts.hist.spec.lower == Catch::Approx(std::log(static_cast<double>(dist.min_inlinks))));
    CHECK(pts.hist.spec.upper == Catch::Approx(std::log(static_cast<double>(dist.max_inlinks))));
    CHECK(pts.hist.total() == dist.h());
}
