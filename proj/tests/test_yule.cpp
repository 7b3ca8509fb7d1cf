#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>

#include "ysim/yule.hpp"

using namespace ysim;

TEST_CASE("yule_limit_pmf: rho = 1 closed form") {
    CHECK(yule_limit_pmf(1.0, 1) == Catch::Approx(0.5).margin(1e-14));
    CHECK(yule_limit_pmf(1.0, 3) == Catch::Approx(1.0 / 12.0).margin(1e-14));
    for (std::uint64_t i = 1; i <= 10000; ++i) {
        const double exact = 1.0 / (static_cast<double>(i) * static_cast<double>(i + 1));
        CHECK(std::abs(yule_limit_pmf(1.0, i) - exact) < 1e-14);
    }
}

TEST_CASE("yule_limit_pmf: normalization with exact tail") {
    for (double rho : {0.5, 1.0, 2.0}) {
        double partial = 0.0;
        for (std::uint64_t i = 1; i <= 1000000; ++i) partial += yule_limit_pmf(rho, i);
        const double total = partial + yule_limit_sf(rho, 1000000);
        CHECK(total == Catch::Approx(1.0).margin(1e-9));
    }
}

TEST_CASE("yule_limit_pmf: domain errors") {
    CHECK_THROWS_AS(yule_limit_pmf(0.0, 1), input_error);
    CHECK_THROWS_AS(yule_limit_pmf(-1.0, 1), input_error);
    CHECK_THROWS_AS(yule_limit_pmf(1.0, 0), input_error);
}

TEST_CASE("yule_cohort_pmf: geometric closed form") {
    CHECK(yule_cohort_pmf(0.0, 1) == 1.0);
    CHECK(yule_cohort_pmf(0.0, 2) == 0.0);
    CHECK(yule_cohort_pmf(1.0, 1) == Catch::Approx(0.5).margin(1e-15));
    CHECK(yule_cohort_pmf(1.0, 3) == Catch::Approx(0.125).margin(1e-15));

    // mean at t = 2 is 2^2
    double mean = 0.0;
    for (std::uint64_t n = 1; n <= 400; ++n) mean += static_cast<double>(n) * yule_cohort_pmf(2.0, n);
    CHECK(mean == Catch::Approx(4.0).margin(1e-12));
}

TEST_CASE("yule_cohort_pmf: sums to one with geometric tail") {
    for (double t : {0.5, 1.0, 3.0, 6.28}) {
        const double p = std::exp2(-t);
        double partial = 0.0;
        const std::uint64_t cap = 4000;
        for (std::uint64_t n = 1; n <= cap; ++n) partial += yule_cohort_pmf(t, n);
        const double tail = std::exp(static_cast<double>(cap) * std::log1p(-p));
        CHECK(partial + tail == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("simulate_genera: snapshot at zero is all monospecific") {
    for (auto model : {arrival_model::single_cohort, arrival_model::geometric_stream}) {
        const auto hists = simulate_genera(model, 500, 2.0, {0.0}, 31);
        REQUIRE(hists.size() == 1);
        const auto& h = hists[0];
        CHECK(h.monospecific_count() == h.total_genera());
    }
}

TEST_CASE("simulate_genera: cohort analytics") {
    const auto hists =
        simulate_genera(arrival_model::single_cohort, 100000, 2.0, {1.0, 2.0}, 2025);
    REQUIRE(hists.size() == 2);

    const auto& at1 = hists[0];
    CHECK(at1.total_genera() == 100000);
    const double mono_frac =
        static_cast<double>(at1.monospecific_count()) / static_cast<double>(at1.total_genera());
    CHECK(mono_frac == Catch::Approx(0.5).margin(0.005));

    const auto& at2 = hists[1];
    const double mean =
        static_cast<double>(at2.total_species()) / static_cast<double>(at2.total_genera());
    CHECK(mean == Catch::Approx(4.0).epsilon(0.02));
}

TEST_CASE("simulate_genera: cohort snapshots are path-consistent") {
    const auto hists = simulate_genera(arrival_model::single_cohort, 20000, 6.28,
                                       {1.0, 3.0, 6.28}, 77);
    REQUIRE(hists.size() == 3);
    // sizes never shrink, so species never decrease and size-1 genera only
    // leave the monospecific class
    CHECK(hists[0].total_species() <= hists[1].total_species());
    CHECK(hists[1].total_species() <= hists[2].total_species());
    CHECK(hists[0].monospecific_count() >= hists[1].monospecific_count());
    CHECK(hists[1].monospecific_count() >= hists[2].monospecific_count());
    for (const auto& h : hists) CHECK(h.total_genera() == 20000);
}

TEST_CASE("simulate_genera: stream founds genera geometrically") {
    const auto hists = simulate_genera(arrival_model::geometric_stream, 80000, 6.28,
                                       {1.0, 3.0, 6.28}, 4);
    REQUIRE(hists.size() == 3);
    CHECK(hists[2].total_genera() == 80000);
    CHECK(hists[0].total_genera() < hists[1].total_genera());
    CHECK(hists[1].total_genera() < hists[2].total_genera());

    // genus count at time t should be near total * (2^t - 1)/(2^t_end - 1)
    const double scale = std::exp2(6.28) - 1.0;
    const double expect1 = 80000.0 * (std::exp2(1.0) - 1.0) / scale;
    CHECK(static_cast<double>(hists[0].total_genera()) ==
          Catch::Approx(expect1).epsilon(0.15));
}

TEST_CASE("simulate_genera: determinism and validation") {
    const auto a = simulate_genera(arrival_model::geometric_stream, 5000, 4.0, {1.0, 4.0}, 9);
    const auto b = simulate_genera(arrival_model::geometric_stream, 5000, 4.0, {1.0, 4.0}, 9);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].counts == b[i].counts);

    CHECK_THROWS_AS(simulate_genera(arrival_model::single_cohort, 0, 1.0, {0.5}, 1),
                    input_error);
    CHECK_THROWS_AS(simulate_genera(arrival_model::single_cohort, 10, 1.0, {0.8, 0.2}, 1),
                    input_error);
    CHECK_THROWS_AS(simulate_genera(arrival_model::single_cohort, 10, 1.0, {1.5}, 1),
                    input_error);
    CHECK_THROWS_AS(parse_arrival_model("bogus"), input_error);
    CHECK(parse_arrival_model("cohort") == arrival_model::single_cohort);
    CHECK(parse_arrival_model("stream") == arrival_model::geometric_stream);
}
