#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "ysim/errors.hpp"
#include "ysim/special.hpp"

namespace ysim {

// Simple least-squares fit of x as a linear function of y, together with the
// goodness-of-fit statistics used throughout the analysis pipeline.
struct linear_fit_result {
    double slope = 0.0;     // x ~ slope * y + intercept
    double intercept = 0.0;
    double r_squared = 0.0; // squared Pearson correlation, in [0,1]
    double f_stat = 0.0;    // (r2/(1-r2))*df; +infinity for a perfect line
    std::size_t n = 0;
    std::size_t df = 0;     // n - 2
    double p_value = 1.0;
    significance level = significance::none;

    std::size_t v1() const { return n - df - 1; } // always 1
    std::size_t v2() const { return df; }

    double fitted_x(double y) const { return slope * y + intercept; }
};

// r_squared and f_stat are computed from symmetric moment expressions, so
// swapping the two coordinate lists changes slope/intercept but leaves both
// statistics bit-identical.
inline linear_fit_result ols_fit(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size()) throw fit_error("ols_fit: coordinate lists differ in length");
    if (n < 3) throw fit_error("ols_fit: need at least 3 points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw fit_error("ols_fit: zero variance, fit is degenerate");

    linear_fit_result res;
    res.n = n;
    res.df = n - 2;
    res.slope = sxy / syy;
    res.intercept = mx - res.slope * my;

    double r2 = (sxy * sxy) / (sxx * syy);
    if (r2 > 1.0) r2 = 1.0;
    // Collinear inputs land within a few ulp of 1; report the exact-line
    // sentinel rather than a noise-driven finite F.
    if (r2 >= 1.0 - 1e-13) {
        res.r_squared = 1.0;
        res.f_stat = std::numeric_limits<double>::infinity();
    } else {
        res.r_squared = r2;
        res.f_stat = (r2 / (1.0 - r2)) * static_cast<double>(res.df);
    }

    const auto sig = f_significance(res.f_stat, 1.0, static_cast<double>(res.df));
    res.p_value = sig.p_value;
    res.level = sig.level;
    return res;
}

inline linear_fit_result ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
    return ols_fit(std::span<const double>(x), std::span<const double>(y));
}

} // namespace ysim
