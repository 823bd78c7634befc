#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace fdfront {

/// Ordinary least-squares line fit y = slope*x + intercept with r^2.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::size_t n = 0;

    bool valid() const { return n >= 2; }
};

inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    LineFit f;
    const std::size_t n = x.size() < y.size() ? x.size() : y.size();
    f.n = n;
    if (n < 2) return f;
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / double(n), my = sy / double(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx <= 0.0) {
        f.n = 0;
        return f;
    }
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

/// Power-law fit y = prefactor * x^slope via least squares in log-log space.
/// Points with nonpositive x or y are skipped.
struct PowerFit {
    double slope = 0.0;
    double prefactor = 0.0;
    double r2 = 0.0;
    std::size_t n = 0;
    double x_lo = 0.0;  // span of points actually used
    double x_hi = 0.0;

    bool valid() const { return n >= 2; }
    /// Width of the fit window in decades of x.
    double decades() const { return (n >= 2 && x_lo > 0.0) ? std::log10(x_hi / x_lo) : 0.0; }
};

template <class GetX, class GetY>
PowerFit fit_powerlaw(std::size_t count, GetX&& get_x, GetY&& get_y) {
    double sx = 0, sy = 0;
    std::size_t n = 0;
    double lo = 0, hi = 0;
    // two passes keeps this numerically tame on long windows
    for (std::size_t i = 0; i < count; ++i) {
        const double xv = get_x(i), yv = get_y(i);
        if (!(xv > 0.0) || !(yv > 0.0)) continue;
        sx += std::log(xv);
        sy += std::log(yv);
        if (n == 0 || xv < lo) lo = xv;
        if (n == 0 || xv > hi) hi = xv;
        ++n;
    }
    PowerFit f;
    f.n = n;
    if (n < 2) return f;
    const double mx = sx / double(n), my = sy / double(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const double xv = get_x(i), yv = get_y(i);
        if (!(xv > 0.0) || !(yv > 0.0)) continue;
        const double dx = std::log(xv) - mx, dy = std::log(yv) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx <= 0.0) {
        f.n = 0;
        return f;
    }
    f.slope = sxy / sxx;
    f.prefactor = std::exp(my - f.slope * mx);
    f.r2 = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
    f.x_lo = lo;
    f.x_hi = hi;
    return f;
}

inline PowerFit fit_powerlaw(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size() < y.size() ? x.size() : y.size();
    return fit_powerlaw(
        n, [&](std::size_t i) { return x[i]; }, [&](std::size_t i) { return y[i]; });
}

}  // namespace fdfront
