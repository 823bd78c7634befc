#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace fdfront {

// Adaptive embedded Cash-Karp 4(5) integrator for small first-order systems,
// with sign-change events refined in-step by cubic Hermite interpolation.
// Integrates in either direction (z_end may be below z_start).

inline constexpr std::size_t kOdeDim = 3;
using OdeState = std::array<double, kOdeDim>;
using OdeRhs = std::function<void(double z, const OdeState& y, OdeState& dy)>;

struct OdeEvent {
    int id = 0;
    // Fires on the first step whose endpoint makes g nonpositive
    // (g is assumed positive at the start of integration).
    std::function<double(double z, const OdeState& y)> g;
    bool terminal = true;
};

enum class OdeStopReason {
    ReachedEnd,
    Event,
    StepSizeCollapse,
    MaxSteps,
    NonFinite,
};

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-30;
    double initial_step = 0.0;  // 0: pick from the max-step policy
    std::size_t max_steps = 4'000'000;
    // Optional cap on |h| as a function of current z (dense output control).
    std::function<double(double z)> max_step;
};

struct OdeResult {
    OdeStopReason reason = OdeStopReason::ReachedEnd;
    int event_id = -1;
    double z = 0.0;
    OdeState y{};
    std::size_t n_accepted = 0;
    std::size_t n_rejected = 0;
};

namespace detail {

inline bool finite(const OdeState& y) {
    for (double v : y)
        if (!std::isfinite(v)) return false;
    return true;
}

// Cubic Hermite interpolation of the state on [z0, z1].
inline OdeState hermite(double z0, const OdeState& y0, const OdeState& f0, double z1,
                        const OdeState& y1, const OdeState& f1, double z) {
    const double h = z1 - z0;
    const double s = (z - z0) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    OdeState out;
    for (std::size_t i = 0; i < kOdeDim; ++i)
        out[i] = h00 * y0[i] + h10 * h * f0[i] + h01 * y1[i] + h11 * h * f1[i];
    return out;
}

}  // namespace detail

/// Integrates dy/dz = rhs(z,y) from (z_start, y0) toward z_end.
/// Every accepted step endpoint is handed to `sink` (including the initial
/// point and a refined event point). Returns where and why it stopped.
template <class Sink>
OdeResult integrate_ode(const OdeRhs& rhs, double z_start, const OdeState& y0, double z_end,
                        const OdeOptions& opt, const std::vector<OdeEvent>& events, Sink&& sink) {
    static constexpr double b21 = 1.0 / 5.0;
    static constexpr double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
    static constexpr double b41 = 3.0 / 10.0, b42 = -9.0 / 10.0, b43 = 6.0 / 5.0;
    static constexpr double b51 = -11.0 / 54.0, b52 = 5.0 / 2.0, b53 = -70.0 / 27.0,
                            b54 = 35.0 / 27.0;
    static constexpr double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0, b63 = 575.0 / 13824.0,
                            b64 = 44275.0 / 110592.0, b65 = 253.0 / 4096.0;
    static constexpr double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 7.0 / 8.0;
    static constexpr double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0, c4 = 125.0 / 594.0,
                            c6 = 512.0 / 1771.0;
    static constexpr double d1 = c1 - 2825.0 / 27648.0, d3 = c3 - 18575.0 / 48384.0,
                            d4 = c4 - 13525.0 / 55296.0, d5 = -277.0 / 14336.0, d6 = c6 - 0.25;

    OdeResult res;
    const double dir = (z_end >= z_start) ? 1.0 : -1.0;
    double z = z_start;
    OdeState y = y0;
    OdeState f;
    rhs(z, y, f);
    if (!detail::finite(f) || !detail::finite(y)) {
        res.reason = OdeStopReason::NonFinite;
        res.z = z;
        res.y = y;
        return res;
    }
    sink(z, y, f);

    auto cap = [&](double zz) {
        double c = std::abs(z_end - z_start);
        if (opt.max_step) c = std::min(c, opt.max_step(zz));
        return c;
    };

    double h = opt.initial_step > 0.0 ? opt.initial_step : 0.01 * cap(z);
    h = std::min(h, cap(z));

    std::vector<double> gprev(events.size());
    for (std::size_t k = 0; k < events.size(); ++k) {
        gprev[k] = events[k].g(z, y);
        if (!(gprev[k] > 0.0)) {
            // already in the stop region at the initial point
            res.reason = OdeStopReason::Event;
            res.event_id = events[k].id;
            res.z = z;
            res.y = y;
            if (events[k].terminal) return res;
        }
    }

    OdeState k1, k2, k3, k4, k5, k6, ytmp, ynew, yerr, fnew;

    while ((z_end - z) * dir > 0.0) {
        if (res.n_accepted + res.n_rejected > opt.max_steps) {
            res.reason = OdeStopReason::MaxSteps;
            break;
        }
        h = std::min(h, cap(z));
        if ((z + dir * h - z_end) * dir > 0.0) h = std::abs(z_end - z);
        const double hs = dir * h;

        // step-size collapse guard, relative to the current position scale
        if (!(h > std::abs(z) * 1e-15 + 1e-300)) {
            res.reason = OdeStopReason::StepSizeCollapse;
            break;
        }

        k1 = f;
        for (std::size_t i = 0; i < kOdeDim; ++i) ytmp[i] = y[i] + hs * b21 * k1[i];
        rhs(z + a2 * hs, ytmp, k2);
        for (std::size_t i = 0; i < kOdeDim; ++i)
            ytmp[i] = y[i] + hs * (b31 * k1[i] + b32 * k2[i]);
        rhs(z + a3 * hs, ytmp, k3);
        for (std::size_t i = 0; i < kOdeDim; ++i)
            ytmp[i] = y[i] + hs * (b41 * k1[i] + b42 * k2[i] + b43 * k3[i]);
        rhs(z + a4 * hs, ytmp, k4);
        for (std::size_t i = 0; i < kOdeDim; ++i)
            ytmp[i] = y[i] + hs * (b51 * k1[i] + b52 * k2[i] + b53 * k3[i] + b54 * k4[i]);
        rhs(z + a5 * hs, ytmp, k5);
        for (std::size_t i = 0; i < kOdeDim; ++i)
            ytmp[i] = y[i] + hs * (b61 * k1[i] + b62 * k2[i] + b63 * k3[i] + b64 * k4[i] +
                                   b65 * k5[i]);
        rhs(z + a6 * hs, ytmp, k6);

        double err = 0.0;
        bool ok = true;
        for (std::size_t i = 0; i < kOdeDim; ++i) {
            ynew[i] = y[i] + hs * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
            yerr[i] = hs * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i]);
            if (!std::isfinite(ynew[i])) ok = false;
            const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err = std::max(err, std::abs(yerr[i]) / sc);
        }

        if (!ok || !(err <= 1.0)) {
            ++res.n_rejected;
            const double shrink = ok ? std::max(0.2, 0.9 * std::pow(err, -0.25)) : 0.2;
            h *= shrink;
            continue;
        }

        const double znew = z + hs;
        rhs(znew, ynew, fnew);
        if (!detail::finite(fnew)) {
            ++res.n_rejected;
            h *= 0.2;
            continue;
        }
        ++res.n_accepted;

        // event scan on [z, znew]
        int fired = -1;
        double gz = 0.0;
        for (std::size_t kk = 0; kk < events.size(); ++kk) {
            const double gnew = events[kk].g(znew, ynew);
            if (gprev[kk] > 0.0 && !(gnew > 0.0)) {
                fired = static_cast<int>(kk);
                gz = gnew;
                break;
            }
            gprev[kk] = gnew;
        }

        if (fired >= 0) {
            const auto& ev = events[static_cast<std::size_t>(fired)];
            // bisect on the Hermite interpolant for the crossing location
            double lo = z, hi = znew;
            (void)gz;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                const OdeState ymid = detail::hermite(z, y, k1, znew, ynew, fnew, mid);
                if (ev.g(mid, ymid) > 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
            const OdeState yev = detail::hermite(z, y, k1, znew, ynew, fnew, hi);
            OdeState fev;
            rhs(hi, yev, fev);
            sink(hi, yev, fev);
            res.reason = OdeStopReason::Event;
            res.event_id = ev.id;
            res.z = hi;
            res.y = yev;
            if (ev.terminal) return res;
        }

        z = znew;
        y = ynew;
        f = fnew;
        sink(z, y, f);

        const double grow = std::min(5.0, 0.9 * std::pow(std::max(err, 1e-10), -0.2));
        h *= grow;
    }

    if (res.reason == OdeStopReason::ReachedEnd) {
        res.z = z;
        res.y = y;
    }
    return res;
}

}  // namespace fdfront
