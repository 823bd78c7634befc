#include "fdfront/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fdfront {

std::vector<std::string> validate_params(const ModelParams& p) {
    std::vector<std::string> bad;
    auto fail = [&](const std::string& s) { bad.push_back(s); };

    if (!(p.m > 0.0 && p.m < 1.0)) fail("m outside (0,1)");
    if (!(p.beta > 1.0)) fail("beta <= 1");
    if (!(p.r > 0.0)) fail("r <= 0");
    if (!(p.rbar > 0.0)) fail("rbar <= 0");
    if (!(p.r <= p.rbar)) fail("r > rbar");
    if (!(p.alpha > 0.0)) fail("alpha <= 0");
    if (!(p.Cbar > 0.0)) fail("Cbar <= 0");
    if (!(p.x0 > 1.0)) fail("x0 <= 1");
    if (!(p.s0 > 0.0 && p.s0 <= 1.0)) fail("s0 outside (0,1]");
    if (!(p.eps > 0.0 && p.eps < 1.0)) fail("eps outside (0,1)");
    return bad;
}

double sigma_exponent(const ModelParams& p) { return (p.beta - p.m) / (2.0 * (p.beta - 1.0)); }

RegimeReport classify_regime(const ModelParams& p) {
    const auto bad = validate_params(p);
    if (!bad.empty()) {
        std::ostringstream os;
        os << "invalid parameters:";
        for (const auto& s : bad) os << " [" << s << "]";
        throw std::invalid_argument(os.str());
    }

    RegimeReport rep;
    rep.sigma = sigma_exponent(p);
    rep.blowup_exp = 1.0 / (p.beta - 1.0);
    rep.fast_decay_exp = 2.0 / (1.0 - p.m);
    rep.slow_decay_exp = 2.0 / (p.beta - p.m);

    // lower boundary beta = m + 2/alpha is in scope, upper beta = 2 - m is not
    const bool band = (p.m + 2.0 / p.alpha <= p.beta) && (p.beta < 2.0 - p.m);
    const bool tail_ok = p.alpha > 1.0 / (1.0 - p.m);
    rep.in_scope = band && tail_ok;
    rep.improved_upper = p.alpha >= 2.0 / (1.0 - p.m);

    std::ostringstream os;
    if (!band) os << "beta outside [m+2/alpha, 2-m); ";
    if (!tail_ok) os << "alpha <= 1/(1-m); ";
    if (rep.in_scope)
        os << "accelerating-mixed regime, level sets ~ t^" << rep.sigma << "; ";
    os << "linear invasion speed c0 is not quantified here";
    rep.notes = os.str();
    return rep;
}

LevelBounds level_bounds(const ModelParams& p, double t, double z0, double z0bar) {
    if (!(t > 0.0)) throw std::invalid_argument("level_bounds: t must be positive");
    if (!(z0 > 0.0)) throw std::invalid_argument("level_bounds: z0 must be positive");

    const RegimeReport rep = classify_regime(p);
    LevelBounds b;
    b.x_minus = (1.0 - p.eps) * z0 * std::pow(t, rep.sigma);
    if (rep.improved_upper) {
        if (!(z0bar > 0.0)) throw std::invalid_argument("level_bounds: z0bar must be positive");
        b.x_plus = (1.0 + p.eps) * z0bar * std::pow(t, rep.sigma);
    } else {
        const double base = p.rbar * std::pow(p.Cbar, p.beta - 1.0) * (p.beta - 1.0) * t;
        const double expo = (p.beta - p.m + p.eps) / (2.0 * (p.beta - 1.0));
        b.x_plus = std::pow(base, expo);
    }
    return b;
}

}  // namespace fdfront
