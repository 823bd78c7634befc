#pragma once

#include <string>
#include <vector>

namespace fdfront {

/// Scalar parameters of the model
///
///     u_t = (u^m)_xx + f(u),   0 < m < 1,
///
/// with a monostable reaction pinched between r*s^beta (on [0,s0]) and
/// rbar*s^beta (on [0,1]), and initial data decaying like Cbar/x^alpha
/// past x0.
struct ModelParams {
    double m = 0.5;      // diffusion exponent, in (0,1)
    double beta = 1.2;   // reaction exponent, > 1
    double r = 0.5;      // lower reaction constant
    double rbar = 1.0;   // upper reaction constant
    double alpha = 4.0;  // initial tail exponent
    double Cbar = 1.0;   // initial tail prefactor
    double x0 = 2.0;     // tail onset, > 1
    double s0 = 0.5;     // validity threshold of the lower reaction bound, in (0,1]
    double eps = 0.25;   // slack used by the level-set bounds, in (0,1)
};

/// Regime classification and the closed-form exponents attached to it.
struct RegimeReport {
    bool in_scope = false;       // m + 2/alpha <= beta < 2 - m and alpha > 1/(1-m)
    bool improved_upper = false; // alpha >= 2/(1-m)
    double sigma = 0.0;          // level-set exponent (beta-m)/(2(beta-1))
    double blowup_exp = 0.0;     // 1/(beta-1)
    double fast_decay_exp = 0.0; // 2/(1-m)
    double slow_decay_exp = 0.0; // 2/(beta-m)
    std::string notes;
};

/// Returns one human-readable line per violated hypothesis; empty means valid.
std::vector<std::string> validate_params(const ModelParams& p);

/// Classifies the spreading regime. Throws std::invalid_argument when
/// validate_params(p) is nonempty.
RegimeReport classify_regime(const ModelParams& p);

double sigma_exponent(const ModelParams& p);

/// Level-set sandwich bounds at time t.
///
/// x_minus = (1-eps) * z0 * t^sigma. In the improved regime (alpha >= 2/(1-m))
/// x_plus = (1+eps) * z0bar * t^sigma, otherwise
/// x_plus = (rbar * Cbar^(beta-1) * (beta-1) * t)^((beta-m+eps)/(2(beta-1))).
/// Throws std::invalid_argument on nonpositive t or z0 (z0bar checked only
/// when the improved form is used).
struct LevelBounds {
    double x_minus = 0.0;
    double x_plus = 0.0;
};
LevelBounds level_bounds(const ModelParams& p, double t, double z0, double z0bar);

}  // namespace fdfront
