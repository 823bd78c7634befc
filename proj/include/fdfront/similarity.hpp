#pragma once

#include <cmath>
#include <stdexcept>

namespace fdfront {

/// Coefficients of the similarity ODE
///
///   -(phi + (beta-m)/2 * z * phi') / (beta-1) = (phi^m)'' + r_eff * phi^beta
///
/// satisfied by profiles of w(t,x) = t^(-1/(beta-1)) * phi(x * t^(-sigma)).
/// r_eff is r - eps when building lower barriers and rbar for upper ones.
struct ProfileODESpec {
    double m = 0.5;
    double beta = 1.2;
    double r_eff = 1.0;

    double blowup_exp() const { return 1.0 / (beta - 1.0); }
    double fast_decay_exp() const { return 2.0 / (1.0 - m); }
    double slow_decay_exp() const { return 2.0 / (beta - m); }
    // coefficients of the integrated form
    //   (phi^m)'(z) + c2*z*phi(z) - int_z^Z (c1*phi + r_eff*phi^beta) = const
    double c1() const { return (2.0 - beta + m) / (2.0 * (beta - 1.0)); }
    double c2() const { return (beta - m) / (2.0 * (beta - 1.0)); }

    void validate() const {
        if (!(m > 0.0 && m < 1.0 && beta > 1.0 && beta < 2.0 - m))
            throw std::invalid_argument("ProfileODESpec: need 0<m<1<beta<2-m");
        if (!(r_eff >= 0.0)) throw std::invalid_argument("ProfileODESpec: r_eff < 0");
    }
};

/// Prefactor that separates sub- from supersolutions of the blow-up family
/// psi(z) = C * (z-z0)^(-1/(beta-1)) near z0: subsolution for C > C0,
/// supersolution for C < C0.
inline double c0_constant(const ProfileODESpec& spec, double z0) {
    if (!(z0 >= 0.0)) throw std::invalid_argument("c0_constant: z0 < 0");
    if (!(spec.r_eff > 0.0)) throw std::invalid_argument("c0_constant: r_eff must be positive");
    const double b1 = spec.beta - 1.0;
    return std::pow(z0 * (spec.beta - spec.m) / (2.0 * spec.r_eff * b1 * b1), 1.0 / b1);
}

/// The unique C making C * z^(-2/(1-m)) an exact solution of the similarity
/// ODE with r_eff = 0: C^(1-m) = 2m(1+m)/(1-m).
inline double c_infinity(double m) {
    if (!(m > 0.0 && m < 1.0)) throw std::invalid_argument("c_infinity: m outside (0,1)");
    return std::pow(2.0 * m * (1.0 + m) / (1.0 - m), 1.0 / (1.0 - m));
}

/// Width factor of the interval (z0, (1+kappa) z0] on which the band ceiling
/// psi_{0,gamma*C0} stays a subsolution: transport <= reaction there as soon
/// as z <= gamma^(beta-1) * z0.
inline double kappa_interval(double gamma, double beta) {
    if (!(gamma > 1.0)) throw std::invalid_argument("kappa_interval: gamma must exceed 1");
    return std::pow(gamma, beta - 1.0) - 1.0;
}

/// Signed ODE residual of the power function psi(z) = C * (z - shift)^(-b),
/// oriented so that residual >= 0 means subsolution:
///   R = (psi^m)'' + r_eff * psi^beta + (psi + (beta-m)/2 * z * psi') / (beta-1).
inline double power_residual(const ProfileODESpec& spec, double C, double b, double shift,
                             double z) {
    const double s = z - shift;
    if (!(s > 0.0) || !(C > 0.0)) throw std::invalid_argument("power_residual: need z > shift, C > 0");
    const double psi = C * std::pow(s, -b);
    const double dpsi = -b * psi / s;
    const double bm = b * spec.m;
    const double d2psim = std::pow(C, spec.m) * bm * (bm + 1.0) * std::pow(s, -bm - 2.0);
    const double transport =
        (psi + 0.5 * (spec.beta - spec.m) * z * dpsi) / (spec.beta - 1.0);
    return d2psim + spec.r_eff * std::pow(psi, spec.beta) + transport;
}

/// Residual of the blow-up family psi_{0,C}(z) = C (z-z0)^(-1/(beta-1)).
inline double blowup_family_residual(const ProfileODESpec& spec, double C, double z0, double z) {
    return power_residual(spec, C, spec.blowup_exp(), z0, z);
}

/// Residual of the decay family psi_{inf,C}(z) = C z^(-2/(1-m)), optionally
/// shifted to the left by Z (evaluates psi_{inf,C}(z + Z)).
inline double decay_family_residual(const ProfileODESpec& spec, double C, double z,
                                    double left_shift = 0.0) {
    return power_residual(spec, C, spec.fast_decay_exp(), -left_shift, z);
}

/// Residual of the guard function (z-z0)^(-gamma1), 0 < gamma1 < 1/(1-m).
inline double guard_residual(const ProfileODESpec& spec, double gamma1, double z0, double z) {
    return power_residual(spec, 1.0, gamma1, z0, z);
}

struct ProfileSeed {
    double z = 0.0;
    double phi = 0.0;
    double dphi = 0.0;
};

/// Leading-order anchor on psi_{0,C} at z = z0 + delta. The slope is the pure
/// power-law one; shooting perturbs it afterwards. delta must lie inside the
/// validity interval (0, kappa*z0] of the band ceiling.
inline ProfileSeed blowup_seed(const ProfileODESpec& spec, double z0, double C, double delta,
                               double gamma_band) {
    if (!(z0 > 0.0) || !(C > 0.0)) throw std::invalid_argument("blowup_seed: need z0, C > 0");
    const double kappa = kappa_interval(gamma_band, spec.beta);
    if (!(delta > 0.0 && delta <= kappa * z0))
        throw std::invalid_argument("blowup_seed: delta outside (0, kappa*z0]");
    const double b = spec.blowup_exp();
    ProfileSeed s;
    s.z = z0 + delta;
    s.phi = C * std::pow(delta, -b);
    s.dphi = -b * s.phi / delta;
    return s;
}

}  // namespace fdfront
