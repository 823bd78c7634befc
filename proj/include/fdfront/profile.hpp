#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fdfront/fit.hpp"
#include "fdfront/ode.hpp"
#include "fdfront/report.hpp"
#include "fdfront/similarity.hpp"

namespace fdfront {

enum class DecayClass { Fast, Slow, CrossedZero, BlewUp };
const char* to_string(DecayClass c);

/// One point of the profile; q = (phi^m)' is carried instead of phi' so the
/// diffusion term stays regular through the blow-up region.
struct ProfileState {
    double z = 0.0;
    double phi = 0.0;
    double q = 0.0;

    double dphi(double m) const;  // phi' = phi^(1-m) q / m
};

struct ShootingConfig {
    double delta0 = 1e-3;       // anchor offset as a fraction of z0 (clipped to kappa*z0)
    double gamma_band = 1.5;    // blow-up band: k0 = C0/gamma, K0 = gamma*C0
    double gamma1 = 0.0;        // guard exponent, 0 = auto (half of 1/(1-m))
    double z_max = 0.0;         // forward truncation, 0 = auto (z_max_factor * z0)
    double z_max_factor = 1e6;
    double tol_bisect = 1e-9;   // absolute bracket width for the z0 bisection
    double tol_ode = 1e-10;     // local integrator error per step
    std::array<double, 2> tail_fit_window = {0.0, 2.0};  // decades below z_max
    double samples_per_decade = 64.0;
    double inner_depth_decades = 6.0;  // backward reach below delta0, in decades
    double slope_cap_factor = 6.0;     // touchdown detector threshold factor
    double curvature_delta = 0.0;      // inner curvature bound, 0 = auto from band
    double identity_phi_cap = 1.0;     // integrated-form identity checked where phi <= cap
    double tol_identity = 1e-6;

    double effective_gamma1(double m) const;
    double effective_z_max(double z0) const;
    double effective_delta(double z0, double beta) const;
    double effective_curvature_delta(const ProfileODESpec& spec) const;
};

/// A computed profile: blow-up point, anchor, dense samples (z ascending),
/// band constants, fitted prefactors and the tail classification.
struct ProfileSolution {
    ProfileODESpec spec;
    double z0 = 0.0;
    ProfileSeed anchor;
    double xi = 0.0;  // slope magnitude shot at the anchor (phi' = -xi)
    double k0 = 0.0, K0 = 0.0;

    std::vector<ProfileState> samples;
    // integral of c1*phi + r_eff*phi^beta from the anchor, aligned with samples
    std::vector<double> quad;

    double inner_lo = 0.0, inner_hi = 0.0;  // z-window where the blow-up band held
    double C_blow_fit = 0.0;
    double blow_exp_fit = 0.0;  // fitted positive exponent of (z-z0)^(-b)

    DecayClass decay_class = DecayClass::BlewUp;
    std::optional<double> C_decay_fit;  // tail prefactor when Fast
    double tail_slope = 0.0;
    double tail_r2 = 0.0;

    OdeStopReason stop_reason = OdeStopReason::ReachedEnd;
    double stop_z = 0.0;

    std::size_t inner_begin() const;  // index range [inner_begin, inner_end) of the window
    std::size_t inner_end() const;
};

/// Forward integration from an explicit seed until z_max, touchdown or a
/// turning point (q >= 0). z0 is only used to grade the output sampling and
/// may be 0 for seeds unrelated to a blow-up.
ProfileSolution integrate_profile(const ProfileODESpec& spec, const ProfileSeed& seed,
                                  const ShootingConfig& cfg, double z0 = 0.0);

/// Tail classification by nearest-exponent log-log fit on the configured
/// window. Touchdown/turning events short-circuit. Throws when the usable fit
/// window spans less than one decade.
DecayClass classify_decay(ProfileSolution& sol, const ShootingConfig& cfg);

/// Builds the profile blowing up at z0: bisects the anchor slope between the
/// run that falls below the guard (z-z0)^(-gamma1) and the run that exceeds
/// the band ceiling K0*(z-z0)^(-1/(beta-1)), then continues to z_max and
/// classifies the tail. Throws with both endpoint behaviors when no slope
/// bracket exists.
ProfileSolution shoot_inner(const ProfileODESpec& spec, double z0, const ShootingConfig& cfg);

struct ScanRow {
    double z0 = 0.0;
    DecayClass decay = DecayClass::BlewUp;
    double tail_slope = 0.0;
};

/// Coarse scan over z0 in powers of two, looking for the decay dichotomy.
/// Returns the rows plus the first adjacent (fast-side, slow-side) pair.
struct ScanResult {
    std::vector<ScanRow> rows;
    std::optional<std::pair<double, double>> bracket;
    std::string table() const;
};
ScanResult scan_blowup_points(const ProfileODESpec& spec, const ShootingConfig& cfg,
                              int k_min = -6, int k_max = 10);

struct MatchResult {
    double z_star = 0.0;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    ProfileSolution solution;  // fast-side representative
    int iterations = 0;
};

/// Locates the matched blow-up point: bisection of z0 against the tail
/// classification (fast/touchdown below, slow above) until the bracket is
/// narrower than tol_bisect. Throws when the bracket is invalid or the
/// classification stays ambiguous after one z_max refinement.
MatchResult match_z_star(const ProfileODESpec& spec, std::pair<double, double> bracket,
                         const ShootingConfig& cfg);

/// Certifies the boundary estimates of a matched (Fast) profile:
///   a) band slope bounds on the inner window,
///   b) inner curvature bound |phi''| <= delta * phi^(beta+1-m),
///   c) tail derivative bounds with the smallest admissible constants,
///   d) the integrated-form identity read out of the quadrature state.
struct ProfileEstimatesReport {
    ResidualReport inner_slope_lower;
    ResidualReport inner_slope_upper;
    ResidualReport inner_curvature;
    ResidualReport tail_slope_negative;
    ResidualReport identity;
    double K_prime = 0.0;   // smallest admissible tail constant for -phi'
    double K_second = 0.0;  // smallest admissible tail constant for |phi''|
    double identity_constant = 0.0;
    bool all_pass() const;
};
ProfileEstimatesReport verify_profile_estimates(const ProfileSolution& sol,
                                                const ShootingConfig& cfg);

/// C^2 evaluator of a computed profile. Interpolates log(phi) against
/// log(z-z0) by quintic Hermite segments built from the exact nodal
/// derivatives, and continues by the fitted powers outside the sampled range.
class ProfileInterpolant {
  public:
    explicit ProfileInterpolant(const ProfileSolution& sol);

    struct Value {
        double phi = 0.0;
        double dphi = 0.0;
        double d2phi = 0.0;
        bool extrapolated = false;
    };
    Value eval(double z) const;
    double phi(double z) const { return eval(z).phi; }

    /// Inverse of the decreasing profile: z with phi(z) = value.
    double z_of_phi(double value) const;

    double z0() const { return z0_; }
    double z_first() const { return zs_.front(); }
    double z_last() const { return zs_.back(); }
    const ProfileODESpec& spec() const { return spec_; }

  private:
    ProfileODESpec spec_;
    double z0_ = 0.0;
    std::vector<double> zs_;                 // node positions
    std::vector<double> xi_;                 // log(z - z0)
    std::vector<std::array<double, 3>> L_;   // log phi and its two xi-derivatives
    double tail_slope_ = 0.0;                // log-log continuation exponents
    double blow_exp_ = 0.0;

    std::array<double, 3> eval_log(double xi, bool* extrapolated) const;
};

/// Self-similar space-time field w(t,x) = t^(-1/(beta-1)) phi(x t^(-sigma)),
/// infinite (reported as +inf) at and left of the blow-up ray x = z0 t^sigma.
class SelfSimilarField {
  public:
    SelfSimilarField(const ProfileSolution& sol);

    double sigma() const { return sigma_; }
    double amp_exp() const { return amp_exp_; }
    double z0() const { return interp_.z0(); }
    const ProfileInterpolant& interpolant() const { return interp_; }

    double value(double t, double x) const;      // +inf on/left of the blow-up ray
    double blowup_ray(double t) const;           // x position z0 * t^sigma
    /// Rightmost x where w(t,x) = level (w decreasing in x right of the ray).
    double x_of_level(double t, double level) const;

  private:
    ProfileInterpolant interp_;
    double sigma_ = 0.0;
    double amp_exp_ = 0.0;  // 1/(beta-1)
};

// --- artifact serialization -------------------------------------------------

/// CSV columns: z,phi,q. The JSON sidecar stores z0, the anchor, fits,
/// classification and the config hash.
void save_profile(const ProfileSolution& sol, const std::string& csv_path,
                  const std::string& json_path, const std::string& config_hash);
ProfileSolution load_profile(const std::string& csv_path, const std::string& json_path);

}  // namespace fdfront
