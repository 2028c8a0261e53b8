#pragma once

#include <string>
#include <vector>

namespace fraclab {

enum class SubordinatorKind { stable, relativistic };

struct SubordinatorSpec {
    SubordinatorKind kind = SubordinatorKind::stable;
    double alpha = 0.5;
    double m = 0.0;

    static SubordinatorSpec stable(double alpha);
    static SubordinatorSpec relativistic(double alpha, double m);
    /// Throws ConfigError unless alpha is in (0,1) and, for relativistic, m > 0.
    void validate() const;
    /// "stable(0.5)" or "relativistic(0.5,1)".
    std::string label() const;
};

/// phi(lambda): lambda^alpha, or (lambda + m^(1/alpha))^alpha - m.
double laplace_exponent(const SubordinatorSpec& spec, double lambda);

/// Density of the alpha-stable subordinator at time t. Closed form for
/// alpha = 1/2; otherwise Kanter's integral over (0, pi).
double stable_density(double alpha, double t, double s);
/// Kanter's integral for any alpha in (0,1), including 1/2.
double stable_density_integral(double alpha, double t, double s);
/// e^(-m^(1/alpha) s + m t) times the stable density.
double relativistic_density(double alpha, double m, double t, double s);
double subordinator_density(const SubordinatorSpec& spec, double t, double s);

/// P(S_t > u), by quadrature of the density (closed form for alpha = 1/2 stable).
double subordinator_survival(const SubordinatorSpec& spec, double t, double u);
/// Smallest u (to within 1e-6 relative) with P(S_t > u) <= eps.
double subordinator_upper_quantile(const SubordinatorSpec& spec, double t, double eps);

/// Point below which s * eta_t(s) < 1e-40.
double subordinator_lower_cutoff(const SubordinatorSpec& spec, double t);

/// Integral of e^(-lambda s) eta_t(s) ds; lambda = 0 gives the total mass.
double numerical_laplace_transform(const SubordinatorSpec& spec, double t, double lambda);

struct TailReport {
    double limit = 0.0;    // alpha / Gamma(1 - alpha), the u -> infinity limit of eta_t(u) u^(1+alpha) / t
    double u0 = 0.0;       // ratio within a factor 2 of the limit for u >= u0 t^(1/alpha)
    double c_upper = 0.0;  // sup of the ratio over u >= u0 t^(1/alpha)
    double c_lower = 0.0;  // inf of the ratio over the same range
    bool finite = false;
};

struct DensityVerification {
    SubordinatorSpec spec;
    double t = 0.0;
    std::vector<double> lambdas;
    std::vector<double> rel_errors;
    double max_rel_error = 0.0;
    double normalization_error = 0.0;
    TailReport tail;
};

DensityVerification verify_density(const SubordinatorSpec& spec, double t, const std::vector<double>& lambdas);
TailReport stable_tail_report(double alpha, double t);

/// Log-spaced grid of n points on [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace fraclab
