#pragma once

#include "fraclab/heat_kernel.hpp"
#include "fraclab/subordinators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fraclab {

enum class FormKind {
    subgaussian,
    f_env,
    h_env,
    stable_form,
    relativistic_regime_1,
    relativistic_regime_2,
    relativistic_regime_3,
    flat,
};

const char* form_name(FormKind kind);
/// True for the forms with a decay constant in the exponent that is fitted.
bool form_is_exponential(FormKind kind);

struct FormParams {
    double d = 0.0;
    double dw = 0.0;
    double dJ = 0.0;
    double alpha = 0.5;
    double L = 2.0;
    int M = 0;

    static FormParams from_system(const FractalSystem& system, int M, double alpha = 0.5);
};

struct EnvelopeForm {
    FormKind kind = FormKind::flat;
    FormParams params;
    double c = 1.0;
};

/// The closed-form estimate shapes. Throws ConfigError for t <= 0, r < 0, or
/// (t, r) outside the domain of a relativistic regime form.
double evaluate_form(const EnvelopeForm& form, double t, double r);
/// The decay variable z with form = prefactor(t, r) * exp(-c z) for exponential forms.
double form_exponent(const EnvelopeForm& form, double t, double r);
double form_prefactor(const EnvelopeForm& form, double t, double r);

enum class ProcessKind { brownian, stable, relativistic };

enum class Regime {
    bm_short,
    bm_flat,
    stable_short,
    stable_flat,
    relativistic_flat,
    relativistic_1,
    relativistic_2,
    relativistic_3,
};

const char* regime_name(Regime r);
/// Stable: flat iff t >= L^(alpha M d_w). Relativistic: flat iff t >= L^(M d_w), then
/// regime 1 for t >= 1, else 2 for r >= 1 and 3 for r < 1. Brownian: flat iff t >= L^(M d_w).
Regime classify_regime(double t, double r, const FormParams& params, ProcessKind kind);

struct BoundSample {
    double t = 0.0;
    double r = 0.0;
    double kernel = 0.0;
};

struct PlotRow {
    double t = 0.0;
    double r = 0.0;
    double kernel = 0.0;
    double form = 0.0;
    double ratio = 0.0;
};

struct BoundReport {
    std::string claim;
    std::string process;  // "brownian" or a subordinator label
    std::string regime;
    std::string grid;
    std::string form;
    int n = 0;
    int samples = 0;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    double spread = 0.0;
    double threshold = 0.0;
    BoundSample min_at;  // samples attaining min_ratio and max_ratio
    BoundSample max_at;
    std::optional<double> fit_slope;       // least-squares decay constant
    std::optional<double> fit_r2;
    std::optional<double> decay_constant;  // constant used in the ratios: minimizes the spread
    std::optional<double> refinement_change;
    std::optional<double> max_violation;
    bool applicable = true;
    bool pass = false;
    std::string note;
    std::vector<PlotRow> plot;
};

/// Kernel values below this are raised to it for ratio statistics.
constexpr double kRatioClamp = 1e-14;

/// ratio = kernel / form over the samples. For exponential forms the least-squares
/// slope of -log(kernel / prefactor) on z is reported, and the ratios use the
/// decay constant c >= 0 that minimizes max/min.
/// Throws ConfigError on an empty sample set.
BoundReport fit_envelope_constants(const std::vector<BoundSample>& samples, EnvelopeForm form, double threshold);

struct SandwichReport {
    double upper_bound = 0.0;        // c1^(-d/d_w)
    double upper_attained = 0.0;     // value at (c1 L^(M d_w), 0)
    double lower_bound = 0.0;        // min of the two corners at r = L^M
    double lower_attained = 0.0;     // the same minimum, evaluated at its corner
    double stated_lower_bound = 0.0; // c2^(-d/d_w) exp(-c3 c1^(-d_w/(d_J-1)))
    double corner_c2 = 0.0;          // value at (c2 L^(M d_w), L^M)
    double corner_c2_closed = 0.0;   // c2^(-d/d_w) exp(-c3 c2^(-1/(d_J-1)))
    double sample_min = 0.0;
    double sample_max = 0.0;
    int samples = 0;
    bool within_bounds = false;      // every sample in [lower_bound, upper_bound] to 1e-12
    bool stated_lower_holds = false; // every sample >= stated_lower_bound - 1e-12
    bool corners_exact = false;      // attained values equal the closed forms to 1e-12
};

/// Evaluates f_{c3}(s, r) L^(Md) on s in [c1, c2] L^(M d_w), r in [0, L^M].
SandwichReport sandwich_check_f(double c1, double c2, double c3, const FormParams& params, int grid = 41);

// Inputs shared by the bound checks at one approximation level.
struct ClaimContext {
    const FractalSystem* system = nullptr;
    int M = 0;
    int n = 0;
    const KernelModel* reflected = nullptr;
    const TruncatedFreeKernel* free = nullptr;
    std::vector<std::pair<int, int>> pairs;  // base-graph vertex pairs
    int points_per_regime = 12;
    double t_min = 0.1;          // smallest time on short-time grids
    double flat_span = 100.0;    // flat grids run from the threshold to flat_span times it
    double spread_threshold = 10.0;
    double domination_tolerance = 1e-8;
    int plot_pairs = 50;
    unsigned seed = 0;
    int threads = 1;
};

/// Reports "stable-short" (p_S^M / p_S) and "stable-flat" (p_S^M L^(Md)).
std::vector<BoundReport> verify_stable_bounds(const ClaimContext& ctx, double alpha);

/// Reports "relativistic-flat", "relativistic-lower-domination", "relativistic-regime-1..3".
std::vector<BoundReport> verify_relativistic_bounds(const ClaimContext& ctx, double alpha, double m);

/// Reports "bm-short" (g_M against f_env) and "bm-flat" (g_M L^(Md)).
std::vector<BoundReport> verify_brownian_bounds(const ClaimContext& ctx, double flat_threshold);

/// Sets refinement_change = |spread / coarse spread - 1| and folds "within
/// tolerance" into pass.
void apply_refinement(BoundReport& fine, const BoundReport& coarse, double tolerance);

}  // namespace fraclab
