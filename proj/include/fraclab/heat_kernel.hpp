#pragma once

#include "fraclab/geometry.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <memory>
#include <string>
#include <vector>

namespace fraclab {

class EigenCache;

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Continuous-time walk on a vertex graph. Each vertex jumps at total rate
// L^(d_w n), split over its cells and, within a cell, uniformly over the other
// K-1 corners. Killed vertices are removed from the state space; jumps into
// them are lost mass.
struct Generator {
    std::shared_ptr<const VertexGraph> graph;
    double time_scale = 1.0;
    std::vector<int> state_vertex;
    std::vector<int> state_of_vertex;  // -1 for killed vertices
    std::vector<double> measure;       // per state
    std::vector<double> weight;        // incident cells per state
    Eigen::SparseMatrix<double, Eigen::RowMajor> rates;  // Q, diagonal = -(total rate)
    bool conservative = true;

    int states() const { return static_cast<int>(state_vertex.size()); }
    /// D^(1/2) (-Q) D^(-1/2); symmetric.
    Eigen::MatrixXd symmetric_form() const;
};

Generator build_generator(const FractalSystem& system, std::shared_ptr<const VertexGraph> graph,
                          const std::vector<int>& killed = {}, double time_scale = -1.0);

// g(t,x,y) = sum_k e^(-lambda_k t) phi_k(x) phi_k(y), phi_k orthonormal in L^2(mu).
class SpectralKernel {
public:
    SpectralKernel() = default;
    /// Takes eigenpairs (lambda, u) of the symmetric form and sets phi = D^(-1/2) u.
    /// Negative eigenvalues are rounding noise and clamped to 0; on conservative
    /// generators the ground mode is set to exactly (0, total mass^(-1/2)).
    SpectralKernel(const Generator& gen, const std::vector<double>& eigenvalues, const Eigen::MatrixXd& vectors);

    int states() const { return static_cast<int>(eigenvalues_.size()); }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const RowMatrix& phi() const { return phi_; }
    const std::vector<double>& measure() const { return measure_; }
    const std::vector<int>& state_vertex() const { return state_vertex_; }
    int state_of_vertex(int v) const { return state_of_vertex_[v]; }
    double raw_min_eigenvalue() const { return raw_min_eigenvalue_; }
    bool conservative() const { return conservative_; }

    std::vector<double> heat_weights(double t) const;
    /// sum_k w_k phi_k(x) phi_k(y) over graph vertices, summed in mode order; 0 if killed.
    double evaluate(const std::vector<double>& weights, int x, int y) const;
    double heat(double t, int x, int y) const { return evaluate(heat_weights(t), x, y); }
    /// Kernel matrix restricted to the given graph vertices (all must be live states).
    Eigen::MatrixXd block(const std::vector<double>& weights, const std::vector<int>& vertices) const;
    /// Full operator sum_k f_k phi_k phi_k^T mu on the state space.
    Eigen::MatrixXd operator_matrix(const std::vector<double>& weights) const;

private:
    std::vector<double> eigenvalues_;
    RowMatrix phi_;  // states x modes
    std::vector<double> measure_;
    std::vector<int> state_vertex_;
    std::vector<int> state_of_vertex_;
    double raw_min_eigenvalue_ = 0.0;
    bool conservative_ = true;
};

/// Dense symmetric eigendecomposition of the symmetric form.
SpectralKernel spectral_decompose(const Generator& gen);

enum class Boundary { reflected, dirichlet };

struct KernelModel {
    int M = 0;
    int n = 0;
    Boundary boundary = Boundary::reflected;
    std::shared_ptr<const VertexGraph> graph;
    Generator generator;
    SpectralKernel spectral;
};

/// The walk on the compact graph of K^<M> is the folded walk, so this is the reflected kernel g_M.
KernelModel reflected_model(const FractalSystem& system, int M, int n, EigenCache* cache = nullptr);

/// Window K^<M'> with its two far corners L^M' v_2, ..., L^M' v_K killed: the free walk on the unbounded
/// fractal stopped on leaving the window.
KernelModel dirichlet_window_model(const FractalSystem& system, int M_window, int n, EigenCache* cache = nullptr);

struct KernelTable {
    int M = 0;
    int n = 0;
    std::vector<double> times;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<double>> values;  // [time][pair]
};

KernelTable reflected_kernel(const KernelModel& model, const std::vector<double>& times,
                             const std::vector<std::pair<int, int>>& pairs, int threads = 1);

// Fitted envelope g(t,x,y) <= K3 t^(-d_s/2) exp(-K4 (r t^(-1/d_w))^beta), beta = d_w/(d_J-1).
struct SubGaussianFit {
    double K3 = 0.0;
    double K4 = 0.0;
    double volume_constant = 0.0;  // mu(B(x,r)) <= V r^d on the window
    int samples = 0;
};

// Free kernel on the unbounded fractal, bracketed on a window:
// g_dirichlet <= g_free <= g_reflected pointwise on the window.
struct TruncatedFreeKernel {
    KernelModel reflected;
    KernelModel dirichlet;
    SubGaussianFit fit;
    double max_time = 0.0;
    double tail_radius = 0.0;
    double tail_bound = 0.0;  // fitted sub-Gaussian mass beyond tail_radius at max_time
};

SubGaussianFit fit_subgaussian(const FractalSystem& system, const KernelModel& window, double max_time);
double subgaussian_tail_bound(const FractalSystem& system, const SubGaussianFit& fit, double radius, double t);

/// Throws TruncationError if the fitted tail mass at max_time exceeds the tolerance.
TruncatedFreeKernel unbounded_kernel_truncated(const FractalSystem& system, int M_window, int n, double max_time,
                                               double tolerance = 1e-6, EigenCache* cache = nullptr);

/// Max relative gap (upper - lower) / upper over the given window vertices.
double sandwich_width(const TruncatedFreeKernel& free, const std::vector<double>& w_reflected,
                      const std::vector<double>& w_dirichlet, const std::vector<int>& vertices);

struct FoldingCheck {
    double max_rel_error_upper = 0.0;  // sum of window-reflected preimage values vs g_M
    double max_rel_error_lower = 0.0;  // sum of window-dirichlet preimage values vs g_M
    int samples = 0;
};

class LabelMap;

/// Compares sum_{y' in preimages(y)} g(t,x,y') with g_M(t,x,y) for non-vertex y in K^<M>.
FoldingCheck folding_crosscheck(const TruncatedFreeKernel& free, const LabelMap& labels, const KernelModel& reflected,
                                double t, const std::vector<std::pair<int, int>>& pairs);

struct WalkDimensionEstimate {
    std::vector<int> levels;
    std::vector<double> exit_times;
    std::vector<double> ratios;      // T_{n+1} / T_n
    std::vector<double> estimates;   // log(ratio) / log L
    double limit = 0.0;
};

/// Expected exit time from K^<0> of the unit-rate walk started at the first
/// essential vertex and absorbed at the others.
double expected_exit_time(const FractalSystem& system, int n);
WalkDimensionEstimate estimate_walk_dimension(const FractalSystem& system, int n_max);

struct ScalingCheck {
    double max_rel_deviation = 0.0;
    int samples = 0;
};

/// Compares g at (M, n) with L^d g(L^dw t, Lx, Ly) computed at (M+1, n), which
/// resolves the dilated domain one level deeper. Pairs index the coarse graph.
ScalingCheck check_scaling_property(const FractalSystem& system, const KernelModel& coarse, const KernelModel& fine,
                                    const std::vector<double>& times, const std::vector<std::pair<int, int>>& pairs);

}  // namespace fraclab
