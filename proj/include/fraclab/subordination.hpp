#pragma once

#include "fraclab/heat_kernel.hpp"
#include "fraclab/subordinators.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fraclab {

// p(t,x,y) = sum_k e^(-t phi(lambda_k)) phi_k(x) phi_k(y).
class SubordinateKernel {
public:
    SubordinateKernel(const SpectralKernel& base, SubordinatorSpec spec);

    const SpectralKernel& base() const { return *base_; }
    const SubordinatorSpec& spec() const { return spec_; }
    const std::vector<double>& mapped_eigenvalues() const { return mapped_; }
    std::vector<double> weights(double t) const;
    double evaluate(double t, int x, int y) const { return base_->evaluate(weights(t), x, y); }

private:
    const SpectralKernel* base_;
    SubordinatorSpec spec_;
    std::vector<double> mapped_;
};

struct SubordinateTable {
    KernelTable table;
    std::string subordinator;
};

SubordinateTable subordinate_spectral(const KernelModel& model, const SubordinatorSpec& spec,
                                      const std::vector<double>& times, const std::vector<std::pair<int, int>>& pairs,
                                      int threads = 1);

struct QuadratureValue {
    double value = 0.0;
    double error = 0.0;
    double upper_limit = 0.0;
};

/// int_0^inf g(u) eta_t(u) du, evaluated as g_inf + int_0^U (g(u) - g_inf) eta_t(u) du with
/// U = max(quantile(eta_t, 1 - 1e-8), 10 flat_time); beyond U, g is taken as g_inf.
QuadratureValue subordinate_quadrature(const std::function<double(double)>& g, double g_inf,
                                       const SubordinatorSpec& spec, double t, double flat_time);

/// Same, with g(u) = g_M(u,x,y) evaluated from the spectral sum and held at g_inf once the
/// slowest mode has decayed below e^(-40).
QuadratureValue subordinate_quadrature(const SpectralKernel& base, const SubordinatorSpec& spec, double t, int x,
                                       int y, double flat_time);

}  // namespace fraclab
