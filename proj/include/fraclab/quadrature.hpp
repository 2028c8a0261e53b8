#pragma once

#include <functional>

namespace fraclab {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;
    int pieces = 0;
};

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_floor = 1e-300;
    unsigned max_depth = 18;
};

/// Adaptive Gauss-Kronrod on [a, b]. Throws NumericalError when the error
/// estimate stays far above the requested tolerance.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadOptions& opt = {});

/// Integral of f over [s_lo, s_hi] in the variable y = log s, split into unit pieces of y.
QuadResult integrate_log(const std::function<double(double)>& f, double s_lo, double s_hi,
                         const QuadOptions& opt = {});

}  // namespace fraclab
