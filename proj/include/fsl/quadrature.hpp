#pragma once

#include <functional>

namespace fsl {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // sum of the Kronrod-Gauss differences
    long evaluations = 0;
};

struct QuadratureConfig {
    double abs_tol = 1e-10;
    long max_evaluations = 1000000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [lo, hi]. The
/// worst panel is bisected until the summed error estimate meets abs_tol;
/// QuadratureNonConvergent when the evaluation cap is hit first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureConfig& cfg = {});

}  // namespace fsl
