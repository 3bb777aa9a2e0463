#include "fsl/quadrature.hpp"

#include "fsl/errors.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>

namespace fsl {

namespace {

constexpr std::array<double, 8> kXk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                       0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                       0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                       0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                       0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                       0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                       0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the center.
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo, hi, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    const double fc = f(mid);
    double kronrod = kWk[7] * fc, gauss = kWg[3] * fc;
    for (int k = 0; k < 7; ++k) {
        const double dx = half * kXk[k];
        const double pair = f(mid - dx) + f(mid + dx);
        kronrod += kWk[k] * pair;
        if (k % 2 == 1) gauss += kWg[k / 2] * pair;
    }
    return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureConfig& cfg) {
    QuadratureResult out;
    if (lo == hi) return out;
    std::priority_queue<Panel> panels;
    panels.push(gauss_kronrod(f, lo, hi));
    out.evaluations = 15;
    double value = panels.top().value, error = panels.top().error;
    while (error > cfg.abs_tol) {
        if (out.evaluations + 30 > cfg.max_evaluations) {
            throw QuadratureNonConvergent("quadrature on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                          "] stopped at error " + std::to_string(error) + " after " +
                                          std::to_string(out.evaluations) + " evaluations");
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            throw QuadratureNonConvergent("quadrature panel collapsed near " + std::to_string(mid));
        }
        const Panel left = gauss_kronrod(f, worst.lo, mid), right = gauss_kronrod(f, mid, worst.hi);
        out.evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        if (!std::isfinite(value)) throw QuadratureNonConvergent("non-finite integrand value");
    }
    // Resum to shed the drift of the running updates.
    value = 0.0;
    error = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    out.value = value;
    out.error = error;
    return out;
}

}  // namespace fsl
