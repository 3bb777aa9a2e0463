#pragma once

#include "fsl/blowup.hpp"
#include "fsl/json_io.hpp"
#include "fsl/quadrature.hpp"

#include <utility>
#include <vector>

namespace fsl {

/// Transverse sections {x = alpha} and {x = omega} on either side of the origin.
struct SectionPair {
    double alpha = -1.0;
    double omega = 1.0;
};

/// Throws SectionInvalid unless alpha < 0 < omega and f1(x, 0) > 0 on [alpha, omega].
void check_sections(const NormalFormField& nf, const SectionPair& s);

/// PV of g1(x,0) / (x f1(x,0)) over [alpha, omega], computed as
/// c log|omega/alpha| + integral of (g1/f1 - c)/x, the latter continuous.
double pv_integral(const NormalFormField& nf, const SectionPair& s, double* error_estimate = nullptr);

/// Symmetric epsilon-limit of the raw integrand, extrapolated to eps = 0.
double pv_integral_eps_oracle(const NormalFormField& nf, const SectionPair& s,
                              const std::vector<double>& eps_sequence = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6});

/// PV over the whole line, limit of [-R, R] as R grows. Needs f1(x, 0) > 0
/// on R and deg g1(x,0) <= deg f1(x,0) (TailNotIntegrable otherwise).
double pv_integral_sym_infinite(const NormalFormField& nf, double* error_estimate = nullptr);

/// pi (2b - c(a+b)) / sqrt(d); NotHyperbolicFakeSaddle unless d > 0.
double gamma0(const Invariants& inv);

/// (pv + gamma0, pv - gamma0): exponents of the slope on y > 0 and y < 0.
std::pair<double, double> gamma_pm(const NormalFormField& nf, const SectionPair& s);
std::pair<double, double> gamma_pm_infinite(const NormalFormField& nf);

/// The four-arctan combination, evaluated literally.
double F_arctan(double a, double b, double c);

/// log L of the four corner integrals, each int_0^u (R(t) + k) dt / t.
struct LIntegrals {
    double log_l1_minus;  // at u = -alpha
    double log_l2_minus;  // at u = 1
    double log_l1_plus;   // at u = 1
    double log_l2_plus;   // at u = omega
    std::vector<double> errors;
};

LIntegrals l_integrals(const NormalFormField& nf, const SectionPair& s);

/// Delta_00 assembled from the corner derivatives and the L-integrals.
double delta00_via_L(const NormalFormField& nf, const SectionPair& s, LIntegrals* detail = nullptr);

/// Closed form alpha(u) + beta(u) of log L1+(u); log L2-(u) is the same with (a, b) negated.
/// IntegrandSingularOnPath when the quadratic under the logarithm vanishes on [0, u].
double log_l1_plus_closed(double u, const Invariants& inv);
double log_l2_minus_closed(double u, const Invariants& inv);
/// The arctan part beta(u) alone.
double log_l1_plus_beta(double u, const Invariants& inv);

struct TransitionReport {
    double pv = 0.0;
    double gamma0 = 0.0;
    double gamma_plus = 0.0;
    double gamma_minus = 0.0;
    double delta00_closed = 0.0;
    double delta00_via_L = 0.0;
    bool has_delta00_via_L = false;
    std::vector<double> quadrature_error_estimates;
    SectionPair sections;
    bool infinite_sections = false;
};

TransitionReport transition_report(const NormalFormField& nf, const SectionPair& s);
/// Infinite symmetric sections; the L-path is not available there.
TransitionReport transition_report_infinite(const NormalFormField& nf);

void to_json(json& j, const TransitionReport& r);
void to_json(json& j, const SectionPair& s);

}  // namespace fsl
