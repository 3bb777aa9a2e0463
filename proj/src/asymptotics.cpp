#include "fsl/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fsl {

namespace {

constexpr double kPi = std::numbers::pi;

double coeff_scale(const UPoly& p) {
    double m = 0.0;
    for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c.to_double()));
    return std::max(m, 1.0);
}

/// Exact or float division by t with a tolerance scaled to the coefficients.
UPoly drop_root_at_zero(const UPoly& p) { return p.divide_by_t(p.is_exact() ? 0.0 : 1e-10 * coeff_scale(p)); }

/// Regular part (g - c f)/x as a polynomial, c = g(0).
UPoly regular_numerator(const NormalFormField& nf) {
    const UPoly f = nf.f1_on_fiber(), g = nf.g1_on_fiber();
    return drop_root_at_zero(g - g.coeff(0) * f);
}

double cauchy_bound(const UPoly& p) {
    const double lead = std::abs(p.leading().to_double());
    double m = 0.0;
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, std::abs(p.coeff(k).to_double()) / lead);
    return 1.0 + m;
}

double checked_d(const Invariants& inv) {
    if (inv.d.sign() <= 0) throw NotHyperbolicFakeSaddle("needs d > 0, got d = " + inv.d.str());
    return inv.d.to_double();
}

/// Neville extrapolation of values(h) to h = 0.
double extrapolate_to_zero(const std::vector<double>& h, std::vector<double> v) {
    const std::size_t n = h.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i) v[i] = (h[i + m] * v[i] - h[i] * v[i + 1]) / (h[i + m] - h[i]);
    return v[0];
}

}  // namespace

void check_sections(const NormalFormField& nf, const SectionPair& s) {
    if (!(s.alpha < 0.0 && s.omega > 0.0) || !std::isfinite(s.alpha) || !std::isfinite(s.omega))
        throw SectionInvalid("sections need alpha < 0 < omega");
    const UPoly f = nf.f1_on_fiber();
    if (!root_free_on(f, Scalar::exact_from_double(s.alpha), Scalar::exact_from_double(s.omega)))
        throw SectionInvalid("f1(x, 0) vanishes on [alpha, omega]");
    constexpr int kSamples = 1000;
    for (int k = 0; k <= kSamples; ++k) {
        const double x = s.alpha + (s.omega - s.alpha) * k / kSamples;
        if (!(f.eval(x) > 0.0)) throw SectionInvalid("f1(x, 0) is not positive at x = " + std::to_string(x));
    }
}

double pv_integral(const NormalFormField& nf, const SectionPair& s, double* error_estimate) {
    check_sections(nf, s);
    const UPoly f = nf.f1_on_fiber().to_float(), n = regular_numerator(nf).to_float();
    const double c = nf.g1_on_fiber().coeff(0).to_double();
    const auto q = integrate_adaptive([&](double x) { return n.eval(x) / f.eval(x); }, s.alpha, s.omega);
    if (error_estimate) *error_estimate = q.error;
    return c * std::log(std::abs(s.omega / s.alpha)) + q.value;
}

double pv_integral_eps_oracle(const NormalFormField& nf, const SectionPair& s, const std::vector<double>& eps_sequence) {
    check_sections(nf, s);
    if (eps_sequence.size() < 2) throw SectionInvalid("eps oracle needs at least two eps values");
    const UPoly f = nf.f1_on_fiber().to_float(), g = nf.g1_on_fiber().to_float();
    auto raw = [&](double x) { return g.eval(x) / (x * f.eval(x)); };
    const QuadratureConfig cfg{1e-12, 1000000};
    std::vector<double> values;
    for (double eps : eps_sequence) {
        if (!(eps > 0.0) || eps >= std::min(-s.alpha, s.omega)) throw SectionInvalid("eps outside (0, min(|alpha|, omega))");
        values.push_back(integrate_adaptive(raw, s.alpha, -eps, cfg).value + integrate_adaptive(raw, eps, s.omega, cfg).value);
    }
    return extrapolate_to_zero(eps_sequence, values);
}

double pv_integral_sym_infinite(const NormalFormField& nf, double* error_estimate) {
    const UPoly f = nf.f1_on_fiber().to_float(), g = nf.g1_on_fiber().to_float();
    if (g.degree() > f.degree())
        throw TailNotIntegrable("deg g1(x,0) = " + std::to_string(g.degree()) + " exceeds deg f1(x,0) = " +
                                std::to_string(f.degree()));
    const double bound = cauchy_bound(f);
    if (f.degree() > 0 && count_real_roots(f, Scalar(-bound), Scalar(bound)) != 0)
        throw SectionInvalid("f1(x, 0) has a real root");

    // Laurent data of g/f at infinity: g/f = sum_k s_k x^{-k}.
    const int df = f.degree(), dg = g.degree(), shift = df - dg;
    auto rev = [](const UPoly& p, int k) { return p.coeff(p.degree() - k).to_double(); };
    std::vector<double> series(4 + 1, 0.0);  // series of G~/F~ in t = 1/x
    for (int k = 0; k <= 4; ++k) {
        double acc = k <= dg ? rev(g, k) : 0.0;
        for (int j = 1; j <= k; ++j) acc -= (j <= df ? rev(f, j) : 0.0) * series[k - j];
        series[k] = acc / rev(f, 0);
    }
    auto laurent = [&](int k) { return k - shift >= 0 && k - shift <= 4 ? series[k - shift] : 0.0; };
    // h = (g/f - c)/x = sum_k r_k x^{-k-1}; the odd-in-x part cancels on symmetric tails.
    const double r1 = laurent(1), r3 = laurent(3);

    const UPoly n = regular_numerator(nf).to_float();
    auto h = [&](double x) { return n.eval(x) / f.eval(x); };
    double radius = 8.0 * bound, err = 0.0;
    auto q0 = integrate_adaptive(h, -radius, radius);
    double inner = q0.value, estimate = inner + 2.0 * r1 / radius + 2.0 * r3 / (3.0 * std::pow(radius, 3));
    err += q0.error;
    for (int it = 0; it < 40; ++it) {
        const auto right = integrate_adaptive(h, radius, 2.0 * radius), left = integrate_adaptive(h, -2.0 * radius, -radius);
        radius *= 2.0;
        inner += right.value + left.value;
        err += right.error + left.error;
        const double next = inner + 2.0 * r1 / radius + 2.0 * r3 / (3.0 * std::pow(radius, 3));
        const double change = std::abs(next - estimate);
        estimate = next;
        if (change < 1e-8) {
            if (error_estimate) *error_estimate = err + change;
            return estimate;
        }
    }
    throw QuadratureNonConvergent("symmetric infinite PV did not settle");
}

double gamma0(const Invariants& inv) {
    const double d = checked_d(inv);
    const double a = inv.a.to_double(), b = inv.b.to_double(), c = inv.c.to_double();
    return kPi * (2.0 * b - c * (a + b)) / std::sqrt(d);
}

std::pair<double, double> gamma_pm(const NormalFormField& nf, const SectionPair& s) {
    const double g0 = gamma0(invariants(nf));
    const double pv = pv_integral(nf, s);
    return {pv + g0, pv - g0};
}

std::pair<double, double> gamma_pm_infinite(const NormalFormField& nf) {
    const double g0 = gamma0(invariants(nf));
    const double pv = pv_integral_sym_infinite(nf);
    return {pv + g0, pv - g0};
}

double F_arctan(double a, double b, double c) {
    const double d = 4.0 * (1.0 - c) - (a - b) * (a - b);
    if (!(d > 0.0)) throw NotHyperbolicFakeSaddle("needs d > 0");
    const double r = std::sqrt(d);
    return std::atan((b - a - 2.0) / r) - std::atan((b - a + 2.0 - 2.0 * c) / r) + std::atan((-b + a - 2.0) / r) -
           std::atan((-b + a + 2.0 - 2.0 * c) / r);
}

namespace {

/// int_0^u (R(t) + k) dt / t with the removable singularity divided out.
double log_l(const RationalFunction1& r, const Scalar& k, double u, const char* name, std::vector<double>& errors) {
    const RationalFunction1 shifted = r.plus(k);
    const UPoly num = drop_root_at_zero(shifted.num).to_float(), den = shifted.den.to_float();
    if (!root_free_on(shifted.den, Scalar(0), Scalar::exact_from_double(u)))
        throw IntegrandSingularOnPath(std::string("denominator of the ") + name + " integrand vanishes on [0, " +
                                      std::to_string(u) + "]");
    const auto q = integrate_adaptive([&](double t) { return num.eval(t) / den.eval(t); }, 0.0, u);
    errors.push_back(q.error);
    return q.value;
}

}  // namespace

LIntegrals l_integrals(const NormalFormField& nf, const SectionPair& s) {
    check_sections(nf, s);
    const SaddleData sd = saddle_data(nf);
    LIntegrals out{};
    out.log_l1_minus = log_l(sd.r12_minus, sd.lambda_plus, -s.alpha, "L1-", out.errors);
    out.log_l2_minus = log_l(sd.r21_minus, sd.lambda_minus, 1.0, "L2-", out.errors);
    out.log_l1_plus = log_l(sd.r12_plus, Scalar(1) / sd.lambda_plus, 1.0, "L1+", out.errors);
    out.log_l2_plus = log_l(sd.r21_plus, sd.lambda_plus, s.omega, "L2+", out.errors);
    return out;
}

double delta00_via_L(const NormalFormField& nf, const SectionPair& s, LIntegrals* detail) {
    const LIntegrals L = l_integrals(nf, s);
    if (detail) *detail = L;
    const double lambda = (Scalar(1) - invariants(nf).c).to_double();
    const double alpha = s.alpha, omega = s.omega;
    // Corner derivatives of the section maps, in the order
    // sigma_111^-, sigma_120^-, sigma_210^-, sigma_221^-, sigma_111^+, sigma_120^+, sigma_210^+, sigma_221^+.
    const double s111m = -1.0 / alpha, s120m = -alpha, s210m = 1.0, s221m = 1.0;
    const double s111p = 1.0, s120p = 1.0, s210p = omega, s221p = 1.0 / omega;
    const double log_num = std::log(s111m) + lambda * std::log(s120m) + lambda * L.log_l2_minus +
                           lambda * std::log(s111p) + std::log(s120p) + L.log_l2_plus;
    const double log_den = L.log_l1_minus + lambda * std::log(s221m) + std::log(s210m) + lambda * L.log_l1_plus +
                           std::log(s221p) + lambda * std::log(s210p);
    return std::exp(log_num - log_den);
}

double log_l1_plus_beta(double u, const Invariants& inv) {
    const double a = inv.a.to_double(), b = inv.b.to_double(), c = inv.c.to_double();
    const double r = std::sqrt(checked_d(inv));
    const double k = -((a + b) * c - 2.0 * b) / ((1.0 - c) * r);
    const double base = 2.0 * (1.0 - c) + b - a;
    return k * (std::atan((base + 2.0 * (a - b + c - 2.0) * u) / r) - std::atan(base / r));
}

double log_l1_plus_closed(double u, const Invariants& inv) {
    const double a = inv.a.to_double(), b = inv.b.to_double(), c = inv.c.to_double();
    checked_d(inv);
    if (!(c < 1.0)) throw NotHyperbolicFakeSaddle("needs c < 1");
    const double q1 = a - b + 2.0 * c - 2.0, q2 = -a + b - c + 2.0;
    auto Q = [&](double t) { return 1.0 - c + q1 * t + q2 * t * t; };
    double qmin = std::min(Q(0.0), Q(u));
    if (q2 != 0.0) {
        const double vertex = -q1 / (2.0 * q2);
        if (vertex > std::min(0.0, u) && vertex < std::max(0.0, u)) qmin = std::min(qmin, Q(vertex));
    }
    if (!(qmin > 0.0)) throw IntegrandSingularOnPath("quadratic under the logarithm vanishes on [0, u]");
    return c / (2.0 * (1.0 - c)) * std::log(Q(u) / (1.0 - c)) + log_l1_plus_beta(u, inv);
}

double log_l2_minus_closed(double u, const Invariants& inv) {
    return log_l1_plus_closed(u, Invariants::from_abc(-inv.a, -inv.b, inv.c));
}

TransitionReport transition_report(const NormalFormField& nf, const SectionPair& s) {
    TransitionReport r;
    r.sections = s;
    r.gamma0 = gamma0(invariants(nf));
    double err = 0.0;
    r.pv = pv_integral(nf, s, &err);
    r.quadrature_error_estimates.push_back(err);
    r.gamma_plus = r.pv + r.gamma0;
    r.gamma_minus = r.pv - r.gamma0;
    r.delta00_closed = std::exp(r.gamma_plus);
    LIntegrals L;
    r.delta00_via_L = delta00_via_L(nf, s, &L);
    r.has_delta00_via_L = true;
    r.quadrature_error_estimates.insert(r.quadrature_error_estimates.end(), L.errors.begin(), L.errors.end());
    return r;
}

TransitionReport transition_report_infinite(const NormalFormField& nf) {
    TransitionReport r;
    r.infinite_sections = true;
    r.gamma0 = gamma0(invariants(nf));
    double err = 0.0;
    r.pv = pv_integral_sym_infinite(nf, &err);
    r.quadrature_error_estimates.push_back(err);
    r.gamma_plus = r.pv + r.gamma0;
    r.gamma_minus = r.pv - r.gamma0;
    r.delta00_closed = std::exp(r.gamma_plus);
    return r;
}

void to_json(json& j, const SectionPair& s) { j = json{{"alpha", s.alpha}, {"omega", s.omega}}; }

void to_json(json& j, const TransitionReport& r) {
    j = json{{"pv", r.pv},
             {"gamma0", r.gamma0},
             {"gamma_plus", r.gamma_plus},
             {"gamma_minus", r.gamma_minus},
             {"delta00_closed", r.delta00_closed},
             {"quadrature_error_estimates", r.quadrature_error_estimates}};
    if (r.has_delta00_via_L) j["delta00_via_L"] = r.delta00_via_L;
    if (r.infinite_sections)
        j["sections"] = "infinite";
    else
        j["sections"] = r.sections;
}

}  // namespace fsl
