#pragma once

#include "fsl/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace fsl {

template <std::size_t N>
using Vec = std::array<double, N>;

struct OdeTolerances {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_steps = 1000000;
    double initial_step = 0.0;  // 0 picks a heuristic first step
    double max_step = 0.0;      // 0 means unbounded
};

/// A terminal event: fires when g changes sign in the given direction
/// (+1 rising, -1 falling, 0 either) between two accepted steps.
template <std::size_t N>
struct OdeEvent {
    std::function<double(double, const Vec<N>&)> g;
    int direction = 0;
};

template <std::size_t N>
struct OdeOutcome {
    double s = 0.0;
    Vec<N> y{};
    int event = -1;  // index of the event that stopped the run, -1 if s_end was reached
    long steps = 0;
    double accumulated_error = 0.0;  // sum of local error estimates (max norm)
};

/// Dormand-Prince 5(4) with the order-4 continuous extension. Integrates
/// from s0 towards s_end (either direction) and stops at the first event.
template <std::size_t N>
class DormandPrince {
public:
    using Rhs = std::function<Vec<N>(double, const Vec<N>&)>;
    /// Called after every accepted step with (s, y, local error estimate).
    using Observer = std::function<void(double, const Vec<N>&, double)>;

    DormandPrince(Rhs rhs, OdeTolerances tol) : rhs_(std::move(rhs)), tol_(tol) {}

    OdeOutcome<N> run(double s0, Vec<N> y0, double s_end, const std::vector<OdeEvent<N>>& events = {},
                      const Observer& observe = nullptr) const {
        OdeOutcome<N> out;
        const double dir = s_end >= s0 ? 1.0 : -1.0;
        double s = s0;
        Vec<N> y = y0;
        Vec<N> k1 = eval(s, y);
        double h = tol_.initial_step > 0.0 ? tol_.initial_step : first_step(s, y, k1, std::abs(s_end - s0));
        std::vector<double> g_prev;
        for (const auto& e : events) g_prev.push_back(e.g(s, y));
        if (observe) observe(s, y, 0.0);

        while (dir * (s_end - s) > 0.0) {
            if (out.steps >= tol_.max_steps)
                throw MaxStepsExceeded("integration stopped after " + std::to_string(out.steps) + " steps at s = " +
                                       std::to_string(s));
            if (tol_.max_step > 0.0) h = std::min(h, tol_.max_step);
            bool last = false;
            if (h >= std::abs(s_end - s)) {
                h = std::abs(s_end - s);
                last = true;
            }
            if (h < 1e-14 * std::max(1.0, std::abs(s)))
                throw StepUnderflow("step size underflow at s = " + std::to_string(s));

            Step st = attempt(s, y, k1, dir * h);
            if (st.err_norm > 1.0) {
                h *= std::max(0.2, 0.9 * std::pow(st.err_norm, -0.2));
                continue;
            }
            ++out.steps;
            const double s_new = last ? s_end : s + dir * h;

            // Event detection on the accepted step.
            int fired = -1;
            double s_fire = s_new;
            for (std::size_t i = 0; i < events.size(); ++i) {
                const double g_new = events[i].g(s_new, st.y_new);
                const double g_old = g_prev[i];
                const bool rising = g_old < 0.0 && g_new >= 0.0, falling = g_old > 0.0 && g_new <= 0.0;
                const bool crosses = events[i].direction > 0 ? rising : events[i].direction < 0 ? falling : rising || falling;
                if (crosses) {
                    const double loc = locate(st, s, dir * h, events[i], g_old);
                    if (fired < 0 || dir * (loc - s_fire) < 0.0) {
                        fired = static_cast<int>(i);
                        s_fire = loc;
                    }
                }
                g_prev[i] = g_new;
            }
            out.accumulated_error += st.err_abs;
            if (fired >= 0) {
                out.s = s_fire;
                out.y = st.dense(s_fire, s, dir * h);
                out.event = fired;
                if (observe) observe(out.s, out.y, st.err_abs);
                return out;
            }
            s = s_new;
            y = st.y_new;
            k1 = st.k7;
            if (observe) observe(s, y, st.err_abs);
            const double fac = st.err_norm > 0.0 ? 0.9 * std::pow(st.err_norm, -0.2) : 5.0;
            h *= std::clamp(fac, 0.2, 5.0);
        }
        out.s = s;
        out.y = y;
        return out;
    }

private:
    struct Step {
        Vec<N> y0, y_new, k7;
        std::array<Vec<N>, 5> r;  // continuous extension coefficients
        double err_norm = 0.0;
        double err_abs = 0.0;

        Vec<N> dense(double s_eval, double s0, double h) const {
            const double t = (s_eval - s0) / h, t1 = 1.0 - t;
            Vec<N> v;
            for (std::size_t i = 0; i < N; ++i)
                v[i] = r[0][i] + t * (r[1][i] + t1 * (r[2][i] + t * (r[3][i] + t1 * r[4][i])));
            return v;
        }
    };

    Vec<N> eval(double s, const Vec<N>& y) const {
        Vec<N> f = rhs_(s, y);
        for (double v : f)
            if (!std::isfinite(v)) throw StepUnderflow("non-finite right-hand side at s = " + std::to_string(s));
        return f;
    }

    double first_step(double s, const Vec<N>& y, const Vec<N>& f, double span) const {
        double ny = 0.0, nf = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sc = tol_.abs_tol + tol_.rel_tol * std::abs(y[i]);
            ny = std::max(ny, std::abs(y[i]) / sc);
            nf = std::max(nf, std::abs(f[i]) / sc);
        }
        (void)s;
        double h = (ny < 1e-5 || nf < 1e-5) ? 1e-6 : 0.01 * ny / nf;
        return std::min(h, span > 0.0 ? span : h);
    }

    Step attempt(double s, const Vec<N>& y, const Vec<N>& k1, double h) const {
        static constexpr double a21 = 1.0 / 5.0;
        static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
        static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
        static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                                a54 = -212.0 / 729.0;
        static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                                a65 = -5103.0 / 18656.0;
        static constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                                a76 = 11.0 / 84.0;
        static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                                e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
        static constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                                d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                                d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

        Vec<N> t;
        auto stage = [&](std::initializer_list<std::pair<double, const Vec<N>*>> terms) {
            for (std::size_t i = 0; i < N; ++i) {
                double acc = 0.0;
                for (const auto& [c, k] : terms) acc += c * (*k)[i];
                t[i] = y[i] + h * acc;
            }
            return t;
        };
        const Vec<N> k2 = eval(s + h / 5.0, stage({{a21, &k1}}));
        const Vec<N> k3 = eval(s + 3.0 * h / 10.0, stage({{a31, &k1}, {a32, &k2}}));
        const Vec<N> k4 = eval(s + 4.0 * h / 5.0, stage({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const Vec<N> k5 = eval(s + 8.0 * h / 9.0, stage({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const Vec<N> k6 = eval(s + h, stage({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        Step st;
        st.y0 = y;
        st.y_new = stage({{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
        st.k7 = eval(s + h, st.y_new);

        double norm = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double err = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * st.k7[i]);
            const double sc = tol_.abs_tol + tol_.rel_tol * std::max(std::abs(y[i]), std::abs(st.y_new[i]));
            norm = std::max(norm, std::abs(err) / sc);
            st.err_abs = std::max(st.err_abs, std::abs(err));
        }
        st.err_norm = norm;

        for (std::size_t i = 0; i < N; ++i) {
            const double diff = st.y_new[i] - y[i];
            const double bspl = h * k1[i] - diff;
            st.r[0][i] = y[i];
            st.r[1][i] = diff;
            st.r[2][i] = bspl;
            st.r[3][i] = diff - h * st.k7[i] - bspl;
            st.r[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * st.k7[i]);
        }
        return st;
    }

    /// Bisection on the dense output for the sign change of g inside the step.
    double locate(const Step& st, double s0, double h, const OdeEvent<N>& ev, double g0) const {
        double lo = s0, hi = s0 + h, glo = g0;
        for (int it = 0; it < 200 && std::abs(hi - lo) > 1e-12 * std::max(1.0, std::abs(lo)); ++it) {
            const double mid = 0.5 * (lo + hi);
            const double gm = ev.g(mid, st.dense(mid, s0, h));
            if ((glo < 0.0 && gm >= 0.0) || (glo > 0.0 && gm <= 0.0)) {
                hi = mid;
            } else {
                lo = mid;
                glo = gm;
            }
        }
        return hi;
    }

    Rhs rhs_;
    OdeTolerances tol_;
};

}  // namespace fsl
