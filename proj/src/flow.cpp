#include "fsl/flow.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace fsl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Double-precision evaluator with precomputed monomial list.
class CompiledPoly {
public:
    explicit CompiledPoly(const Poly2& p) {
        for (const auto& [e, c] : p.terms()) {
            terms_.push_back({e.first, e.second, c.to_double()});
            max_ = std::max({max_, e.first, e.second});
        }
    }
    double operator()(const double* xp, const double* yp) const {
        double acc = 0.0;
        for (const auto& t : terms_) acc += t.c * xp[t.i] * yp[t.j];
        return acc;
    }
    unsigned max_exponent() const { return max_; }

private:
    struct Term {
        unsigned i, j;
        double c;
    };
    std::vector<Term> terms_;
    unsigned max_ = 0;
};

class CompiledField {
public:
    explicit CompiledField(const PlanarField& f) : p_(f.p), q_(f.q) {
        n_ = std::max(p_.max_exponent(), q_.max_exponent()) + 1;
    }
    std::array<double, 2> operator()(double x, double y) const {
        double xp[32], yp[32];
        powers(x, xp);
        powers(y, yp);
        return {p_(xp, yp), q_(xp, yp)};
    }

protected:
    void powers(double v, double* out) const {
        out[0] = 1.0;
        for (unsigned k = 1; k < n_; ++k) out[k] = out[k - 1] * v;
    }
    CompiledPoly p_, q_;
    unsigned n_ = 1;
};

/// p, q and w = q / y of a field leaving y = 0 invariant.
class FiberField : public CompiledField {
public:
    FiberField(const PlanarField& f, const Poly2& q_over_y) : CompiledField(f), w_(q_over_y) {
        n_ = std::max(n_, w_.max_exponent() + 1);
    }
    /// (x', (log|y|)')
    std::array<double, 2> log_form(double x, double y) const {
        double xp[32], yp[32];
        powers(x, xp);
        powers(y, yp);
        return {p_(xp, yp), w_(xp, yp)};
    }

private:
    CompiledPoly w_;
};

void check_degree(const PlanarField& f) {
    if (std::max(f.p.degree(), f.q.degree()) > 30) throw Error("field degree above 30 is not supported");
}

OdeTolerances tolerances(const IntegratorConfig& cfg) {
    OdeTolerances t;
    t.rel_tol = cfg.rel_tol;
    t.abs_tol = cfg.abs_tol;
    t.max_steps = cfg.max_steps;
    return t;
}

}  // namespace

std::string to_string(Parametrization p) {
    switch (p) {
        case Parametrization::Time: return "time";
        case Parametrization::GraphOverX: return "graph-over-x";
        case Parametrization::Arclength: return "arclength";
    }
    return "unknown";
}

Trajectory integrate(const PlanarField& field, std::array<double, 2> start, const StopCondition& stop,
                     const IntegratorConfig& cfg, Parametrization param, double guard) {
    check_degree(field);
    const CompiledField F(field);
    Trajectory traj;
    traj.parametrization = param;

    auto stop_g = [stop](double x, double y) {
        switch (stop.kind) {
            case StopCondition::Kind::XReaches: return x - stop.value;
            case StopCondition::Kind::YReaches: return y - stop.value;
            case StopCondition::Kind::SectionCrossing:
                return (x - stop.point[0]) * stop.normal[0] + (y - stop.point[1]) * stop.normal[1];
            case StopCondition::Kind::TimeReaches: break;
        }
        return 1.0;
    };
    const int stop_dir = stop.kind == StopCondition::Kind::SectionCrossing ? stop.direction : 0;
    const bool has_stop_event = stop.kind != StopCondition::Kind::TimeReaches;

    if (param == Parametrization::GraphOverX) {
        if (stop.kind != StopCondition::Kind::XReaches)
            throw Error("graph-over-x parametrization needs an x stop condition");
        DormandPrince<1> dp(
            [&](double x, const Vec<1>& y) {
                const auto v = F(x, y[0]);
                return Vec<1>{v[1] / v[0]};
            },
            tolerances(cfg));
        std::vector<OdeEvent<1>> ev{{[guard](double, const Vec<1>& y) { return guard - std::abs(y[0]); }, -1}};
        const auto out = dp.run(start[0], {start[1]}, stop.value, ev, [&](double s, const Vec<1>& y, double err) {
            traj.samples.push_back({s, s, y[0], err});
        });
        traj.accumulated_error = out.accumulated_error;
        if (out.event == 0) {
            traj.events.push_back({"guard", out.s, out.s, out.y[0]});
        } else {
            traj.reached_stop = true;
            traj.events.push_back({"stop", out.s, out.s, out.y[0]});
        }
        return traj;
    }

    const bool arclength = param == Parametrization::Arclength;
    DormandPrince<2> dp(
        [&](double, const Vec<2>& z) {
            auto v = F(z[0], z[1]);
            if (arclength) {
                const double n = std::hypot(v[0], v[1]);
                if (n == 0.0) throw StepUnderflow("singular point on the orbit");
                v[0] /= n;
                v[1] /= n;
            }
            return Vec<2>{v[0], v[1]};
        },
        tolerances(cfg));
    std::vector<OdeEvent<2>> ev;
    ev.push_back({[guard](double, const Vec<2>& z) { return guard - std::max(std::abs(z[0]), std::abs(z[1])); }, -1});
    if (has_stop_event) ev.push_back({[&](double, const Vec<2>& z) { return stop_g(z[0], z[1]); }, stop_dir});
    const double s_end = stop.kind == StopCondition::Kind::TimeReaches ? stop.value : 1e12;
    const auto out = dp.run(0.0, {start[0], start[1]}, s_end, ev, [&](double s, const Vec<2>& z, double err) {
        traj.samples.push_back({s, z[0], z[1], err});
    });
    traj.accumulated_error = out.accumulated_error;
    if (out.event == 0) {
        traj.events.push_back({"guard", out.s, out.y[0], out.y[1]});
    } else if (out.event == 1 || !has_stop_event) {
        traj.reached_stop = true;
        traj.events.push_back({"stop", out.s, out.y[0], out.y[1]});
    }
    return traj;
}

void write_csv(std::ostream& os, const Trajectory& t) {
    os << "t_or_x,x,y,step_error\n";
    os.precision(17);
    for (const auto& s : t.samples) os << s.s << ',' << s.x << ',' << s.y << ',' << s.step_error << '\n';
}

void to_json(json& j, const Trajectory& t) {
    json samples = json::array(), events = json::array();
    for (const auto& s : t.samples) samples.push_back({s.s, s.x, s.y, s.step_error});
    for (const auto& e : t.events) events.push_back({{"kind", e.kind}, {"s", e.s}, {"x", e.x}, {"y", e.y}});
    j = json{{"parametrization", to_string(t.parametrization)},
             {"columns", {"t_or_x", "x", "y", "step_error"}},
             {"samples", samples},
             {"events", events},
             {"reached_stop", t.reached_stop}};
}

void to_json(json& j, const SlopeEstimate& s) {
    j = json{{"value", s.value},
             {"offsets_used", s.offsets_used},
             {"per_offset_slopes", s.per_offset_slopes},
             {"rejected_offsets", s.rejected_offsets},
             {"residual", s.residual},
             {"fitted_exponent", s.fitted_exponent},
             {"fallback", s.fallback}};
    if (!s.note.empty()) j["note"] = s.note;
}

IntegratorConfig refined(const IntegratorConfig& cfg) {
    IntegratorConfig r = cfg;
    r.rel_tol = cfg.rel_tol / 100.0;
    r.abs_tol = cfg.abs_tol / 100.0;
    r.max_steps = cfg.max_steps * 10;
    return r;
}

std::vector<double> default_offsets() { return {1e-2, std::pow(10.0, -2.5), 1e-3, std::pow(10.0, -3.5), 1e-4}; }

std::vector<double> deep_offsets() { return {1e-4, 1e-5, 1e-6, 1e-7, 1e-8}; }

namespace {

/// Fit of S + C y^e through three points with e in (0, 2]; false if no such e.
bool three_point_fit(const double* y, const double* s, double& value, double& exponent) {
    const double d1 = s[1] - s[0], d2 = s[2] - s[1];
    if (d1 == 0.0 || d2 == 0.0) return false;
    const double rho = d2 / d1;
    auto phi = [&](double e) {
        return (std::pow(y[2], e) - std::pow(y[1], e)) / (std::pow(y[1], e) - std::pow(y[0], e)) - rho;
    };
    double lo = 1e-6, hi = 2.0;
    double flo = phi(lo), fhi = phi(hi);
    if (flo * fhi > 0.0) return false;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi), fm = phi(mid);
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    exponent = 0.5 * (lo + hi);
    const double c = d2 / (std::pow(y[2], exponent) - std::pow(y[1], exponent));
    value = s[2] - c * std::pow(y[2], exponent);
    return std::isfinite(value);
}

}  // namespace

SlopeEstimate extrapolate_slopes(const std::vector<double>& offsets, const std::vector<double>& slopes) {
    SlopeEstimate est;
    est.offsets_used = offsets;
    est.per_offset_slopes = slopes;
    const std::size_t n = slopes.size();
    if (n == 0) throw ExtrapolationUnstable("no usable offsets");
    const double last = slopes.back();
    double spread = 0.0;
    for (std::size_t i = n >= 3 ? n - 3 : 0; i < n; ++i) spread = std::max(spread, std::abs(slopes[i] - last));
    if (n < 3) {
        est.value = last;
        est.fallback = true;
        est.residual = n == 1 ? std::numeric_limits<double>::infinity() : spread;
        est.note = "fewer than three offsets";
        return est;
    }
    // Differences at rounding level carry no exponent information.
    const double flat = 1e-11 * std::max(1.0, std::abs(last));
    if (std::abs(slopes[n - 1] - slopes[n - 2]) <= flat && std::abs(slopes[n - 2] - slopes[n - 3]) <= flat) {
        est.value = last;
        est.residual = std::max(spread, flat);
        est.note = "slopes constant to rounding";
        return est;
    }
    double value = 0.0, exponent = 0.0;
    if (!three_point_fit(&offsets[n - 3], &slopes[n - 3], value, exponent)) {
        est.value = last;
        est.fallback = true;
        est.residual = std::max(spread, flat);
        est.note = "remainder exponent outside (0, 2]";
        return est;
    }
    est.value = value;
    est.fitted_exponent = exponent;
    double previous = 0.0, e_prev = 0.0;
    if (n >= 4 && three_point_fit(&offsets[n - 4], &slopes[n - 4], previous, e_prev)) {
        est.residual = std::abs(value - previous);
    } else {
        est.residual = std::abs(value - last);
    }
    est.residual = std::max(est.residual, flat);
    return est;
}

TransitResult transit(const PlanarField& field, double alpha, double omega, double y0, const IntegratorConfig& cfg,
                      bool keep_trajectory, double guard) {
    check_degree(field);
    if (!(alpha < omega) || y0 == 0.0) throw TransitDoesNotExist("transit needs alpha < omega and y0 != 0");
    Poly2 q_over_y;
    try {
        q_over_y = divide_exact(PlanarField{field.q, Poly2()}, Poly2::y(), 1).p;
    } catch (const NotDivisible&) {
        throw TransitDoesNotExist("the line y = 0 is not invariant");
    }
    const FiberField F(field, q_over_y);
    const double sgn = y0 > 0.0 ? 1.0 : -1.0;
    const double w_guard = std::log(guard), w_floor = -700.0;
    auto y_of = [sgn](double w) { return sgn * std::exp(w); };
    auto normalized_den = [&](double x, double w) {
        const double y = y_of(w);
        return F.log_form(x, y)[0] / (x * x + y * y);
    };

    TransitResult res;
    res.trajectory.parametrization = Parametrization::GraphOverX;
    const OdeTolerances tol = tolerances(cfg);
    double x = alpha, w = std::log(std::abs(y0));
    bool graph = normalized_den(x, w) >= cfg.min_denominator;
    auto record = [&](double s, double xx, double ww, double err) {
        if (keep_trajectory) res.trajectory.samples.push_back({s, xx, y_of(ww), err});
    };
    double s_offset = 0.0;  // arclength pieces are laid after the x range to keep samples monotone
    for (int pieces = 0; pieces < 1000; ++pieces) {
        if (graph) {
            DormandPrince<1> dp(
                [&](double xx, const Vec<1>& z) {
                    const auto v = F.log_form(xx, y_of(z[0]));
                    return Vec<1>{v[1] / v[0]};
                },
                tol);
            std::vector<OdeEvent<1>> ev{
                {[&](double xx, const Vec<1>& z) { return normalized_den(xx, z[0]) - cfg.min_denominator; }, -1},
                {[&](double, const Vec<1>& z) { return z[0] - w_guard; }, +1},
                {[&](double, const Vec<1>& z) { return z[0] - w_floor; }, -1}};
            const auto out = dp.run(x, {w}, omega, ev, [&](double s, const Vec<1>& z, double err) {
                if (pieces == 0 || s > x) record(s + s_offset, s, z[0], err);
            });
            res.log_error += out.accumulated_error;
            x = out.s;
            w = out.y[0];
            if (out.event < 0) break;
            if (out.event == 1) throw TransitDoesNotExist("orbit left the guard box before reaching the section");
            if (out.event == 2) throw TransitDoesNotExist("orbit collapsed onto the fiber");
            graph = false;
            ++res.parametrization_switches;
        } else {
            DormandPrince<2> dp(
                [&](double, const Vec<2>& z) {
                    const auto v = F.log_form(z[0], y_of(z[1]));
                    const double n = std::hypot(v[0], v[1]);
                    if (n == 0.0) throw StepUnderflow("singular point on the orbit");
                    return Vec<2>{v[0] / n, v[1] / n};
                },
                tol);
            const double back_limit = alpha - (omega - alpha);
            std::vector<OdeEvent<2>> ev{
                {[&](double, const Vec<2>& z) { return z[0] - omega; }, +1},
                {[&](double, const Vec<2>& z) { return normalized_den(z[0], z[1]) - 10.0 * cfg.min_denominator; }, +1},
                {[&](double, const Vec<2>& z) { return z[1] - w_guard; }, +1},
                {[&](double, const Vec<2>& z) { return z[1] - w_floor; }, -1},
                {[&](double, const Vec<2>& z) { return z[0] - back_limit; }, -1}};
            res.trajectory.parametrization = Parametrization::Arclength;
            const double base = x + s_offset;
            const auto out = dp.run(0.0, {x, w}, 1e9, ev, [&](double s, const Vec<2>& z, double err) {
                if (s > 0.0) record(base + s, z[0], z[1], err);
            });
            res.log_error += out.accumulated_error;
            s_offset = base + out.s - out.y[0];
            x = out.y[0];
            w = out.y[1];
            if (out.event == 0) break;
            if (out.event == 1) {
                graph = true;
                ++res.parametrization_switches;
                continue;
            }
            if (out.event == 2) throw TransitDoesNotExist("orbit left the guard box before reaching the section");
            if (out.event == 3) throw TransitDoesNotExist("orbit collapsed onto the fiber");
            if (out.event == 4) throw TransitDoesNotExist("orbit turned back");
            throw TransitDoesNotExist("arclength budget exhausted");
        }
        if (x >= omega) break;
    }
    if (x < omega - 1e-9 * std::max(1.0, std::abs(omega))) throw TransitDoesNotExist("too many parametrization switches");
    res.y_end = y_of(w);
    res.log_ratio = w - std::log(std::abs(y0));
    res.trajectory.reached_stop = true;
    res.trajectory.accumulated_error = res.log_error;
    return res;
}

SlopeEstimate transition_slope(const NormalFormField& nf, const SectionPair& sections, int side,
                               const std::vector<double>& offsets, const IntegratorConfig& cfg, double max_residual) {
    if (side != 1 && side != -1) throw Error("side must be +1 or -1");
    if (classify(invariants(nf)).verdict == Verdict::NotFakeSaddle)
        throw TransitDoesNotExist("classification: not a fake saddle, no transit past the origin");
    check_sections(nf, sections);
    const PlanarField field = nf.field();
    std::vector<double> used, slopes, rejected;
    double prev = std::numeric_limits<double>::infinity();
    for (double y0 : offsets) {
        if (!(y0 > 0.0) || !(y0 < prev)) throw Error("offsets must be positive and decreasing");
        prev = y0;
        const TransitResult coarse = transit(field, sections.alpha, sections.omega, side * y0, cfg);
        const TransitResult fine = transit(field, sections.alpha, sections.omega, side * y0, refined(cfg));
        if (std::abs(fine.log_ratio - coarse.log_ratio) + fine.log_error > 0.1) {
            rejected.push_back(y0);
            continue;
        }
        used.push_back(y0);
        slopes.push_back(std::exp(fine.log_ratio));
    }
    SlopeEstimate est = extrapolate_slopes(used, slopes);
    est.rejected_offsets = rejected;
    if (est.residual > max_residual)
        throw ExtrapolationUnstable("extrapolation residual " + std::to_string(est.residual) + " exceeds " +
                                   std::to_string(max_residual));
    return est;
}

std::string to_string(ReturnSection s) { return s == ReturnSection::PositiveX ? "y=0,x>0" : "x=0,y>0"; }

namespace {

/// (angle', log-radius') in the weighted polar coordinates x = r^p cos(theta),
/// y = r^q sin(theta), rho = log r, normalized to unit length.
Vec<2> weighted_polar_rhs(const CompiledField& F, const Vec<2>& z, double p, double q) {
    const double c = std::cos(z[0]), s = std::sin(z[0]);
    const double rp = std::exp(p * z[1]), rq = std::exp(q * z[1]);
    const auto v = F(rp * c, rq * s);
    const double A = v[0] / rp, B = v[1] / rq;
    const double th = p * c * B - q * s * A, rh = A * c + B * s;
    const double n = std::hypot(th, rh);
    if (n == 0.0 || !std::isfinite(n)) throw StepUnderflow("singular point on the orbit");
    return {th / n, rh / n};
}

}  // namespace

ReturnResult return_once(const PlanarField& field, ReturnSection section, double r0, const IntegratorConfig& cfg,
                         double guard, std::array<int, 2> weights) {
    check_degree(field);
    if (!(r0 > 0.0) || !(r0 < guard)) throw NoReturn("start radius outside (0, guard)");
    const CompiledField F(field);
    if (weights[0] < 1 || weights[1] < 1) throw Error("weights must be positive");
    const double wp = weights[0], wq = weights[1];
    const double theta0 = section == ReturnSection::PositiveX ? 0.0 : 0.5 * std::numbers::pi;
    // r0 is the section coordinate, which scales like r^k.
    const double k = section == ReturnSection::PositiveX ? wp : wq;
    const double rho0 = std::log(r0) / k;
    const Vec<2> start{theta0, rho0};
    auto rhs = [&](const Vec<2>& z) { return weighted_polar_rhs(F, z, wp, wq); };
    const Vec<2> d0 = rhs(start);
    if (std::abs(d0[0]) < 1e-12) throw NoReturn("orbit is tangent to the section at the start point");
    const double turn = d0[0] > 0.0 ? 1.0 : -1.0;
    DormandPrince<2> dp([&](double, const Vec<2>& z) { return rhs(z); }, tolerances(cfg));
    std::vector<OdeEvent<2>> ev{
        {[&](double, const Vec<2>& z) { return turn * (z[0] - theta0) - kTwoPi; }, +1},
        {[&](double, const Vec<2>& z) { return k * z[1] - std::log(guard); }, +1},
        {[&](double, const Vec<2>& z) { return z[1] - (rho0 - 60.0); }, -1},
        {[&](double, const Vec<2>& z) { return turn * (z[0] - theta0) + std::numbers::pi; }, -1}};
    OdeOutcome<2> out;
    try {
        out = dp.run(0.0, start, 1e9, ev);
    } catch (const MaxStepsExceeded& e) {
        throw NoReturn(std::string("no return within the step budget: ") + e.what());
    }
    if (out.event == 1) throw NoReturn("orbit left the guard box");
    if (out.event == 2) throw NoReturn("orbit falls into the origin");
    if (out.event == 3) throw NoReturn("orbit turned back");
    if (out.event != 0) throw NoReturn("arclength budget exhausted");
    ReturnResult res;
    res.log_ratio = k * (out.y[1] - rho0);
    res.r_end = std::exp(k * out.y[1]);
    res.log_error = out.accumulated_error;
    res.turn_direction = static_cast<int>(turn);
    return res;
}

SlopeEstimate return_slope(const PlanarField& field, ReturnSection section, const std::vector<double>& offsets,
                           const IntegratorConfig& cfg, double guard, double max_residual,
                           std::array<int, 2> weights) {
    std::vector<double> used, slopes, rejected;
    double prev = std::numeric_limits<double>::infinity();
    for (double r0 : offsets) {
        if (!(r0 > 0.0) || !(r0 < prev)) throw Error("offsets must be positive and decreasing");
        prev = r0;
        const ReturnResult coarse = return_once(field, section, r0, cfg, guard, weights);
        const ReturnResult fine = return_once(field, section, r0, refined(cfg), guard, weights);
        if (std::abs(fine.log_ratio - coarse.log_ratio) + fine.log_error > 0.1) {
            rejected.push_back(r0);
            continue;
        }
        used.push_back(r0);
        slopes.push_back(std::exp(fine.log_ratio));
    }
    SlopeEstimate est = extrapolate_slopes(used, slopes);
    est.rejected_offsets = rejected;
    est.note = est.note.empty() ? "section " + to_string(section) : est.note + "; section " + to_string(section);
    if (est.residual > max_residual)
        throw ExtrapolationUnstable("extrapolation residual " + std::to_string(est.residual) + " exceeds " +
                                   std::to_string(max_residual));
    return est;
}

double conservation_check(const std::function<double(double, double)>& H, const Trajectory& traj,
                          double branch_period) {
    if (traj.samples.empty()) return 0.0;
    const double h0 = H(traj.samples.front().x, traj.samples.front().y);
    double prev_raw = h0, shift = 0.0, drift = 0.0;
    for (const auto& s : traj.samples) {
        const double raw = H(s.x, s.y);
        if (!std::isfinite(raw)) throw BranchTrackingFailed("first integral undefined along the orbit");
        if (branch_period > 0.0) {
            const double jump = raw - prev_raw;
            const double k = std::round(jump / branch_period);
            if (k != 0.0) {
                if (std::abs(jump - k * branch_period) > 0.25 * branch_period)
                    throw BranchTrackingFailed("jump of the first integral is not a multiple of the branch period");
                shift -= k * branch_period;
            }
        }
        prev_raw = raw;
        drift = std::max(drift, std::abs(raw + shift - h0));
    }
    return drift;
}

std::string to_string(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::Monodromic: return "monodromic";
        case ProbeVerdict::Transit: return "transit";
        case ProbeVerdict::Undecided: return "undecided";
    }
    return "unknown";
}

ProbeVerdict monodromy_probe(const PlanarField& field, double box, const IntegratorConfig& cfg, int ring,
                             std::array<int, 2> weights, double depth) {
    if (weights[0] < 1 || weights[1] < 1) throw Error("probe weights must be positive");
    const double wp = weights[0], wq = weights[1];
    check_degree(field);
    const CompiledField F(field);
    const double rho_box = std::log(box), rho0 = rho_box - depth, rho_floor = rho0 - 100.0;
    enum class Fate { Wound, Exited, Sank, Stuck };
    auto follow = [&](double theta0, double direction) {
        DormandPrince<2> dp([&](double, const Vec<2>& z) { return weighted_polar_rhs(F, z, wp, wq); },
                            tolerances(cfg));
        std::vector<OdeEvent<2>> ev{{[&](double, const Vec<2>& z) { return std::abs(z[0] - theta0) - kTwoPi; }, +1},
                                    {[&](double, const Vec<2>& z) { return z[1] - rho_box; }, +1},
                                    {[&](double, const Vec<2>& z) { return z[1] - rho_floor; }, -1}};
        try {
            const auto out = dp.run(0.0, {theta0, rho0}, direction * 1e6, ev);
            if (out.event == 0) return Fate::Wound;
            if (out.event == 1) return Fate::Exited;
            if (out.event == 2) return Fate::Sank;
        } catch (const Error&) {
        }
        return Fate::Stuck;
    };
    bool all_wound = true, any_transit = false;
    for (int k = 0; k < ring; ++k) {
        const double theta0 = kTwoPi * (k + 0.5) / ring;
        const Fate fwd = follow(theta0, 1.0), bwd = follow(theta0, -1.0);
        const bool wound = fwd == Fate::Wound || bwd == Fate::Wound;
        all_wound = all_wound && wound;
        if (!wound && (fwd == Fate::Exited || bwd == Fate::Exited || fwd == Fate::Sank || bwd == Fate::Sank))
            any_transit = true;
    }
    if (all_wound) return ProbeVerdict::Monodromic;
    return any_transit ? ProbeVerdict::Transit : ProbeVerdict::Undecided;
}

}  // namespace fsl
