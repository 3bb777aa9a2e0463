#pragma once

#include "fsl/asymptotics.hpp"
#include "fsl/ode.hpp"

#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace fsl {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_steps = 1000000;
    /// Graph parametrization is left when |x'| / (x^2 + y^2) drops below this.
    double min_denominator = 1e-8;
};

enum class Parametrization { Time, GraphOverX, Arclength };

std::string to_string(Parametrization p);

struct TrajectorySample {
    double s;  // time, x, or arclength depending on the parametrization
    double x;
    double y;
    double step_error;
};

struct TrajectoryEvent {
    std::string kind;
    double s;
    double x;
    double y;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    std::vector<TrajectoryEvent> events;
    Parametrization parametrization = Parametrization::Time;
    bool reached_stop = false;
    double accumulated_error = 0.0;

    const TrajectorySample& back() const { return samples.back(); }
};

struct StopCondition {
    enum class Kind { XReaches, YReaches, TimeReaches, SectionCrossing };
    Kind kind = Kind::TimeReaches;
    double value = 0.0;
    /// SectionCrossing: the line {(p - point) . normal = 0}, crossed with
    /// (p - point) . normal increasing (direction +1), decreasing (-1) or either (0).
    std::array<double, 2> point{};
    std::array<double, 2> normal{};
    int direction = 0;

    static StopCondition x_reaches(double v) { return {Kind::XReaches, v, {}, {}, 0}; }
    static StopCondition y_reaches(double v) { return {Kind::YReaches, v, {}, {}, 0}; }
    static StopCondition time_reaches(double t) { return {Kind::TimeReaches, t, {}, {}, 0}; }
    static StopCondition section(std::array<double, 2> point, std::array<double, 2> normal, int direction) {
        return {Kind::SectionCrossing, 0.0, point, normal, direction};
    }
};

/// Integrates the field from `start` until the stop condition or until the
/// orbit leaves the box |x|, |y| <= guard. Time and arclength parametrizations
/// accept every stop kind; GraphOverX only XReaches.
Trajectory integrate(const PlanarField& field, std::array<double, 2> start, const StopCondition& stop,
                     const IntegratorConfig& cfg = {}, Parametrization param = Parametrization::Time,
                     double guard = 1e6);

void write_csv(std::ostream& os, const Trajectory& t);
void to_json(json& j, const Trajectory& t);

struct SlopeEstimate {
    double value = 0.0;
    std::vector<double> offsets_used;
    std::vector<double> per_offset_slopes;
    std::vector<double> rejected_offsets;
    double residual = 0.0;
    double fitted_exponent = 0.0;
    bool fallback = false;  // exponent fit failed, smallest-offset slope reported
    std::string note;
};

void to_json(json& j, const SlopeEstimate& s);

/// Extrapolates slope(y0) = S + C y0^e to y0 = 0 with e free, from the last
/// three offsets. Offsets must decrease.
SlopeEstimate extrapolate_slopes(const std::vector<double>& offsets, const std::vector<double>& slopes);

std::vector<double> default_offsets();
/// 1e-4 down to 1e-8 by decades, for returns in weighted coordinates.
std::vector<double> deep_offsets();

/// Tolerances tightened by 100. Slope measurements run every offset at both
/// settings and take the difference as the error of the finer run.
IntegratorConfig refined(const IntegratorConfig& cfg);

/// One transit from (alpha, y0) to x = omega for a field leaving y = 0
/// invariant, carried out in (x, log|y|).
struct TransitResult {
    double y_end = 0.0;
    double log_ratio = 0.0;     // log(y_end / y0)
    double log_error = 0.0;     // accumulated local error in log|y|
    int parametrization_switches = 0;
    Trajectory trajectory;      // samples (s, x, y); s is x in graph mode
};

TransitResult transit(const PlanarField& field, double alpha, double omega, double y0, const IntegratorConfig& cfg = {},
                      bool keep_trajectory = false, double guard = 1e3);

/// Empirical slope of the transition map on the side y > 0 (side = +1) or y < 0 (side = -1).
SlopeEstimate transition_slope(const NormalFormField& nf, const SectionPair& sections, int side,
                               const std::vector<double>& offsets = default_offsets(), const IntegratorConfig& cfg = {},
                               double max_residual = std::numeric_limits<double>::infinity());

/// Return sections through the origin: the positive x half-axis or the positive y half-axis.
enum class ReturnSection { PositiveX, PositiveY };

std::string to_string(ReturnSection s);

/// One full turn around the origin from a point on the section, in weighted
/// polar coordinates x = r^p cos t, y = r^q sin t with (p, q) = weights.
/// r0 and r_end are section coordinates; guard bounds the section coordinate scale r^k.
struct ReturnResult {
    double r_end = 0.0;
    double log_ratio = 0.0;
    double log_error = 0.0;
    int turn_direction = 0;  // +1 counterclockwise
};

ReturnResult return_once(const PlanarField& field, ReturnSection section, double r0, const IntegratorConfig& cfg = {},
                         double guard = 1.0, std::array<int, 2> weights = {1, 1});

/// Empirical slope of the first-return map on the section.
SlopeEstimate return_slope(const PlanarField& field, ReturnSection section,
                           const std::vector<double>& offsets = default_offsets(), const IntegratorConfig& cfg = {},
                           double guard = 1.0, double max_residual = std::numeric_limits<double>::infinity(),
                           std::array<int, 2> weights = {1, 1});

/// Max |H(sample) - H(start)|, with jumps by multiples of branch_period
/// between consecutive samples unwound (0 disables unwinding).
double conservation_check(const std::function<double(double, double)>& H, const Trajectory& traj,
                          double branch_period = 0.0);

enum class ProbeVerdict { Monodromic, Transit, Undecided };

std::string to_string(ProbeVerdict v);

/// Orbits from a ring at weighted radius box * e^-depth around the origin,
/// followed forward and backward in the coordinates x = r^p cos(theta),
/// y = r^q sin(theta) with (p, q) = weights: monodromic when every orbit winds
/// a full turn inside the box, transit when some orbit leaves the box or falls
/// into the origin without winding. Weights matching the quasi-homogeneous
/// leading part keep the orbit shapes independent of the depth.
ProbeVerdict monodromy_probe(const PlanarField& field, double box, const IntegratorConfig& cfg = {}, int ring = 8,
                             std::array<int, 2> weights = {1, 1}, double depth = 15.0);

}  // namespace fsl
