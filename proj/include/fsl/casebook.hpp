#pragma once

#include "fsl/flow.hpp"
#include "fsl/normal_form.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace fsl {

struct CaseCheck {
    std::string name;
    json computed;
    json expected;
    double tolerance = 0.0;  // 0 for exact comparisons
    bool pass = false;
    std::string detail;
};

struct CaseResult {
    std::string id;
    json inputs = json::object();
    std::vector<CaseCheck> checks;
    json notes = json::object();

    bool passed() const;
};

void to_json(json& j, const CaseCheck& c);
void to_json(json& j, const CaseResult& r);

struct CaseOptions {
    IntegratorConfig cfg;
    /// When non-empty, cases with figure data write orbit CSVs below this directory.
    std::string dump_dir;
};

/// X4 -> Y0 -> Y1 in the chart (v, uv) and the shift (u - 1, v); classification
/// of Y1, its transition slope, and the raw X4 transit.
CaseResult run_X4_chain(const CaseOptions& opt = {});
/// The phase portrait field (a, b, c) = (1, -1, -1): closed-form and measured
/// slopes on both sides, first-integral drift.
CaseResult run_example6(const CaseOptions& opt = {});
/// Z -> Y_mu -> X_mu, the monodromy threshold, gamma_pm, return slope and center.
CaseResult run_Z_chain(const Scalar& alpha, const Scalar& beta, const CaseOptions& opt = {});
/// Two-stage resolution of X3 (and X4 under the same script).
CaseResult run_X3_script(const CaseOptions& opt = {});

/// Registered case ids, sorted.
std::vector<std::string> case_ids();
/// UnknownCase for an unregistered id.
CaseResult run_case(const std::string& id, const CaseOptions& opt = {});
/// All registered cases, ordered by id.
std::vector<CaseResult> run_all(const CaseOptions& opt = {});

void print_table(std::ostream& os, const std::vector<CaseResult>& results);

// Outcome of the scripted resolution of one field.
struct ScriptPoint {
    Scalar w;                             // location on the stage-2 divisor s = 0
    std::array<std::array<Scalar, 2>, 2> linear;
    bool saddle_node = false;             // exactly one zero eigenvalue
    bool hyperbolic = false;              // det != 0 and real eigenvalues of opposite sign or nodes
    bool weak_transverse_to_divisor = false;
    bool on_strict_transform_of_fiber = false;
};

struct ScriptResult {
    PlanarField stage1;                   // (v, uv)^* X / v
    PlanarField shifted;                  // (u - 1, v)^* stage1
    std::array<std::array<Scalar, 2>, 2> shifted_linear;
    PlanarField stage2;                   // (s, s^2 w)^* shifted / s
    std::vector<ScriptPoint> points;
};

/// Chart (v, uv), shift of the divisor point u = -1 to the origin, weighted
/// chart (s, s^2 w). Throws Error if the stage-2 divisor is not invariant or
/// its singular points are not found by the quadratic solver.
ScriptResult resolution_script(const PlanarField& field);

struct Window {
    double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
};

/// Orbits through `orbits` seeds on a circle inside the window, each followed
/// backward and forward by arclength until it leaves the window or the length
/// budget runs out. A half-orbit that runs into a singular point is redone in
/// time parametrization. BadWindow for an empty window.
std::vector<Trajectory> phase_portrait(const PlanarField& field, const Window& w, int orbits,
                                       const IntegratorConfig& cfg = {});
/// orbit_NN.csv per orbit plus portrait.gp; returns the written paths.
std::vector<std::string> write_portrait(const std::string& dir, const std::vector<Trajectory>& orbits,
                                        const Window& w, const std::string& title);

}  // namespace fsl
