#pragma once

#include "fsl/normal_form.hpp"

#include <string>
#include <vector>

namespace fsl {

enum class ChartKind {
    XDirectional,         // (x, y) = (u, u v), divisor u = 0
    XDirectionalSwapped,  // (x, y) = (v, u v), divisor v = 0
    PiPlus,               // (x, y) = (u (1 - v), u v), divisor u = 0
    PiMinus,              // (x, y) = (-u (1 - v), u v), divisor u = 0
};

struct BlowupChart {
    ChartKind kind = ChartKind::XDirectional;
    unsigned divide_power = 1;
};

std::string to_string(ChartKind k);
/// Parses a chart name ("u,uv", "v,uv", "pi+", "pi-"); UnsupportedChart otherwise.
ChartKind chart_from_name(const std::string& name);

/// (sub_x, sub_y) of a chart, polynomials in (u, v).
std::pair<Poly2, Poly2> chart_map(ChartKind k);
/// The divisor variable of a chart as a polynomial (u or v).
Poly2 chart_divisor(ChartKind k);

struct BlowupResult {
    PlanarField field;
    /// Set when field = (P u, Q v); then `factors` holds (P, Q).
    bool factored = false;
    PlanarField factors;
    std::string factorization_note;
};

/// Pullback by the chart followed by exact division by divisor^divide_power.
BlowupResult blow_up(const PlanarField& field, const BlowupChart& chart);

struct DivisorRoot {
    Scalar location;
    int multiplicity = 1;
    bool nonzero_eigenvalue = false;
};

/// Singular points of Y = (u,uv)^* X / u on the divisor u = 0.
struct DivisorReport {
    UPoly q_on_divisor;  // Q(0, v)
    Scalar discriminant;
    bool discriminant_matches_minus_d = false;
    /// Real roots of Q(0, v); v = 0 appears when c = 1.
    std::vector<DivisorRoot> roots;
    Scalar p_origin;  // P(0, 0)
    Scalar q_origin;  // Q(0, 0)
    bool near_double_root = false;

    /// Roots other than v = 0 (which is always singular).
    int extra_singularities() const;
};

DivisorReport divisor_report(const NormalFormField& nf);

/// Saddle data at the two divisor points of the charts pi+ and pi-.
struct SaddleData {
    Scalar lambda_plus;
    Scalar lambda_minus;
    // P1, P2 of X+ and X- (in their own (x, y)), restricted to the axes.
    UPoly p1_plus_x, p2_plus_x, p1_plus_y, p2_plus_y;
    UPoly p1_minus_x, p2_minus_x, p1_minus_y, p2_minus_y;
    // From the pullback.
    RationalFunction1 r12_minus, r21_minus, r12_plus, r21_plus;
    // Closed forms in (a, b, c) and in f1, g1 along the fiber.
    RationalFunction1 r12_minus_closed, r21_minus_closed, r12_plus_closed, r21_plus_closed;
};

/// Closed forms of R21- and R12+ on the divisor, rational in (a, b, c).
RationalFunction1 r21_minus_closed_form(const Invariants& inv);
RationalFunction1 r12_plus_closed_form(const Invariants& inv);

/// Requires d > 0 (NotAFakeSaddle otherwise).
SaddleData saddle_data(const NormalFormField& nf);

}  // namespace fsl
