#include "fsl/field.hpp"

#include "fsl/errors.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace fsl {

PlanarField FieldQuotient::polynomial() const {
    if (!is_polynomial()) {
        const std::string den = "(" + denom_coeff.str() + ")*u^" + std::to_string(denom_exp.first) + "*v^" +
                                std::to_string(denom_exp.second);
        throw NotDivisible("pullback", "denominator " + den + " does not cancel");
    }
    return numerator;
}

AffineMap2 AffineMap2::scaling(const Scalar& sx, const Scalar& sy) {
    AffineMap2 m;
    m.linear = {{{sx, Scalar(0)}, {Scalar(0), sy}}};
    return m;
}

AffineMap2 AffineMap2::shift(const Scalar& tx, const Scalar& ty) {
    AffineMap2 m;
    m.translation = {tx, ty};
    return m;
}

AffineMap2 AffineMap2::swap() {
    AffineMap2 m;
    m.linear = {{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}};
    return m;
}

bool AffineMap2::is_exact() const {
    for (const auto& row : linear)
        for (const auto& s : row)
            if (!s.is_exact()) return false;
    return translation[0].is_exact() && translation[1].is_exact();
}

AffineMap2 AffineMap2::inverse() const {
    const Scalar d = det();
    if (d.is_zero() || std::abs(d.to_double()) < 1e-300) throw SingularMap("affine map has zero determinant");
    AffineMap2 inv;
    inv.linear = {{{linear[1][1] / d, -linear[0][1] / d}, {-linear[1][0] / d, linear[0][0] / d}}};
    inv.translation = {-(inv.linear[0][0] * translation[0] + inv.linear[0][1] * translation[1]),
                       -(inv.linear[1][0] * translation[0] + inv.linear[1][1] * translation[1])};
    return inv;
}

namespace {

// Largest (i, j) with u^i v^j dividing every term of p.
Exponent monomial_content(const Poly2& p) {
    if (p.is_zero()) return {UINT_MAX, UINT_MAX};
    Exponent m{UINT_MAX, UINT_MAX};
    for (const auto& [e, c] : p.terms()) {
        m.first = std::min(m.first, e.first);
        m.second = std::min(m.second, e.second);
    }
    return m;
}

Poly2 divide_by_monomial(const Poly2& p, Exponent e, const Scalar& c) {
    Poly2 out;
    for (const auto& [k, v] : p.terms()) out.add_term(k.first - e.first, k.second - e.second, v / c);
    return out;
}

}  // namespace

FieldQuotient substitute(const PlanarField& field, const Poly2& sub_x, const Poly2& sub_y) {
    const Poly2 xu = sub_x.dx(), xv = sub_x.dy();
    const Poly2 yu = sub_y.dx(), yv = sub_y.dy();
    const Poly2 det = xu * yv - xv * yu;
    if (det.terms().size() != 1)
        throw NonMonomialDenominator("Jacobian determinant " + det.str("u", "v") + " is not a monomial");
    const auto& [det_e, det_c] = *det.terms().begin();

    const Poly2 pt = field.p.compose(sub_x, sub_y);
    const Poly2 qt = field.q.compose(sub_x, sub_y);
    // Cramer: (u', v') = adj(J) (pt, qt) / det J.
    PlanarField num{yv * pt - xv * qt, xu * qt - yu * pt};

    Exponent mp = monomial_content(num.p), mq = monomial_content(num.q);
    Exponent cancel{std::min({det_e.first, mp.first, mq.first}), std::min({det_e.second, mp.second, mq.second})};

    FieldQuotient out;
    out.numerator = {divide_by_monomial(num.p, cancel, det_c), divide_by_monomial(num.q, cancel, det_c)};
    out.denom_coeff = Scalar(1);
    out.denom_exp = {det_e.first - cancel.first, det_e.second - cancel.second};
    return out;
}

PlanarField divide_exact(const PlanarField& field, const Poly2& divisor, unsigned power) {
    if (power == 0) return field;
    const Poly2 d = divisor.pow(power);
    const double scale = std::max(field.p.max_abs_coeff(), field.q.max_abs_coeff());
    auto one = [&](const Poly2& comp, const char* name) {
        auto [quo, rem] = comp.divmod(d);
        if (!negligible(rem, scale)) throw NotDivisible(name, rem.str());
        return quo;
    };
    return {one(field.p, "p"), one(field.q, "q")};
}

PlanarField pullback_affine(const PlanarField& field, const AffineMap2& map) {
    const Scalar d = map.det();
    if (d.is_zero() || std::abs(d.to_double()) < 1e-300) throw SingularMap("affine map has zero determinant");
    const Poly2 sx = Poly2::monomial(1, 0, map.linear[0][0]) + Poly2::monomial(0, 1, map.linear[0][1]) +
                     Poly2(map.translation[0]);
    const Poly2 sy = Poly2::monomial(1, 0, map.linear[1][0]) + Poly2::monomial(0, 1, map.linear[1][1]) +
                     Poly2(map.translation[1]);
    return substitute(field, sx, sy).polynomial();
}

}  // namespace fsl
