#pragma once

#include "fsl/poly2.hpp"

#include <array>
#include <string>

namespace fsl {

/// The vector field p d/dx + q d/dy.
struct PlanarField {
    Poly2 p;
    Poly2 q;

    bool is_exact() const { return p.is_exact() && q.is_exact(); }
    std::array<double, 2> eval(double x, double y) const { return {p.eval(x, y), q.eval(x, y)}; }
    PlanarField to_float() const { return {p.to_float(), q.to_float()}; }
    /// Exchanges the roles of the two coordinates.
    PlanarField swapped() const { return {q.swapped(), p.swapped()}; }
    bool near(const PlanarField& o, double tol) const { return p.near(o.p, tol) && q.near(o.q, tol); }
    friend bool operator==(const PlanarField& a, const PlanarField& b) { return a.p == b.p && a.q == b.q; }
};

/// Pullback before any monomial denominator is cleared:
/// the field equals numerator / (coeff * u^i v^j).
struct FieldQuotient {
    PlanarField numerator;
    Scalar denom_coeff{1};
    Exponent denom_exp{0, 0};

    bool is_polynomial() const { return denom_exp == Exponent{0, 0}; }
    /// The polynomial field; throws NotDivisible if a denominator remains.
    PlanarField polynomial() const;
};

/// Coordinate change old = linear * new + translation.
struct AffineMap2 {
    std::array<std::array<Scalar, 2>, 2> linear{{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}};
    std::array<Scalar, 2> translation{Scalar(0), Scalar(0)};

    static AffineMap2 identity() { return {}; }
    static AffineMap2 scaling(const Scalar& sx, const Scalar& sy);
    static AffineMap2 shift(const Scalar& tx, const Scalar& ty);
    static AffineMap2 swap();

    Scalar det() const { return linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0]; }
    bool is_exact() const;
    /// Throws SingularMap when det is (numerically) zero.
    AffineMap2 inverse() const;
};

/// Pullback of `field` by (x, y) = (sub_x(u, v), sub_y(u, v)): solves
/// J (u', v') = (p, q) o sub with Cramer's rule. det J must be a monomial
/// times a unit (NonMonomialDenominator otherwise); common monomial factors
/// of the numerators are cancelled against it.
FieldQuotient substitute(const PlanarField& field, const Poly2& sub_x, const Poly2& sub_y);

/// Componentwise exact quotient by divisor^power; NotDivisible otherwise.
/// In float mode the remainder must be negligible relative to the field size.
PlanarField divide_exact(const PlanarField& field, const Poly2& divisor, unsigned power);

/// Conjugate field in the new coordinates of `map`.
PlanarField pullback_affine(const PlanarField& field, const AffineMap2& map);

}  // namespace fsl
