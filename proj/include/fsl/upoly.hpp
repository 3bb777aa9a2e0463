#pragma once

#include "fsl/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fsl {

/// Dense univariate polynomial, coefficients stored low degree first.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Scalar> coeffs);
    static UPoly constant(Scalar c) { return UPoly({std::move(c)}); }
    static UPoly identity() { return UPoly({Scalar(0), Scalar(1)}); }

    /// Degree, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_exact() const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int k) const;
    Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

    Scalar eval(const Scalar& t) const;
    double eval(double t) const;

    UPoly derivative() const;
    /// p(-t)
    UPoly reflected() const;
    UPoly to_float() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Scalar& s, const UPoly& p);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; the float branch drops the leading term explicitly.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    /// Divides by t, requiring the constant term to vanish (|c0| <= tol in float mode).
    UPoly divide_by_t(double tol = 0.0) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

/// Number of distinct real roots in the half-open interval (lo, hi], via a
/// Sturm sequence. Exact when the polynomial and the bounds are exact.
int count_real_roots(const UPoly& p, const Scalar& lo, const Scalar& hi);

/// True when p has no root on the closed interval [lo, hi].
bool root_free_on(const UPoly& p, const Scalar& lo, const Scalar& hi);

/// num / den as a pair of univariate polynomials.
struct RationalFunction1 {
    UPoly num;
    UPoly den;

    double eval(double t) const { return num.eval(t) / den.eval(t); }
    Scalar eval(const Scalar& t) const { return num.eval(t) / den.eval(t); }
    bool is_exact() const { return num.is_exact() && den.is_exact(); }
    /// f + k as a single fraction.
    RationalFunction1 plus(const Scalar& k) const { return {num + k * den, den}; }
    /// Cross-multiplied exact equality.
    bool same_as(const RationalFunction1& o) const { return num * o.den == o.num * den; }
    /// Cross-multiplied equality with coefficient tolerance (float mode).
    bool near(const RationalFunction1& o, double tol) const;
};

/// A real root of a polynomial of degree <= 2.
struct RealRoot {
    Scalar value;  // exact when the root is rational, float otherwise
    int multiplicity = 1;
};

/// Real roots (distinct, ascending) of a polynomial of degree 1 or 2.
/// Exact discriminant sign for exact input; floats use a dead zone of 1e-12
/// relative to the coefficient scale and set *near_double when it fires.
std::vector<RealRoot> real_roots_quadratic(const UPoly& p, bool* near_double = nullptr);

/// Discriminant b^2 - 4ac of c0 + c1 t + c2 t^2.
Scalar discriminant(const UPoly& p);

}  // namespace fsl
