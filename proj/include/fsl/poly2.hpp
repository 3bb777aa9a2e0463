#pragma once

#include "fsl/scalar.hpp"
#include "fsl/upoly.hpp"

#include <climits>
#include <map>
#include <string>
#include <utility>

namespace fsl {

/// Exponent pair (i, j) of the monomial x^i y^j.
using Exponent = std::pair<unsigned, unsigned>;

/// Sparse bivariate polynomial in (x, y). No stored coefficient is zero.
class Poly2 {
public:
    static constexpr int kZeroDegree = INT_MIN;

    Poly2() = default;
    Poly2(const Scalar& c) { add_term(0, 0, c); }  // NOLINT: constants convert implicitly
    Poly2(int c) : Poly2(Scalar(c)) {}             // NOLINT

    static Poly2 x() { return monomial(1, 0, Scalar(1)); }
    static Poly2 y() { return monomial(0, 1, Scalar(1)); }
    static Poly2 monomial(unsigned i, unsigned j, const Scalar& c);

    /// Adds c x^i y^j, dropping the key if the sum is zero.
    void add_term(unsigned i, unsigned j, const Scalar& c);

    const std::map<Exponent, Scalar>& terms() const { return terms_; }
    Scalar coeff(unsigned i, unsigned j) const;
    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const;
    /// max(i + j) over stored terms, kZeroDegree for the zero polynomial.
    int degree() const;
    double max_abs_coeff() const;

    Scalar eval(const Scalar& x, const Scalar& y) const;
    double eval(double x, double y) const;

    /// p(px(u,v), py(u,v)).
    Poly2 compose(const Poly2& px, const Poly2& py) const;
    Poly2 dx() const;
    Poly2 dy() const;
    /// p(y, x).
    Poly2 swapped() const;
    Poly2 to_float() const;
    /// Removes float coefficients with |c| <= tol (exact terms are kept).
    Poly2 pruned(double tol) const;

    /// p(x, 0) as a polynomial in x.
    UPoly on_x_axis() const;
    /// p(0, y) as a polynomial in y.
    UPoly on_y_axis() const;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
    Poly2 pow(unsigned k) const;

    /// Lexicographic (x > y) division by a single divisor. The remainder is
    /// zero iff the divisor divides this polynomial.
    std::pair<Poly2, Poly2> divmod(const Poly2& divisor) const;

    /// Coefficientwise |a - b| <= tol.
    bool near(const Poly2& o, double tol) const;

    std::string str(const std::string& xv = "x", const std::string& yv = "y") const;

private:
    std::map<Exponent, Scalar> terms_;
};

/// True when |residue| <= tol * scale for every coefficient (tol 0 in exact mode).
bool negligible(const Poly2& residue, double scale);

}  // namespace fsl
