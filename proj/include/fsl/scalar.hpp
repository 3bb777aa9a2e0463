#pragma once

#include <gmpxx.h>

#include <cmath>
#include <iosfwd>
#include <string>
#include <variant>

namespace fsl {

using Rational = mpq_class;

/// A coefficient that is either an exact rational or a double.
///
/// Arithmetic between two exact values stays exact; as soon as a float
/// operand takes part the result is a float. This is how irrational
/// rescalings (square roots of parameters) enter otherwise exact algebra
/// while every derived object can still report whether it is exact.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(int v) : value_(Rational(v)) {}
    Scalar(long v) : value_(Rational(v)) {}
    Scalar(Rational v) : value_(std::move(v)) { std::get<Rational>(value_).canonicalize(); }
    Scalar(double v) : value_(v) {}

    static Scalar ratio(long num, long den) { return Scalar(Rational(num, den)); }
    /// Parses "p/q", "p" (exact) or any other decimal literal (float).
    static Scalar parse(const std::string& text);
    /// Exact rational equal to the binary value of `v`.
    static Scalar exact_from_double(double v) { return Scalar(Rational(v)); }

    bool is_exact() const { return std::holds_alternative<Rational>(value_); }
    const Rational& exact() const;
    double to_double() const;

    bool is_zero() const;
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Exact equality for two exact values, bitwise double equality otherwise.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator<(const Scalar& a, const Scalar& b);
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }

    Scalar pow(unsigned k) const;

    /// "p/q" for exact values, shortest round-trip decimal for floats.
    std::string str() const;

private:
    std::variant<Rational, double> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// |a - b| <= tol, evaluated in double.
inline bool near(const Scalar& a, const Scalar& b, double tol) {
    return std::abs((a - b).to_double()) <= tol;
}

/// Square root of a nonnegative rational when it is a perfect square.
bool exact_sqrt(const Rational& q, Rational& out);
/// Exact when possible, float otherwise.
Scalar sqrt(const Scalar& s);

}  // namespace fsl
