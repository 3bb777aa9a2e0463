#include "fsl/cases.hpp"

#include <cmath>

namespace fsl {

namespace {

const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();

Poly2 k(const Scalar& s) { return Poly2(s); }

}  // namespace

PlanarField build_Xn(int n) {
    if (n < 3) throw Error("X_n needs n >= 3");
    return {(X + Y).pow(2), Y.pow(static_cast<unsigned>(n))};
}

PlanarField y0_printed() {
    const Poly2 u = X, v = Y, one(1);
    return {(-(u + one).pow(2) + u.pow(3) * v * v) * u, (u + one).pow(2) * v};
}

PlanarField y1_printed() {
    const Poly2 u = X, v = Y;
    return {u * u + v * v - u.pow(3) - k(4) * u * v * v + k(6) * u * u * v * v - k(4) * u.pow(3) * v * v +
                u.pow(4) * v * v,
            u * u * v};
}

NormalFormField build_example6(const Scalar& a, const Scalar& b, const Scalar& c) {
    NormalFormField nf;
    nf.a = a;
    nf.f1 = Poly2(1);
    nf.f2 = Poly2(1);
    nf.g1 = Poly2(c);
    nf.g2 = Poly2(b);
    return nf;
}

double example6_first_integral(double x, double y) {
    return std::log(y * y * (2 * x * x + 2 * x * y + y * y)) - 2 * std::atan((x + y) / x);
}

PlanarField build_Z(const Scalar& alpha, const Scalar& beta) {
    return {k(beta) * X * X * Y + k(alpha) * X * Y * Y - k(beta) * Y.pow(3) - X.pow(4),
            k(Scalar(4) * beta) * X * Y * Y + k(alpha) * Y.pow(3) + k(2) * X.pow(5)};
}

PlanarField y_mu_printed(const Scalar& alpha, const Scalar& beta) {
    const Poly2 u = X, x = Y;
    return {k(Scalar(3) * beta) * u * u + k(beta) * u.pow(4) + u * x + k(2) * x * x,
            (k(beta) * u + k(alpha) * u * u - k(beta) * u.pow(3) - x) * x};
}

NormalFormField x_mu_printed(const Scalar& alpha, const Scalar& beta) {
    const Scalar s = Scalar(1) / sqrt(Scalar(6) * beta);
    const Scalar b2 = beta * beta;
    NormalFormField nf;
    nf.a = s;
    nf.f1 = Poly2(1) + k(Scalar(1) / (Scalar(27) * b2)) * X * X;
    nf.f2 = Poly2(1);
    nf.g1 = Poly2(Scalar::ratio(1, 3)) + k(alpha / (Scalar(9) * b2)) * X - k(Scalar(1) / (Scalar(27) * b2)) * X * X;
    nf.g2 = Poly2(-s);
    return nf;
}

AffineMap2 z_rescaling(const Scalar& beta) {
    return AffineMap2::scaling(Scalar(1) / (Scalar(3) * beta), Scalar(1) / sqrt(Scalar(6) * beta));
}

}  // namespace fsl
