#pragma once

#include "fsl/normal_form.hpp"

namespace fsl {

/// (x + y)^2 d/dx + y^n d/dy, n >= 3.
PlanarField build_Xn(int n);

/// Y0 = (-(u+1)^2 + u^3 v^2) u d/du + (u+1)^2 v d/dv.
PlanarField y0_printed();
/// Y1 = (u^2 + v^2 - u^3 - 4uv^2 + 6u^2v^2 - 4u^3v^2 + u^4v^2) d/du + u^2 v d/dv.
PlanarField y1_printed();

/// (x^2 + y^2 + a x y) d/dx + (c x + b y) y d/dy.
NormalFormField build_example6(const Scalar& a, const Scalar& b, const Scalar& c);
/// First integral of build_example6(1, -1, -1), defined up to multiples of 2 pi
/// (the arctangent branch).
double example6_first_integral(double x, double y);

/// x' = beta x^2 y + alpha x y^2 - beta y^3 - x^4,  y' = 4 beta x y^2 + alpha y^3 + 2 x^5.
PlanarField build_Z(const Scalar& alpha, const Scalar& beta);

/// The blow-up of Z in the chart (x, ux) divided by x^2, written in (u, x):
/// u' = 3 beta u^2 + beta u^4 + u x + 2 x^2,  x' = (beta u + alpha u^2 - beta u^3 - x) x.
PlanarField y_mu_printed(const Scalar& alpha, const Scalar& beta);

/// The rescaled normal form with
/// f1 = 1 + x^2/(27 beta^2), f2 = 1, a = 1/sqrt(6 beta), b = -1/sqrt(6 beta),
/// g1 = 1/3 + alpha x/(9 beta^2) - x^2/(27 beta^2). Exact when 6 beta is a rational square.
NormalFormField x_mu_printed(const Scalar& alpha, const Scalar& beta);

/// The linear map (u, x) = (X / (3 beta), Y / sqrt(6 beta)) taking Y_mu to X_mu.
AffineMap2 z_rescaling(const Scalar& beta);

}  // namespace fsl
