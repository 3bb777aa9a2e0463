#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsl/blowup.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace fsl;

namespace {

const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();

Poly2 c(long n, long d = 1) { return Poly2(Scalar::ratio(n, d)); }

}  // namespace

TEST_CASE("blow_up: X4 in the swapped chart") {
    const PlanarField x4{(X + Y).pow(2), Y.pow(4)};
    const BlowupResult r = blow_up(x4, {ChartKind::XDirectionalSwapped, 1});
    CHECK(r.field.p == (-(X + c(1)).pow(2) + X.pow(3) * Y * Y) * X);
    CHECK(r.field.q == (X + c(1)).pow(2) * Y);
    CHECK(r.factored);
}

TEST_CASE("blow_up: degenerate family, chart (x, ux) divided by x^2") {
    // Chart (x, ux): first new variable x, second u. Result printed as (d/du, d/dx).
    const Scalar alpha = Scalar::ratio(3, 2), beta = Scalar::ratio(2, 5);
    const Poly2 xx = X, yy = Y;
    const PlanarField z{Poly2(beta) * xx * xx * yy + Poly2(alpha) * xx * yy * yy - Poly2(beta) * yy.pow(3) - xx.pow(4),
                        c(4) * Poly2(beta) * xx * yy * yy + Poly2(alpha) * yy.pow(3) + c(2) * xx.pow(5)};
    const BlowupResult r = blow_up(z, {ChartKind::XDirectional, 2});
    // After swapping, the variables are (u, x).
    const Poly2 u = X, x = Y;
    const PlanarField expected_u_first{
        c(3) * Poly2(beta) * u * u + Poly2(beta) * u.pow(4) + u * x + c(2) * x * x,
        (Poly2(beta) * u + Poly2(alpha) * u * u - Poly2(beta) * u.pow(3) - x) * x};
    CHECK(r.field.swapped() == expected_u_first);
}

TEST_CASE("blow_up: radial field and unknown chart") {
    const BlowupResult r = blow_up(PlanarField{X, Y}, {ChartKind::XDirectional, 0});
    CHECK(r.field.p == X);
    CHECK(r.field.q.is_zero());
    CHECK_THROWS_AS(chart_from_name("polar"), UnsupportedChart);
    CHECK(chart_from_name("pi-") == ChartKind::PiMinus);
}

TEST_CASE("divisor_report examples") {
    auto report = [](long a, long b, long cc) {
        NormalFormField nf;
        nf.a = Scalar(a);
        nf.f1 = c(1);
        nf.f2 = c(1);
        nf.g1 = c(cc);
        nf.g2 = c(b);
        return divisor_report(nf);
    };
    const DivisorReport hyp = report(1, -1, -1);
    CHECK(hyp.roots.empty());
    CHECK(hyp.discriminant == Scalar(-4));
    CHECK(hyp.p_origin == Scalar(1));
    CHECK(hyp.q_origin == Scalar(-2));

    const DivisorReport two = report(0, 0, 2);
    CHECK(two.extra_singularities() == 2);
    for (const auto& r : two.roots) CHECK(r.nonzero_eigenvalue);

    const DivisorReport semi = report(0, 0, 1);
    REQUIRE(semi.roots.size() == 1);
    CHECK(semi.roots[0].location.is_zero());
    CHECK(semi.roots[0].multiplicity == 2);
    CHECK(semi.extra_singularities() == 0);

    const DivisorReport boundary = report(2, 0, 0);
    REQUIRE(boundary.roots.size() == 1);
    CHECK(boundary.roots[0].location == Scalar(-1));
    CHECK(boundary.roots[0].multiplicity == 2);
}

TEST_CASE("saddle data on a concrete field") {
    NormalFormField nf;
    nf.a = Scalar(0);
    nf.f1 = c(1);
    nf.f2 = c(1);
    nf.g1 = Poly2();
    nf.g2 = Poly2();
    const SaddleData s = saddle_data(nf);
    CHECK(s.lambda_plus == Scalar(1));
    CHECK(s.lambda_minus == Scalar(1));
    CHECK(s.r21_plus.eval(Scalar(0)) == Scalar(-1));
    CHECK(s.r12_plus.eval(Scalar(0)) == Scalar(-1));
    CHECK(s.r21_minus.eval(Scalar(0)) == Scalar(-1));
    CHECK(s.r12_minus.eval(Scalar(0)) == Scalar(-1));

    nf.g1 = c(2);
    CHECK_THROWS_AS(saddle_data(nf), NotAFakeSaddle);
}

TEST_CASE("saddle data: pullback agrees with closed forms for random hyperbolic fields") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const Invariants inv = testing::random_hyperbolic_abc(rng);
        const NormalFormField nf = testing::random_normal_form(rng, inv);
        const SaddleData s = saddle_data(nf);
        CHECK(s.lambda_plus == Scalar(1) - inv.c);
        CHECK(s.lambda_plus * s.lambda_minus == Scalar(1));
        CHECK(s.r12_minus.same_as(s.r12_minus_closed));
        CHECK(s.r21_minus.same_as(s.r21_minus_closed));
        CHECK(s.r12_plus.same_as(s.r12_plus_closed));
        CHECK(s.r21_plus.same_as(s.r21_plus_closed));
        // Values at the corner are minus the hyperbolicity ratios.
        CHECK(s.r12_minus.eval(Scalar(0)) == -s.lambda_plus);
        CHECK(s.r21_minus.eval(Scalar(0)) == -s.lambda_minus);
        CHECK(s.r12_plus.eval(Scalar(0)) == -Scalar(1) / s.lambda_plus);
        CHECK(s.r21_plus.eval(Scalar(0)) == -s.lambda_plus);
        const DivisorReport rep = divisor_report(nf);
        CHECK(rep.p_origin == Scalar(1));
        CHECK(rep.extra_singularities() == 0);
    }
}

TEST_CASE("saddle data in float mode") {
    const double s6 = 1.0 / std::sqrt(6.0);
    NormalFormField nf;
    nf.a = Scalar(s6);
    nf.f1 = c(1) + c(1, 27) * X * X;
    nf.f2 = c(1);
    nf.g1 = c(1, 3) + c(1, 9) * X - c(1, 27) * X * X;
    nf.g2 = Poly2(Scalar(-s6));
    const SaddleData s = saddle_data(nf);
    CHECK((s.lambda_plus * s.lambda_minus).to_double() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.lambda_plus.to_double() == doctest::Approx(2.0 / 3.0));
    CHECK(s.r12_plus.near(s.r12_plus_closed, 1e-12));
    CHECK(s.r21_minus.near(s.r21_minus_closed, 1e-12));
}
