#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsl/cases.hpp"
#include "fsl/flow.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace fsl;

namespace {

constexpr double kPi = std::numbers::pi;
const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();

PlanarField figure3() { return build_example6(Scalar(1), Scalar(-1), Scalar(-1)).field(); }

double figure3_integral(double x, double y) {
    return std::log(y * y * (2 * x * x + 2 * x * y + y * y)) - 2 * std::atan((x + y) / x);
}

double rel(double a, double b) { return std::abs(a / b - 1.0); }

}  // namespace

TEST_CASE("integrate: radial field") {
    const double e = std::exp(1.0);
    for (auto param : {Parametrization::Time, Parametrization::Arclength, Parametrization::GraphOverX}) {
        const Trajectory t = integrate(PlanarField{X, Y}, {1.0, 1.0}, StopCondition::x_reaches(e), {}, param);
        REQUIRE(t.reached_stop);
        CHECK(std::abs(t.back().x - e) < 1e-9);
        CHECK(std::abs(t.back().y - e) < 1e-9);
        for (std::size_t i = 1; i < t.samples.size(); ++i) CHECK(t.samples[i].s > t.samples[i - 1].s);
    }
    const Trajectory t = integrate(PlanarField{X, Y}, {1.0, 1.0}, StopCondition::time_reaches(1.0));
    CHECK(std::abs(t.back().x - e) < 1e-9);
}

TEST_CASE("integrate: stop conditions") {
    const PlanarField rotation{-Y, X};
    const Trajectory t = integrate(rotation, {1.0, 0.0}, StopCondition::y_reaches(0.5));
    CHECK(std::abs(t.back().x - std::sqrt(0.75)) < 1e-9);
    CHECK(t.back().s == doctest::Approx(kPi / 6).epsilon(1e-10));
    // The positive x half-axis crossed upwards again after a full turn.
    const Trajectory full = integrate(rotation, {1.0, 0.0}, StopCondition::section({0.0, 0.0}, {0.0, 1.0}, +1));
    CHECK(full.back().s == doctest::Approx(2 * kPi).epsilon(1e-10));
    const Trajectory escape = integrate(PlanarField{X, Y}, {1.0, 1.0}, StopCondition::x_reaches(1e9), {},
                                        Parametrization::Time, 10.0);
    CHECK_FALSE(escape.reached_stop);
    CHECK(escape.events.back().kind == "guard");
}

TEST_CASE("integrate: phase portrait field keeps its first integral") {
    const Trajectory t = integrate(figure3(), {-1.0, 0.3}, StopCondition::x_reaches(1.0));
    REQUIRE(t.reached_stop);
    CHECK(t.back().y > 0.0);
    CHECK(conservation_check(figure3_integral, t, 2 * kPi) < 1e-6);

    const Trajectory orbit = integrate(figure3(), {-1.0, 0.5}, StopCondition::x_reaches(1.0));
    CHECK(conservation_check(figure3_integral, orbit, 2 * kPi) < 1e-6);
    // Without unwrapping, the arctangent branch jump shows up as drift.
    CHECK(conservation_check(figure3_integral, orbit) == doctest::Approx(2 * kPi).epsilon(1e-6));
}

TEST_CASE("conservation_check: trivial and tolerance study") {
    const Trajectory line = integrate(PlanarField{Poly2(1), Poly2()}, {0.0, 2.0}, StopCondition::x_reaches(5.0));
    CHECK(conservation_check([](double, double y) { return y; }, line) == 0.0);

    IntegratorConfig loose;
    loose.rel_tol = 1e-6;
    loose.abs_tol = 1e-8;
    const Trajectory a = integrate(figure3(), {-1.0, 0.5}, StopCondition::x_reaches(1.0), loose);
    const Trajectory b = integrate(figure3(), {-1.0, 0.5}, StopCondition::x_reaches(1.0));
    CHECK(conservation_check(figure3_integral, b, 2 * kPi) < conservation_check(figure3_integral, a, 2 * kPi));
}

TEST_CASE("integrate: X4 passes the origin") {
    const Trajectory t = integrate(build_Xn(4), {-1.0, 0.05}, StopCondition::x_reaches(1.0));
    CHECK(t.reached_stop);
    const TransitResult up = transit(build_Xn(4), -1.0, 1.0, 0.05);
    const TransitResult down = transit(build_Xn(4), -1.0, 1.0, -0.05);
    CHECK(up.y_end > 0.0);
    CHECK(down.y_end < 0.0);
    CHECK(up.y_end == doctest::Approx(t.back().y).epsilon(1e-7));
}

TEST_CASE("transition_slope against the closed form") {
    const NormalFormField y1 = validate_and_build(y1_printed());
    CHECK(rel(transition_slope(y1, {-1.0, 0.5}, +1).value, 4.0) < 0.01);
    CHECK(rel(transition_slope(y1, {-1.0, 0.5}, -1).value, 4.0) < 0.01);

    const NormalFormField ex6 = build_example6(Scalar(1), Scalar(-1), Scalar(-1));
    const SlopeEstimate up = transition_slope(ex6, {-1.0, 1.0}, +1);
    const SlopeEstimate down = transition_slope(ex6, {-1.0, 1.0}, -1);
    CHECK(rel(up.value, std::exp(-kPi)) < 0.01);
    CHECK(rel(down.value, std::exp(kPi)) < 0.01);

    NormalFormField sym = build_example6(Scalar(0), Scalar(0), Scalar(0));
    for (int side : {+1, -1}) CHECK(std::abs(transition_slope(sym, {-1.0, 1.0}, side).value - 1.0) < 1e-6);
}

TEST_CASE("transition_slope errors") {
    CHECK_THROWS_AS(transition_slope(build_example6(Scalar(0), Scalar(0), Scalar(2)), {-1.0, 1.0}, +1),
                    TransitDoesNotExist);
    const NormalFormField y1 = validate_and_build(y1_printed());
    CHECK_THROWS_AS(transition_slope(y1, {-1.0, 0.5}, +1, default_offsets(), {}, 1e-12), ExtrapolationUnstable);
    CHECK_THROWS_AS(transit(PlanarField{X * X + Y * Y, X}, -1.0, 1.0, 0.1), TransitDoesNotExist);
}

TEST_CASE("extrapolation is self-consistent under halving offsets") {
    const NormalFormField y1 = validate_and_build(y1_printed());
    std::vector<double> half;
    for (double o : default_offsets()) half.push_back(o / 2);
    const SlopeEstimate a = transition_slope(y1, {-1.0, 0.5}, +1);
    const SlopeEstimate b = transition_slope(y1, {-1.0, 0.5}, +1, half);
    CHECK(std::abs(a.value - b.value) < std::max(a.residual, b.residual));
}

TEST_CASE("extrapolate_slopes recovers a known remainder") {
    std::vector<double> y, s;
    for (double o : default_offsets()) {
        y.push_back(o);
        s.push_back(2.5 + 3.0 * std::pow(o, 0.7));
    }
    const SlopeEstimate e = extrapolate_slopes(y, s);
    CHECK(e.value == doctest::Approx(2.5).epsilon(1e-9));
    CHECK(e.fitted_exponent == doctest::Approx(0.7).epsilon(1e-6));
    CHECK_FALSE(e.fallback);
}

TEST_CASE("return_slope on the degenerate family") {
    const PlanarField center = build_Z(Scalar(0), Scalar(1));
    CHECK(std::abs(return_slope(center, ReturnSection::PositiveY).value - 1.0) < 1e-3);
    CHECK(std::abs(return_slope(center, ReturnSection::PositiveX).value - 1.0) < 1e-3);

    const double g = 2 * kPi / std::sqrt(3.0);
    CHECK(rel(return_slope(build_Z(Scalar(1), Scalar(1)), ReturnSection::PositiveY, default_offsets(), {}, 10.0).value,
              std::exp(g)) < 0.02);
    CHECK(rel(return_slope(build_Z(Scalar(-1), Scalar(1)), ReturnSection::PositiveY).value, std::exp(-g)) < 0.02);

    CHECK_THROWS_AS(return_slope(build_Z(Scalar(1), Scalar::ratio(1, 5)), ReturnSection::PositiveY), NoReturn);
}

TEST_CASE("return through the positive x half-axis scales the exponent by 1/(1-c)") {
    // The section y = 0 meets the fake saddle of the blown-up field, so the
    // return map there is conjugate to the one on x = 0 by a power map of
    // exponent 1 - c = 2/3.
    const double g = -2 * kPi / std::sqrt(3.0);
    const SlopeEstimate e = return_slope(build_Z(Scalar(-1), Scalar(1)), ReturnSection::PositiveX);
    CHECK(rel(e.value, std::exp(1.5 * g)) < 0.01);
}

TEST_CASE("return_slope in weighted coordinates") {
    const double inf = std::numeric_limits<double>::infinity();
    for (long a : {-1, 1})
        for (auto b : {Scalar::ratio(1, 2), Scalar(1), Scalar(2)}) {
            const double g = 2 * kPi * a / (b.to_double() * std::sqrt(3.0));
            const SlopeEstimate e =
                return_slope(build_Z(Scalar(a), b), ReturnSection::PositiveY, deep_offsets(), {}, 10.0, inf, {1, 2});
            INFO("alpha " << a << " beta " << b.str());
            CHECK(rel(e.value, std::exp(g)) < 1e-4);
        }
    const SlopeEstimate x = return_slope(build_Z(Scalar(-1), Scalar(1)), ReturnSection::PositiveX, deep_offsets(), {},
                                         10.0, inf, {1, 2});
    CHECK(rel(x.value, std::exp(-3 * kPi / std::sqrt(3.0))) < 1e-4);
    CHECK_THROWS_AS(return_once(build_Z(Scalar(1), Scalar(1)), ReturnSection::PositiveY, 1e-4, {}, 1.0, {0, 2}),
                    Error);
}

TEST_CASE("reversibility of the center") {
    const PlanarField z = build_Z(Scalar(0), Scalar::ratio(3, 4));
    const Trajectory fwd = integrate(z, {0.3, 0.05}, StopCondition::time_reaches(4.0));
    const Trajectory bwd = integrate(z, {-0.3, 0.05}, StopCondition::time_reaches(-4.0));
    CHECK(std::abs(fwd.back().x + bwd.back().x) < 1e-8);
    CHECK(std::abs(fwd.back().y - bwd.back().y) < 1e-8);
}

TEST_CASE("composition: full return equals the product of the two transitions") {
    // Transitions of the rescaled field between x = -L and x = L; the product
    // approaches the full return as L grows, with a 1/L remainder in the log.
    const Scalar alpha(1), beta(1);
    const NormalFormField xmu = x_mu_printed(alpha, beta);
    auto log_product = [&](double L) {
        return std::log(transition_slope(xmu, {-L, L}, +1).value * transition_slope(xmu, {-L, L}, -1).value);
    };
    const double limit = 2.0 * log_product(100.0) - log_product(50.0);
    const double full = return_slope(build_Z(alpha, beta), ReturnSection::PositiveY, default_offsets(), {}, 10.0).value;
    CHECK(rel(full, std::exp(limit)) < 0.03);
}

TEST_CASE("monodromy_probe") {
    // The degenerate family is quasi-homogeneous with weights (1, 2) at leading order.
    for (long num : {3, 5, 20}) CHECK(monodromy_probe(build_Z(Scalar(1), Scalar::ratio(num, 10)), 0.1, {}, 8, {1, 2}) ==
                                      ProbeVerdict::Monodromic);
    for (long num : {1, 2}) CHECK(monodromy_probe(build_Z(Scalar(1), Scalar::ratio(num, 10)), 0.1, {}, 8, {1, 2}) ==
                                  ProbeVerdict::Transit);
    CHECK(monodromy_probe(build_Z(Scalar(0), Scalar::ratio(3, 10)), 0.1, {}, 8, {1, 2}) == ProbeVerdict::Monodromic);
    CHECK(monodromy_probe(figure3(), 0.1) == ProbeVerdict::Transit);
    CHECK(monodromy_probe(PlanarField{-Y, X}, 0.1) == ProbeVerdict::Monodromic);
    CHECK_THROWS_AS(monodromy_probe(figure3(), 0.1, {}, 8, {0, 1}), Error);
}
