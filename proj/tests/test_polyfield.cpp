#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsl/errors.hpp"
#include "fsl/field.hpp"
#include "fsl/json_io.hpp"
#include "test_util.hpp"

using namespace fsl;

namespace {

const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();

Poly2 c(long n, long d = 1) { return Poly2(Scalar::ratio(n, d)); }

}  // namespace

TEST_CASE("eval") {
    const Poly2 p = X * X + X * Y;
    CHECK(p.eval(Scalar(2), Scalar(3)) == Scalar(10));
    CHECK(p.eval(2.0, 3.0) == 10.0);
    CHECK(Poly2().eval(Scalar::ratio(7, 3), Scalar(5)) == Scalar(0));
    CHECK((X + Y).pow(2).eval(Scalar(1), Scalar(-1)) == Scalar(0));
    CHECK(Poly2().degree() == Poly2::kZeroDegree);
    CHECK((X * X * Y + Y).degree() == 3);
}

TEST_CASE("no stored zero coefficients") {
    Poly2 p = X * Y - Y * X;
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    p.add_term(2, 0, Scalar(3));
    p.add_term(2, 0, Scalar(-3));
    CHECK(p.terms().empty());
}

TEST_CASE("Scalar parsing and mode") {
    CHECK(Scalar::parse("3/6") == Scalar::ratio(1, 2));
    CHECK(Scalar::parse("-4").is_exact());
    CHECK_FALSE(Scalar::parse("1.25").is_exact());
    CHECK(Scalar::parse("1.25").to_double() == 1.25);
    CHECK_THROWS(Scalar::parse("1/0"));
    CHECK_THROWS(Scalar::parse("abc"));
    CHECK_FALSE((Scalar::ratio(1, 3) * Scalar(2.0)).is_exact());
    CHECK(Scalar::ratio(1, 3).str() == "1/3");
}

TEST_CASE("substitute: X4 in chart (v, uv) divided by v") {
    const PlanarField x4{(X + Y).pow(2), Y.pow(4)};
    // New coordinates (u, v) are the Poly2 variables (x, y).
    const Poly2 u = X, v = Y;
    const FieldQuotient pulled = substitute(x4, v, u * v);
    REQUIRE(pulled.is_polynomial());
    const PlanarField y0 = divide_exact(pulled.polynomial(), v, 1);
    CHECK(y0.p == (-(u + c(1)).pow(2) + u.pow(3) * v * v) * u);
    CHECK(y0.q == (u + c(1)).pow(2) * v);
}

TEST_CASE("substitute: identity and radial field") {
    std::mt19937 rng(7);
    const PlanarField f{testing::random_poly(rng), testing::random_poly(rng)};
    CHECK(substitute(f, X, Y).polynomial() == f);

    const PlanarField radial{X, Y};
    const PlanarField blown = divide_exact(substitute(radial, X, X * Y).polynomial(), X, 0);
    CHECK(blown.p == X);
    CHECK(blown.q.is_zero());
}

TEST_CASE("substitute rejects non-monomial Jacobians") {
    const PlanarField f{X, Y};
    CHECK_THROWS_AS(substitute(f, X + X * Y, Y + X * X), NonMonomialDenominator);
}

TEST_CASE("substitute keeps an uncancelled monomial denominator") {
    // (x, y) = (u, uv) applied to d/dy: u' = 0, v' = 1/u.
    const PlanarField f{Poly2(), c(1)};
    const FieldQuotient r = substitute(f, X, X * Y);
    CHECK_FALSE(r.is_polynomial());
    CHECK(r.denom_exp == Exponent{1, 0});
    CHECK(r.numerator.q == c(1));
    CHECK_THROWS_AS(r.polynomial(), NotDivisible);
}

TEST_CASE("divide_exact") {
    const PlanarField f{X * X * Y, X * X};
    const PlanarField g = divide_exact(f, X, 2);
    CHECK(g.p == Y);
    CHECK(g.q == c(1));

    try {
        divide_exact(PlanarField{X, Poly2()}, Y, 1);
        FAIL("expected NotDivisible");
    } catch (const NotDivisible& e) {
        CHECK(e.component() == "p");
        CHECK(e.remainder() != "0");
    }
}

TEST_CASE("divide_exact inverts multiplication by divisor powers") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly2 f1 = testing::random_poly(rng, 3, 5), f2 = testing::random_poly(rng, 3, 5);
        Poly2 d = testing::random_poly(rng, 2, 3);
        if (d.is_zero()) d = X + c(1);
        const unsigned k = static_cast<unsigned>(trial % 4);
        const PlanarField prod{f1 * d.pow(k), f2 * d.pow(k)};
        const PlanarField back = divide_exact(prod, d, k);
        CHECK(back.p == f1);
        CHECK(back.q == f2);
    }
}

TEST_CASE("pullback_affine") {
    SUBCASE("identity") {
        std::mt19937 rng(3);
        const PlanarField f{testing::random_poly(rng), testing::random_poly(rng)};
        CHECK(pullback_affine(f, AffineMap2::identity()) == f);
    }
    SUBCASE("homogeneous scaling") {
        const PlanarField f{X * X, Poly2()};
        const PlanarField g = pullback_affine(f, AffineMap2::scaling(Scalar(2), Scalar(2)));
        CHECK(g.p == c(2) * X * X);
        CHECK(g.q.is_zero());
    }
    SUBCASE("Y_mu at beta = 1/6 conjugated by (2x, y) matches hand computation") {
        // Y_mu in (u, w): u' = 3b u^2 + b u^4 + u w + 2 w^2, w' = (b u + alpha u^2 - b u^3 - w) w.
        const Scalar beta = Scalar::ratio(1, 6), alpha = Scalar(1);
        const Poly2 u = X, w = Y;
        const PlanarField y_mu{Poly2(Scalar(3) * beta) * u * u + Poly2(beta) * u.pow(4) + u * w + c(2) * w * w,
                               (Poly2(beta) * u + Poly2(alpha) * u * u - Poly2(beta) * u.pow(3) - w) * w};
        const PlanarField x_mu = pullback_affine(y_mu, AffineMap2::scaling(Scalar(2), Scalar(1)));
        const PlanarField hand{X * X + Y * Y + X * Y + c(4, 3) * X.pow(4),
                               (c(1, 3) * X - Y + c(4) * X * X - c(4, 3) * X.pow(3)) * Y};
        CHECK(x_mu == hand);
        CHECK(x_mu.is_exact());
    }
    SUBCASE("irrational scale switches to float mode") {
        const PlanarField f{X * X + Y * Y, X * Y};
        const PlanarField g = pullback_affine(f, AffineMap2::scaling(Scalar(1.0), Scalar(std::sqrt(6.0))));
        CHECK_FALSE(g.is_exact());
        CHECK(g.p.coeff(0, 2).to_double() == doctest::Approx(6.0));
    }
    SUBCASE("singular map") {
        CHECK_THROWS_AS(pullback_affine(PlanarField{X, Y}, AffineMap2::scaling(Scalar(0), Scalar(1))), SingularMap);
    }
}

TEST_CASE("pullback_affine round trip through the inverse map is exact") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const PlanarField f{testing::random_poly(rng), testing::random_poly(rng)};
        AffineMap2 m;
        do {
            m.linear = {{{testing::random_rational(rng), testing::random_rational(rng)},
                         {testing::random_rational(rng), testing::random_rational(rng)}}};
        } while (m.det().is_zero());
        m.translation = {testing::random_rational(rng), testing::random_rational(rng)};
        CHECK(pullback_affine(pullback_affine(f, m), m.inverse()) == f);
    }
}

TEST_CASE("univariate helpers") {
    const UPoly p({Scalar(-2), Scalar(0), Scalar(1)});  // t^2 - 2
    CHECK(count_real_roots(p, Scalar(0), Scalar(2)) == 1);
    CHECK(count_real_roots(p, Scalar(-2), Scalar(2)) == 2);
    CHECK(root_free_on(p, Scalar(-1), Scalar(1)));
    CHECK_FALSE(root_free_on(UPoly({Scalar(1), Scalar(-1)}), Scalar(0), Scalar(1)));  // root at the endpoint
    const auto roots = real_roots_quadratic(UPoly({Scalar(-1), Scalar(-2), Scalar(-1)}));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].value == Scalar(-1));
    CHECK(roots[0].multiplicity == 2);
    const auto two = real_roots_quadratic(UPoly({Scalar(1), Scalar(0), Scalar(-1)}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].value == Scalar(-1));
    CHECK(two[1].value == Scalar(1));
    CHECK(two[0].value.is_exact());
}

TEST_CASE("JSON format") {
    const Poly2 p = c(1, 2) * X * X - c(3) * Y;
    const json j = p;
    CHECK(j.at("terms").size() == 2);
    CHECK_FALSE(j.contains("mode"));
    CHECK(j.at("terms")[0] == json::array({0, 1, "-3/1"}));

    const Poly2 q = json::parse(R"({"terms": [[2, 0, "1/2"], [0, 1, -3]]})").get<Poly2>();
    CHECK(q == p);

    const Poly2 f = json::parse(R"({"terms": [[1, 1, 1.25]], "mode": "float"})").get<Poly2>();
    CHECK_FALSE(f.is_exact());
    CHECK(json(f).at("mode") == "float");

    CHECK_THROWS(json::parse(R"({"terms": [[-1, 0, "1/1"]]})").get<Poly2>());
}

TEST_CASE("JSON round trip is bit-exact in both modes") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const PlanarField f{testing::random_poly(rng, 4, 6), testing::random_poly(rng, 4, 6)};
        CHECK(json::parse(json(f).dump()).get<PlanarField>() == f);
        const PlanarField g = f.to_float();
        CHECK(json::parse(json(g).dump()).get<PlanarField>() == g);
    }
}
