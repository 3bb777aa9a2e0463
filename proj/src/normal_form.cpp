#include "fsl/normal_form.hpp"

#include <cmath>

namespace fsl {

std::string to_string(NormalFormDefect d) {
    switch (d) {
        case NormalFormDefect::QNotDivisibleByY: return "q not divisible by y";
        case NormalFormDefect::QHasLinearTerm: return "q/y has a nonzero constant term";
        case NormalFormDefect::PHasLowOrderTerms: return "p has terms of order < 2 or an x y^0 term";
        case NormalFormDefect::F1NotNormalized: return "f1(0,0) != 1";
        case NormalFormDefect::F2NotNormalized: return "f2(0,0) != 1";
    }
    return "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::HyperbolicFakeSaddle: return "HyperbolicFakeSaddle";
        case Verdict::SemiHyperbolicFakeSaddle: return "SemiHyperbolicFakeSaddle";
        case Verdict::NotFakeSaddle: return "NotFakeSaddle";
        case Verdict::BoundaryIndeterminate: return "BoundaryIndeterminate";
    }
    return "unknown";
}

PlanarField NormalFormField::field() const {
    const Poly2 x = Poly2::x(), y = Poly2::y();
    return {x * x * f1 + Poly2(a) * x * y + y * y * f2, (x * g1 + y * g2) * y};
}

bool NormalFormField::is_exact() const {
    return f1.is_exact() && f2.is_exact() && g1.is_exact() && g2.is_exact() && a.is_exact();
}

NormalFormField validate_and_build(const PlanarField& raw) {
    NormalFormField nf;
    for (const auto& [e, c] : raw.p.terms()) {
        const auto [i, j] = e;
        if (i == 1 && j == 1) {
            nf.a = c;
        } else if (i >= 2) {
            nf.f1.add_term(i - 2, j, c);
        } else if (j >= 2) {
            nf.f2.add_term(i, j - 2, c);
        } else {
            throw NotInNormalForm(NormalFormDefect::PHasLowOrderTerms, "monomial x^" + std::to_string(i) + " y^" +
                                                                           std::to_string(j) + " in p");
        }
    }
    for (const auto& [e, c] : raw.q.terms()) {
        const auto [i, j] = e;
        if (j == 0) throw NotInNormalForm(NormalFormDefect::QNotDivisibleByY, "monomial x^" + std::to_string(i) + " in q");
        if (i == 0 && j == 1) throw NotInNormalForm(NormalFormDefect::QHasLinearTerm, "coefficient " + c.str());
        if (i >= 1)
            nf.g1.add_term(i - 1, j - 1, c);
        else
            nf.g2.add_term(0, j - 2, c);
    }
    const Scalar f10 = nf.f1.coeff(0, 0), f20 = nf.f2.coeff(0, 0);
    auto is_one = [](const Scalar& s) { return s.is_exact() ? s == Scalar(1) : std::abs(s.to_double() - 1.0) <= 1e-12; };
    if (!is_one(f10)) throw NotInNormalForm(NormalFormDefect::F1NotNormalized, "f1(0,0) = " + f10.str());
    if (!is_one(f20)) throw NotInNormalForm(NormalFormDefect::F2NotNormalized, "f2(0,0) = " + f20.str());
    return nf;
}

Invariants Invariants::from_abc(Scalar a, Scalar b, Scalar c) {
    Scalar e = a - b;
    Scalar d = Scalar(4) * (Scalar(1) - c) - e * e;
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

Invariants invariants(const NormalFormField& nf) {
    return Invariants::from_abc(nf.a, nf.g2.coeff(0, 0), nf.g1.coeff(0, 0));
}

Classification classify(const Invariants& inv) {
    Classification out;
    const Scalar& a = inv.a;
    const Scalar& b = inv.b;
    const Scalar& c = inv.c;
    const bool exact = inv.is_exact();
    constexpr double kDeadZone = 1e-12;

    if (!exact && std::abs(inv.d.to_double()) < kDeadZone) out.warnings.emplace_back("BoundaryNearZero");

    // Q(0, v) = -v^2 + (b - a) v + c - 1, discriminant -d.
    auto divisor_roots = [&] {
        UPoly q0({c - Scalar(1), b - a, Scalar(-1)});
        bool near_double = false;
        std::vector<DivisorPoint> pts;
        for (const auto& r : real_roots_quadratic(q0, &near_double)) {
            if (r.value.is_zero() || (!r.value.is_exact() && std::abs(r.value.to_double()) < kDeadZone)) continue;
            pts.push_back({r.value, r.multiplicity});
        }
        if (near_double) out.warnings.emplace_back("DivisorRootNearDouble");
        return pts;
    };

    const int dsign = inv.d.sign();
    if (dsign > 0) {
        out.verdict = Verdict::HyperbolicFakeSaddle;
        out.ratio = Scalar(1) - c;
        return out;
    }
    if (dsign < 0) {
        out.verdict = Verdict::NotFakeSaddle;
        out.extra_points = divisor_roots();
        return out;
    }
    if (c == Scalar(1) && a == b) {
        out.verdict = Verdict::SemiHyperbolicFakeSaddle;
        return out;
    }
    const Scalar a2b2 = a * a - b * b;
    if (exact ? a2b2 == Scalar(4) : std::abs(a2b2.to_double() - 4.0) < kDeadZone) {
        out.verdict = Verdict::BoundaryIndeterminate;
        out.extra_points = divisor_roots();
        return out;
    }
    out.verdict = Verdict::NotFakeSaddle;
    out.extra_points = divisor_roots();
    return out;
}

NormalFormField reflect_fiber(const NormalFormField& nf) {
    return validate_and_build(pullback_affine(nf.field(), AffineMap2::scaling(Scalar(1), Scalar(-1))));
}

void to_json(json& j, const NormalFormField& nf) {
    j = json{{"f1", nf.f1}, {"f2", nf.f2}, {"g1", nf.g1}, {"g2", nf.g2}, {"a", nf.a}};
}

void from_json(const json& j, NormalFormField& nf) {
    nf.f1 = j.at("f1").get<Poly2>();
    nf.f2 = j.at("f2").get<Poly2>();
    nf.g1 = j.at("g1").get<Poly2>();
    nf.g2 = j.at("g2").get<Poly2>();
    nf.a = j.at("a").get<Scalar>();
    // Round trip through the field so that the stored split follows the convention.
    nf = validate_and_build(nf.field());
}

void to_json(json& j, const Invariants& inv) {
    j = json{{"a", inv.a}, {"b", inv.b}, {"c", inv.c}, {"d", inv.d}};
}

void to_json(json& j, const Classification& c) {
    json pts = json::array();
    for (const auto& p : c.extra_points) pts.push_back({{"v", p.location}, {"multiplicity", p.multiplicity}});
    j = json{{"verdict", to_string(c.verdict)}, {"extra_divisor_points", pts}, {"warnings", c.warnings}};
    if (c.verdict == Verdict::HyperbolicFakeSaddle) j["ratio"] = c.ratio;
}

}  // namespace fsl
