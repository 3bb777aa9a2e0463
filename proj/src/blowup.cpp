#include "fsl/blowup.hpp"

#include <cmath>

namespace fsl {

std::string to_string(ChartKind k) {
    switch (k) {
        case ChartKind::XDirectional: return "u,uv";
        case ChartKind::XDirectionalSwapped: return "v,uv";
        case ChartKind::PiPlus: return "pi+";
        case ChartKind::PiMinus: return "pi-";
    }
    return "unknown";
}

ChartKind chart_from_name(const std::string& name) {
    for (auto k : {ChartKind::XDirectional, ChartKind::XDirectionalSwapped, ChartKind::PiPlus, ChartKind::PiMinus})
        if (to_string(k) == name) return k;
    throw UnsupportedChart("unsupported chart '" + name + "' (known: u,uv  v,uv  pi+  pi-)");
}

std::pair<Poly2, Poly2> chart_map(ChartKind k) {
    const Poly2 u = Poly2::x(), v = Poly2::y();
    switch (k) {
        case ChartKind::XDirectional: return {u, u * v};
        case ChartKind::XDirectionalSwapped: return {v, u * v};
        case ChartKind::PiPlus: return {u * (Poly2(1) - v), u * v};
        case ChartKind::PiMinus: return {-(u * (Poly2(1) - v)), u * v};
    }
    throw UnsupportedChart("unknown chart kind");
}

Poly2 chart_divisor(ChartKind k) { return k == ChartKind::XDirectionalSwapped ? Poly2::y() : Poly2::x(); }

BlowupResult blow_up(const PlanarField& field, const BlowupChart& chart) {
    const auto [sx, sy] = chart_map(chart.kind);
    BlowupResult out;
    out.field = divide_exact(substitute(field, sx, sy).polynomial(), chart_divisor(chart.kind), chart.divide_power);
    try {
        out.factors = {divide_exact(PlanarField{out.field.p, 0}, Poly2::x(), 1).p,
                       divide_exact(PlanarField{out.field.q, 0}, Poly2::y(), 1).p};
        out.factored = true;
        out.factorization_note = "P u d/du + Q v d/dv";
    } catch (const NotDivisible& e) {
        out.factorization_note = std::string("not tangent to an axis: ") + e.what();
    }
    return out;
}

int DivisorReport::extra_singularities() const {
    int n = 0;
    for (const auto& r : roots)
        if (!r.location.is_zero()) ++n;
    return n;
}

DivisorReport divisor_report(const NormalFormField& nf) {
    const BlowupResult y = blow_up(nf.field(), {ChartKind::XDirectional, 1});
    if (!y.factored) throw NotDivisible("blow-up", y.factorization_note);
    const Poly2& P = y.factors.p;
    const Poly2& Q = y.factors.q;

    DivisorReport r;
    r.q_on_divisor = Q.on_y_axis();
    r.discriminant = discriminant(r.q_on_divisor);
    const Scalar minus_d = -invariants(nf).d;
    r.discriminant_matches_minus_d =
        r.discriminant.is_exact() && minus_d.is_exact() ? r.discriminant == minus_d : near(r.discriminant, minus_d, 1e-12);
    r.p_origin = P.coeff(0, 0);
    r.q_origin = Q.coeff(0, 0);

    const Poly2 qv = Q.dy();
    for (const auto& root : real_roots_quadratic(r.q_on_divisor, &r.near_double_root)) {
        // Linear part of (uP, vQ) at (0, v*) is lower triangular with
        // diagonal P(0, v*) and v* Q_v(0, v*).
        const Scalar e1 = P.eval(Scalar(0), root.value);
        const Scalar e2 = root.value * qv.eval(Scalar(0), root.value);
        auto nonzero = [](const Scalar& s) { return s.is_exact() ? !s.is_zero() : std::abs(s.to_double()) > 1e-12; };
        r.roots.push_back({root.value, root.multiplicity, nonzero(e1) || nonzero(e2)});
    }
    return r;
}

RationalFunction1 r21_minus_closed_form(const Invariants& inv) {
    const Scalar &a = inv.a, &b = inv.b, &c = inv.c;
    const Scalar two(2), one(1);
    return {UPoly({Scalar(-1), a - c + two, -a + b + c - two}),
            UPoly({one - c, -a + b + two * c - two, a - b - c + two})};
}

RationalFunction1 r12_plus_closed_form(const Invariants& inv) {
    const Scalar &a = inv.a, &b = inv.b, &c = inv.c;
    const Scalar two(2), one(1);
    return {UPoly({one, a + c - two, -a + b - c + two}), UPoly({c - one, -a + b - two * c + two, a - b + c - two})};
}

SaddleData saddle_data(const NormalFormField& nf) {
    const Invariants inv = invariants(nf);
    if (classify(inv).verdict != Verdict::HyperbolicFakeSaddle)
        throw NotAFakeSaddle("saddle data needs d > 0, got d = " + inv.d.str());

    const PlanarField x = nf.field();
    const BlowupResult plus = blow_up(x, {ChartKind::PiPlus, 1});
    const BlowupResult minus = blow_up(x, {ChartKind::PiMinus, 1});
    if (!plus.factored || !minus.factored) throw NotDivisible("pi-chart", "blow-up does not factor as P u, Q v");

    const Poly2 p1p = plus.factors.p, p2p = plus.factors.q;
    const Poly2 p1m = minus.factors.q.swapped(), p2m = minus.factors.p.swapped();

    SaddleData s;
    s.lambda_plus = -p2p.coeff(0, 0) / p1p.coeff(0, 0);
    s.lambda_minus = -p2m.coeff(0, 0) / p1m.coeff(0, 0);

    s.p1_plus_x = p1p.on_x_axis();
    s.p2_plus_x = p2p.on_x_axis();
    s.p1_plus_y = p1p.on_y_axis();
    s.p2_plus_y = p2p.on_y_axis();
    s.p1_minus_x = p1m.on_x_axis();
    s.p2_minus_x = p2m.on_x_axis();
    s.p1_minus_y = p1m.on_y_axis();
    s.p2_minus_y = p2m.on_y_axis();

    s.r12_minus = {s.p1_minus_y, s.p2_minus_y};
    s.r21_minus = {s.p2_minus_x, s.p1_minus_x};
    s.r12_plus = {s.p1_plus_y, s.p2_plus_y};
    s.r21_plus = {s.p2_plus_x, s.p1_plus_x};

    const UPoly f = nf.f1_on_fiber(), g = nf.g1_on_fiber();
    s.r12_minus_closed = {g.reflected() - f.reflected(), f.reflected()};
    s.r21_plus_closed = {g - f, f};
    s.r21_minus_closed = r21_minus_closed_form(inv);
    s.r12_plus_closed = r12_plus_closed_form(inv);
    return s;
}

}  // namespace fsl
