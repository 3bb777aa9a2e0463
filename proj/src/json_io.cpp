#include "fsl/json_io.hpp"

#include <stdexcept>

namespace fsl {

void to_json(json& j, const Scalar& s) {
    if (s.is_exact())
        j = s.str();
    else
        j = s.to_double();
}

void from_json(const json& j, Scalar& s) {
    if (j.is_string()) {
        s = Scalar::parse(j.get<std::string>());
    } else if (j.is_number_integer()) {
        s = Scalar(Rational(j.get<long>()));
    } else if (j.is_number()) {
        s = Scalar(j.get<double>());
    } else {
        throw std::invalid_argument("expected a number or a \"p/q\" string, got " + j.dump());
    }
}

void to_json(json& j, const Poly2& p) {
    const bool exact = p.is_exact();
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        if (exact)
            terms.push_back(json::array({e.first, e.second, c.str()}));
        else
            terms.push_back(json::array({e.first, e.second, c.to_double()}));
    }
    j = json{{"terms", terms}};
    if (!exact) j["mode"] = "float";
}

void from_json(const json& j, Poly2& p) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw std::invalid_argument("Poly2 JSON must be an object with a \"terms\" array");
    const bool float_mode = j.contains("mode") && j.at("mode") == "float";
    Poly2 out;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("Poly2 term must be [i, j, coeff]");
        const long i = t[0].get<long>(), jj = t[1].get<long>();
        if (i < 0 || jj < 0) throw std::invalid_argument("Poly2 exponents must be nonnegative");
        Scalar c = t[2].get<Scalar>();
        if (float_mode) c = Scalar(c.to_double());
        out.add_term(static_cast<unsigned>(i), static_cast<unsigned>(jj), c);
    }
    p = std::move(out);
}

void to_json(json& j, const PlanarField& f) { j = json{{"p", f.p}, {"q", f.q}}; }

void from_json(const json& j, PlanarField& f) {
    f.p = j.at("p").get<Poly2>();
    f.q = j.at("q").get<Poly2>();
}

void to_json(json& j, const UPoly& p) {
    j = json::array();
    for (const auto& c : p.coeffs()) j.push_back(c);
}

void to_json(json& j, const RationalFunction1& r) { j = json{{"num", r.num}, {"den", r.den}}; }

}  // namespace fsl
