#pragma once

#include "fsl/field.hpp"

#include <json.hpp>

namespace fsl {

using json = nlohmann::json;

// Exact scalars serialize as "p/q" strings, floats as JSON numbers.
void to_json(json& j, const Scalar& s);
void from_json(const json& j, Scalar& s);

// {"terms": [[i, j, "p/q"], ...]} or {"terms": [[i, j, 1.25], ...], "mode": "float"}
void to_json(json& j, const Poly2& p);
void from_json(const json& j, Poly2& p);

// {"p": Poly2, "q": Poly2}
void to_json(json& j, const PlanarField& f);
void from_json(const json& j, PlanarField& f);

void to_json(json& j, const UPoly& p);
void to_json(json& j, const RationalFunction1& r);

}  // namespace fsl
