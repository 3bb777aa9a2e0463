#pragma once

#include "fsl/errors.hpp"
#include "fsl/field.hpp"
#include "fsl/json_io.hpp"

#include <string>
#include <vector>

namespace fsl {

/// One member of the family
///   x' = x^2 f1(x,y) + a x y + y^2 f2(x,y),   y' = (x g1(x,y) + y g2(y)) y
/// with f1(0,0) = f2(0,0) = 1. The singular fiber is y = 0.
struct NormalFormField {
    Poly2 f1;
    Poly2 f2;
    Poly2 g1;
    Poly2 g2;  // depends on y only
    Scalar a;

    PlanarField field() const;
    bool is_exact() const;
    /// f1(x, 0) and g1(x, 0), the data the transition asymptotics depend on.
    UPoly f1_on_fiber() const { return f1.on_x_axis(); }
    UPoly g1_on_fiber() const { return g1.on_x_axis(); }
};

enum class NormalFormDefect {
    QNotDivisibleByY,
    QHasLinearTerm,
    PHasLowOrderTerms,
    F1NotNormalized,
    F2NotNormalized,
};

std::string to_string(NormalFormDefect d);

class NotInNormalForm : public Error {
public:
    NotInNormalForm(NormalFormDefect defect, const std::string& detail)
        : Error("not in normal form: " + to_string(defect) + (detail.empty() ? "" : " (" + detail + ")")),
          defect_(defect) {}
    NormalFormDefect defect() const { return defect_; }

private:
    NormalFormDefect defect_;
};

/// Splits a raw field into (f1, f2, g1, g2, a).
///
/// a is the coefficient of xy in p; monomials x^i y^j of p with i >= 2 go to
/// f1, the remaining ones must be divisible by y^2 and go to f2 (so x y^j,
/// j >= 2, lands in f2). q must be divisible by y; terms of q/y with a
/// factor x go to g1 and pure powers of y go to g2.
NormalFormField validate_and_build(const PlanarField& raw);

struct Invariants {
    Scalar a;
    Scalar b;  // g2(0)
    Scalar c;  // g1(0,0)
    Scalar d;  // 4(1-c) - (a-b)^2

    static Invariants from_abc(Scalar a, Scalar b, Scalar c);
    bool is_exact() const { return a.is_exact() && b.is_exact() && c.is_exact(); }
};

Invariants invariants(const NormalFormField& nf);

enum class Verdict { HyperbolicFakeSaddle, SemiHyperbolicFakeSaddle, NotFakeSaddle, BoundaryIndeterminate };

std::string to_string(Verdict v);

/// Singular point (u, v) = (0, location) of the blow-up in the chart (u, uv).
struct DivisorPoint {
    Scalar location;
    int multiplicity = 1;
};

struct Classification {
    Verdict verdict = Verdict::NotFakeSaddle;
    Scalar ratio;  // hyperbolicity ratio 1 - c, set for HyperbolicFakeSaddle
    /// Divisor singularities besides (0, 0): the real roots v != 0 of
    /// -v^2 + (b - a) v + c - 1.
    std::vector<DivisorPoint> extra_points;
    /// e.g. "BoundaryNearZero" when a float-mode zero test was close.
    std::vector<std::string> warnings;

    bool is_fake_saddle() const {
        return verdict == Verdict::HyperbolicFakeSaddle || verdict == Verdict::SemiHyperbolicFakeSaddle;
    }
    int extra_divisor_singularities() const { return static_cast<int>(extra_points.size()); }
};

Classification classify(const Invariants& inv);

/// Image under (x, y) -> (x, -y); maps invariants (a, b, c) to (-a, -b, c).
NormalFormField reflect_fiber(const NormalFormField& nf);

// {"f1", "f2", "g1", "g2": Poly2, "a": Scalar}
void to_json(json& j, const NormalFormField& nf);
void from_json(const json& j, NormalFormField& nf);
void to_json(json& j, const Invariants& inv);
void to_json(json& j, const Classification& c);

}  // namespace fsl
