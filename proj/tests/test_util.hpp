#pragma once

#include "fsl/normal_form.hpp"

#include <random>

namespace fsl::testing {

/// Small random rational p/q with |p| <= max_num, 1 <= q <= max_den.
inline Scalar random_rational(std::mt19937& rng, int max_num = 9, int max_den = 6) {
    std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
    return Scalar::ratio(num(rng), den(rng));
}

/// Random polynomial with up to `terms` terms of total degree <= max_deg.
inline Poly2 random_poly(std::mt19937& rng, int max_deg = 3, int terms = 4) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    Poly2 p;
    for (int k = 0; k < terms; ++k) {
        unsigned i = static_cast<unsigned>(deg(rng));
        unsigned j = static_cast<unsigned>(std::uniform_int_distribution<int>(0, max_deg - static_cast<int>(i))(rng));
        p.add_term(i, j, random_rational(rng));
    }
    return p;
}

/// Random (a, b, c) with d > 0, exact rationals.
inline Invariants random_hyperbolic_abc(std::mt19937& rng) {
    for (;;) {
        Scalar a = random_rational(rng, 6, 4), b = random_rational(rng, 6, 4), c = random_rational(rng, 6, 5);
        auto inv = Invariants::from_abc(a, b, c);
        if (inv.d.sign() > 0) return inv;
    }
}

/// Random exact normal form with prescribed (a, b, c) and random higher
/// order terms. The higher terms of f1 are kept small so f1(x, 0) stays
/// positive on [-1, 1] for most draws; callers check sections themselves.
inline NormalFormField random_normal_form(std::mt19937& rng, const Invariants& inv, bool with_hot = true) {
    NormalFormField nf;
    nf.a = inv.a;
    nf.f1 = Poly2(1);
    nf.f2 = Poly2(1);
    nf.g1 = Poly2(inv.c);
    nf.g2 = Poly2(inv.b);
    if (!with_hot) return nf;
    std::uniform_int_distribution<int> small(-3, 3);
    nf.f1.add_term(1, 0, Scalar::ratio(small(rng), 8));
    nf.f1.add_term(2, 0, Scalar::ratio(small(rng), 8));
    nf.f1.add_term(0, 1, Scalar::ratio(small(rng), 4));
    nf.f1.add_term(1, 1, Scalar::ratio(small(rng), 4));
    nf.f2.add_term(1, 0, Scalar::ratio(small(rng), 4));
    nf.f2.add_term(0, 1, Scalar::ratio(small(rng), 4));
    nf.g1.add_term(1, 0, Scalar::ratio(small(rng), 4));
    nf.g1.add_term(2, 0, Scalar::ratio(small(rng), 4));
    nf.g1.add_term(0, 1, Scalar::ratio(small(rng), 4));
    nf.g2.add_term(0, 1, Scalar::ratio(small(rng), 4));
    return nf;
}

/// Random exact invariants from one of five strata: 0 d > 0, 1 c = 1 and a = b,
/// 2 d = 0 with a^2 - b^2 = 4, 3 d = 0 otherwise, 4 d < 0.
inline Invariants random_stratified(std::mt19937& rng, int stratum) {
    switch (stratum) {
        case 0: return random_hyperbolic_abc(rng);
        case 1: {  // c = 1, a = b
            Scalar a = random_rational(rng);
            return Invariants::from_abc(a, a, Scalar(1));
        }
        case 2: {  // d = 0 and a^2 - b^2 = 4
            Scalar e;
            do e = random_rational(rng); while (e.is_zero());
            Scalar a = (-e - Scalar(4) / e) / Scalar(2), b = (e - Scalar(4) / e) / Scalar(2);
            return Invariants::from_abc(a, b, Scalar(1) - e * e / Scalar(4));
        }
        case 3: {  // d = 0 otherwise
            Scalar e = random_rational(rng), a = random_rational(rng);
            return Invariants::from_abc(a, a + e, Scalar(1) - e * e / Scalar(4));
        }
        default: {
            for (;;) {
                auto inv = Invariants::from_abc(random_rational(rng), random_rational(rng), random_rational(rng));
                if (inv.d.sign() < 0) return inv;
            }
        }
    }
}

}  // namespace fsl::testing
