// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "cli.hpp"
#include "fsl/asymptotics.hpp"
#include "fsl/blowup.hpp"
#include "fsl/casebook.hpp"
#include "fsl/cases.hpp"
#include "fsl/flow.hpp"
#include "test_util.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace fsl;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

double rel(double a, double b) { return std::abs(a / b - 1.0); }

bool criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << "  " << title << "  [" << std::fixed
              << std::setprecision(2) << secs << " s]" << std::defaultfloat;
    const std::string d = o.detail.str();
    if (!d.empty()) std::cout << "  " << d;
    std::cout << '\n';
    return o.pass;
}

// Normal forms whose f1(x, 0) is positive on the sections.
NormalFormField random_instance(std::mt19937& rng, const SectionPair& s) {
    for (;;) {
        const NormalFormField nf = testing::random_normal_form(rng, testing::random_hyperbolic_abc(rng));
        try {
            check_sections(nf, s);
            return nf;
        } catch (const SectionInvalid&) {
        }
    }
}

}  // namespace

int main() {
    bool all = true;

    all &= criterion(1, "exact blow-up regression", [](Outcome& o) {
        const PlanarField y0 = blow_up(build_Xn(4), {ChartKind::XDirectionalSwapped, 1}).field;
        const PlanarField y1 = pullback_affine(y0, AffineMap2::shift(Scalar(-1), Scalar(0)));
        o.require(y0 == y0_printed(), "Y0 differs from the printed field");
        o.require(y1 == y1_printed(), "Y1 differs from the printed field");
        const std::pair<Scalar, Scalar> grid[] = {{Scalar(1), Scalar(1)},
                                                  {Scalar(-1), Scalar::ratio(1, 2)},
                                                  {Scalar::ratio(3, 2), Scalar::ratio(2, 5)},
                                                  {Scalar(0), Scalar::ratio(3, 8)},
                                                  {Scalar::ratio(-7, 3), Scalar(5)}};
        for (const auto& [alpha, beta] : grid) {
            const PlanarField ymu = blow_up(build_Z(alpha, beta), {ChartKind::XDirectional, 2}).field.swapped();
            o.require(ymu.is_exact(), "Y_mu not exact");
            o.require(ymu == y_mu_printed(alpha, beta), "Y_mu differs at alpha " + alpha.str() + ", beta " + beta.str());
        }
        o.detail << (o.pass ? "Y0, Y1 and Y_mu at 5 rational parameter points equal" : "");
    });

    all &= criterion(2, "F_arctan is -pi", [](Outcome& o) {
        std::mt19937 rng(20240601);
        std::uniform_real_distribution<double> u(-5.0, 5.0);
        double worst = 0.0;
        for (int n = 0; n < 1000;) {
            const double a = u(rng), b = u(rng), c = u(rng);
            if (4.0 * (1.0 - c) - (a - b) * (a - b) <= 0.0) continue;
            ++n;
            worst = std::max(worst, std::abs(F_arctan(a, b, c) + kPi));
        }
        o.require(worst < 1e-10, "max |F + pi| too large");
        o.detail << "max |F + pi| = " << worst << " over 1000 samples";
    });

    all &= criterion(3, "PV regularization matches the eps-limit", [](Outcome& o) {
        std::mt19937 rng(3);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const SectionPair s{-1.0 + 0.25 * (trial % 3), 1.0 - 0.125 * (trial % 4)};
            const NormalFormField nf = random_instance(rng, s);
            worst = std::max(worst, std::abs(pv_integral(nf, s) - pv_integral_eps_oracle(nf, s)));
        }
        o.require(worst < 1e-8, "disagreement above 1e-8");
        o.detail << "max |difference| = " << worst << " over 100 normal forms";
    });

    all &= criterion(4, "Delta00 path independence", [](Outcome& o) {
        std::mt19937 rng(4);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const SectionPair s{-1.0 + 0.25 * (trial % 3), 1.0 - 0.125 * (trial % 4)};
            const NormalFormField nf = random_instance(rng, s);
            worst = std::max(worst, rel(delta00_via_L(nf, s), std::exp(gamma_pm(nf, s).first)));
        }
        o.require(worst < 1e-7, "relative deviation above 1e-7");
        o.detail << "max relative deviation = " << worst << " over 100 instances";
    });

    all &= criterion(5, "Y1 transition slope", [](Outcome& o) {
        const NormalFormField y1 = validate_and_build(y1_printed());
        for (auto [alpha, omega] : {std::pair{-1.0, 0.5}, std::pair{-0.5, 0.25}, std::pair{-2.0, 0.9}}) {
            const auto [gp, gm] = gamma_pm(y1, {alpha, omega});
            const double expected = std::abs((1.0 - alpha) / (1.0 - omega));
            o.require(rel(std::exp(gp), expected) < 1e-8 && rel(std::exp(gm), expected) < 1e-8,
                      "formula off at sections (" + std::to_string(alpha) + ", " + std::to_string(omega) + ")");
        }
        const double up = transition_slope(y1, {-1.0, 0.5}, +1).value;
        const double down = transition_slope(y1, {-1.0, 0.5}, -1).value;
        o.require(rel(up, 4.0) < 0.01 && rel(down, 4.0) < 0.01, "measured slope off by more than 1%");
        o.detail << "measured " << up << " (y>0), " << down << " (y<0), expected 4";
    });

    all &= criterion(6, "phase portrait field: stability and first integral", [](Outcome& o) {
        const NormalFormField nf = build_example6(Scalar(1), Scalar(-1), Scalar(-1));
        const SectionPair s{-1.0, 1.0};
        const double up = transition_slope(nf, s, +1).value;
        const double down = transition_slope(nf, s, -1).value;
        o.require(rel(up, std::exp(-kPi)) < 0.01, "y>0 slope is not exp(-pi)");
        o.require(rel(down, std::exp(kPi)) < 0.01, "y<0 slope is not exp(pi)");
        o.require(up < 1.0, "y>0 side is not contractive");
        double drift = 0.0;
        int orbits = 0;
        for (double y0 : default_offsets())
            for (int side : {+1, -1}) {
                const TransitResult t = transit(nf.field(), s.alpha, s.omega, side * y0, {}, true);
                drift = std::max(drift, conservation_check(example6_first_integral, t.trajectory, 2 * kPi));
                ++orbits;
            }
        o.require(drift < 1e-6, "first integral drifts");
        const double measured_gp = std::log(up);
        o.require(std::abs(gamma_pm(nf, s).first - measured_gp) < 0.01,
                  "closed-form gamma_plus disagrees with the numerics");
        o.detail << "measured " << up << " (y>0), " << down << " (y<0); numerics support gamma_plus = "
                 << (measured_gp < 0 ? "-pi" : "+pi") << "; drift " << drift << " over " << orbits << " orbits";
    });

    all &= criterion(7, "degenerate family", [](Outcome& o) {
        const std::array<int, 2> w{1, 2};
        // (i)
        const ProbeVerdict below = monodromy_probe(build_Z(Scalar(1), Scalar::ratio(1, 5)), 0.1, {}, 8, w);
        const ProbeVerdict above = monodromy_probe(build_Z(Scalar(1), Scalar::ratio(3, 10)), 0.1, {}, 8, w);
        o.require(below == ProbeVerdict::Transit, "(i) beta = 0.2 is " + to_string(below));
        o.require(above == ProbeVerdict::Monodromic, "(i) beta = 0.3 is " + to_string(above));
        // (ii)
        double worst_gamma = 0.0;
        for (long a : {-1, 0, 1})
            for (auto b : {Scalar::ratio(3, 8), Scalar::ratio(1, 2), Scalar(1), Scalar(2)}) {
                const double be = b.to_double();
                const auto [gp, gm] = gamma_pm_infinite(x_mu_printed(Scalar(a), b));
                const double pv = a / (be * std::sqrt(3.0)), g = 1.0 / std::sqrt(4.0 * be - 1.0);
                worst_gamma = std::max({worst_gamma, std::abs(gp - kPi * (pv - g)), std::abs(gm - kPi * (pv + g))});
            }
        o.require(worst_gamma < 1e-8, "(ii) gamma_pm off");
        // (iii)
        double worst_return = 0.0;
        for (auto [a, b] : {std::pair{1L, 1L}, std::pair{-1L, 1L}, std::pair{1L, 2L}}) {
            const double e = return_slope(build_Z(Scalar(a), Scalar(b)), ReturnSection::PositiveY, deep_offsets(), {},
                                          10.0, std::numeric_limits<double>::infinity(), w)
                                 .value;
            worst_return = std::max(worst_return, rel(e, std::exp(2 * kPi * a / (b * std::sqrt(3.0)))));
        }
        o.require(worst_return < 0.02, "(iii) return slope off by more than 2%");
        // (iv)
        const double center = return_slope(build_Z(Scalar(0), Scalar(1)), ReturnSection::PositiveY, deep_offsets(), {},
                                           10.0, std::numeric_limits<double>::infinity(), w)
                                  .value;
        o.require(std::abs(center - 1.0) < 1e-3, "(iv) center slope is not 1");
        o.detail << "probe " << to_string(below) << "/" << to_string(above) << "; gamma err " << worst_gamma
                 << "; return rel dev " << worst_return << "; center " << center;
    });

    all &= criterion(8, "classification against the blow-up divisor", [](Outcome& o) {
        std::mt19937 rng(8);
        int seen[4] = {0, 0, 0, 0};
        for (int trial = 0; trial < 1000; ++trial) {
            const Invariants inv = testing::random_stratified(rng, trial % 5);
            const NormalFormField nf = testing::random_normal_form(rng, inv);
            const Classification cl = classify(invariants(nf));
            const DivisorReport rep = divisor_report(nf);
            if (rep.discriminant != -inv.d) o.require(false, "discriminant != -d at trial " + std::to_string(trial));
            if (cl.extra_divisor_singularities() != rep.extra_singularities())
                o.require(false, "root count differs at trial " + std::to_string(trial));
            ++seen[static_cast<int>(cl.verdict)];
        }
        for (int v = 0; v < 4; ++v)
            o.require(seen[v] > 0, "verdict " + to_string(static_cast<Verdict>(v)) + " never drawn");
        o.detail << "verdict counts " << seen[0] << "/" << seen[1] << "/" << seen[2] << "/" << seen[3];
    });

    all &= criterion(9, "reproduce --all", [](Outcome& o) {
        std::ostringstream out, err;
        const int code = cli::run({"reproduce", "--all"}, out, err);
        o.require(code == 0, "exit code " + std::to_string(code));
        const std::string table = out.str();
        const auto last = table.find_last_of('\n', table.size() - 2);
        o.detail << table.substr(last + 1, table.size() - last - 2);
    });

    return all ? 0 : 1;
}
