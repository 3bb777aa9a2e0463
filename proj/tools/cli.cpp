#include "cli.hpp"

#include "fsl/asymptotics.hpp"
#include "fsl/casebook.hpp"
#include "fsl/cases.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

namespace fsl::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Bad flags or input that names no usable field.
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputFlags {
    std::string case_id;
    std::string file;
    std::string field;
    std::string a = "1", b = "-1", c = "-1";
    std::string alpha_param = "1", beta = "1";
};

struct OutputFlags {
    std::string format = "human";
    bool json = false;
    std::optional<double> rel_tol;
    std::optional<double> abs_tol;
};

void add_input(CLI::App* sub, InputFlags& in) {
    sub->add_option("--case", in.case_id, "built-in field: example6, z-family, y0, y1, x3, x4");
    sub->add_option("--file", in.file, "JSON file holding a planar field {p, q} or a normal form {f1, f2, g1, g2, a}");
    sub->add_option("--field", in.field, "the same JSON inline");
    sub->add_option("--a", in.a, "example6: coefficient of xy in x'");
    sub->add_option("--b", in.b, "example6: coefficient of y^2 in y'");
    sub->add_option("--c", in.c, "example6: coefficient of xy in y'");
    sub->add_option("--alpha-param", in.alpha_param, "z-family: alpha");
    sub->add_option("--beta", in.beta, "z-family: beta");
}

void add_output(CLI::App* sub, OutputFlags& o) {
    sub->add_option("--format", o.format, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
    sub->add_flag("--json", o.json, "same as --format json");
    sub->add_option("--rel-tol", o.rel_tol, "integrator relative tolerance");
    sub->add_option("--abs-tol", o.abs_tol, "integrator absolute tolerance");
}

std::string format_of(const OutputFlags& o) { return o.json ? "json" : o.format; }

IntegratorConfig config_of(const OutputFlags& o) {
    IntegratorConfig cfg;
    if (const char* env = std::getenv("FSL_TOL"); env && *env) {
        try {
            cfg = parse_tolerances(env, cfg);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("FSL_TOL: ") + e.what());
        }
    }
    if (o.rel_tol) cfg.rel_tol = *o.rel_tol;
    if (o.abs_tol) cfg.abs_tol = *o.abs_tol;
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) throw UsageError("tolerances must be positive");
    return cfg;
}

// The field named on the command line, in whichever form it came.
struct Input {
    std::string label;
    PlanarField raw;
    std::optional<NormalFormField> normal;
    bool z_family = false;
    Scalar alpha, beta;
    bool first_integral = false;  // example6 at (1, -1, -1)

    NormalFormField normal_form() const {
        if (normal) return *normal;
        if (z_family) {
            if (!(beta.to_double() > 0.0)) throw UsageError("the rescaled z-family needs beta > 0");
            return x_mu_printed(alpha, beta);
        }
        return validate_and_build(raw);
    }
};

// "1" rather than "1/1" for integers.
std::string show(const Scalar& v) {
    std::string t = v.str();
    if (t.size() > 2 && t.compare(t.size() - 2, 2, "/1") == 0) t.resize(t.size() - 2);
    return t;
}

Scalar scalar_flag(const std::string& name, const std::string& text) {
    try {
        return Scalar::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(name + ": " + e.what());
    }
}

Input input_from_json(const json& j, const std::string& label) {
    Input in;
    in.label = label;
    if (j.contains("p") && j.contains("q")) {
        in.raw = j.get<PlanarField>();
    } else if (j.contains("f1")) {
        in.normal = j.get<NormalFormField>();
        in.raw = in.normal->field();
    } else {
        throw UsageError("JSON input needs keys p, q or f1, f2, g1, g2, a");
    }
    return in;
}

Input load(const InputFlags& f) {
    const int sources = !f.case_id.empty() + !f.file.empty() + !f.field.empty();
    if (sources != 1) throw UsageError("give exactly one of --case, --file, --field");
    if (!f.file.empty()) {
        std::ifstream is(f.file);
        if (!is) throw UsageError("cannot read " + f.file);
        return input_from_json(json::parse(is), f.file);
    }
    if (!f.field.empty()) return input_from_json(json::parse(f.field), "inline field");

    Input in;
    const std::string& id = f.case_id;
    if (id == "example6") {
        const Scalar a = scalar_flag("--a", f.a), b = scalar_flag("--b", f.b), c = scalar_flag("--c", f.c);
        in.normal = build_example6(a, b, c);
        in.raw = in.normal->field();
        in.label = "example6 (a, b, c) = (" + show(a) + ", " + show(b) + ", " + show(c) + ")";
        in.first_integral = a == Scalar(1) && b == Scalar(-1) && c == Scalar(-1);
    } else if (id == "z-family") {
        in.z_family = true;
        in.alpha = scalar_flag("--alpha-param", f.alpha_param);
        in.beta = scalar_flag("--beta", f.beta);
        in.raw = build_Z(in.alpha, in.beta);
        in.label = "z-family (alpha, beta) = (" + show(in.alpha) + ", " + show(in.beta) + ")";
    } else if (id == "y0") {
        in.raw = y0_printed();
        in.label = "y0";
    } else if (id == "y1") {
        in.raw = y1_printed();
        in.label = "y1";
    } else if (id == "x3" || id == "x4") {
        in.raw = build_Xn(id == "x3" ? 3 : 4);
        in.label = id;
    } else {
        throw UsageError("unknown case " + id);
    }
    return in;
}

double rel_dev(double a, double b) { return std::abs(a / b - 1.0); }

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// ---- classify

struct ClassifyFlags {
    InputFlags in;
    OutputFlags out;
};

int cmd_classify(const ClassifyFlags& f, std::ostream& os) {
    const Input in = load(f.in);
    const NormalFormField nf = in.normal_form();
    const Invariants inv = invariants(nf);
    const Classification cls = classify(inv);
    const std::string fmt = format_of(f.out);
    if (fmt == "json") {
        os << json{{"input", in.label}, {"invariants", inv}, {"classification", cls}}.dump(2) << '\n';
    } else if (fmt == "csv") {
        os << "a,b,c,d,verdict,ratio\n";
        os << show(inv.a) << ',' << show(inv.b) << ',' << show(inv.c) << ',' << show(inv.d) << ','
           << to_string(cls.verdict) << ',' << (cls.verdict == Verdict::HyperbolicFakeSaddle ? show(cls.ratio) : "")
           << '\n';
    } else {
        os << "input      " << in.label << '\n';
        os << "invariants a = " << show(inv.a) << ", b = " << show(inv.b) << ", c = " << show(inv.c)
           << ", d = " << show(inv.d) << '\n';
        os << "verdict    " << to_string(cls.verdict) << '\n';
        if (cls.verdict == Verdict::HyperbolicFakeSaddle) os << "ratio      " << show(cls.ratio) << '\n';
        os << "divisor    " << cls.extra_divisor_singularities() << " singular point(s) besides v = 0";
        for (const auto& p : cls.extra_points) os << "  v = " << show(p.location) << " (x" << p.multiplicity << ')';
        os << '\n';
        for (const auto& w : cls.warnings) os << "warning    " << w << '\n';
    }
    return kOk;
}

// ---- gamma

struct GammaFlags {
    InputFlags in;
    OutputFlags out;
    double alpha = -1.0, omega = 1.0;
    bool infinite = false;
};

int cmd_gamma(const GammaFlags& f, std::ostream& os) {
    const Input in = load(f.in);
    const NormalFormField nf = in.normal_form();
    const TransitionReport r = f.infinite ? transition_report_infinite(nf) : transition_report(nf, {f.alpha, f.omega});
    // Closed form of the rescaled degenerate family, for comparison.
    std::optional<std::pair<double, double>> family;
    if (in.z_family && f.infinite && in.beta.to_double() > 0.25) {
        const double al = in.alpha.to_double(), be = in.beta.to_double();
        const double pv = kPi * al / (be * std::sqrt(3.0)), g = kPi / std::sqrt(4.0 * be - 1.0);
        family = {pv - g, pv + g};
    }
    const std::string fmt = format_of(f.out);
    if (fmt == "json") {
        json j = r;
        j["input"] = in.label;
        if (family) j["family_closed_form"] = {{"gamma_plus", family->first}, {"gamma_minus", family->second}};
        os << j.dump(2) << '\n';
        return kOk;
    }
    if (fmt == "csv") {
        os << "quantity,value\n";
        os << "pv," << r.pv << "\ngamma0," << r.gamma0 << "\ngamma_plus," << r.gamma_plus << "\ngamma_minus,"
           << r.gamma_minus << "\ndelta00_closed," << r.delta00_closed << '\n';
        if (r.has_delta00_via_L) os << "delta00_via_L," << r.delta00_via_L << '\n';
        return kOk;
    }
    os << std::setprecision(12);
    os << "input    " << in.label << '\n';
    if (f.infinite)
        os << "sections x = -inf .. +inf (symmetric)\n";
    else
        os << "sections x = " << f.alpha << " .. " << f.omega << '\n';
    os << "PV       " << r.pv << '\n';
    os << "gamma0   " << r.gamma0 << '\n';
    os << "gamma+   " << r.gamma_plus << '\n';
    os << "gamma-   " << r.gamma_minus << '\n';
    os << "Delta00  closed " << r.delta00_closed;
    if (r.has_delta00_via_L)
        os << "  via L " << r.delta00_via_L << "  rel dev " << std::setprecision(3)
           << rel_dev(r.delta00_via_L, r.delta00_closed) << std::setprecision(12);
    os << '\n';
    if (family)
        os << "family   gamma+ " << family->first << "  gamma- " << family->second << "  abs dev "
           << std::setprecision(3) << std::max(std::abs(r.gamma_plus - family->first),
                                               std::abs(r.gamma_minus - family->second))
           << '\n';
    return kOk;
}

// ---- transit

struct TransitFlags {
    InputFlags in;
    OutputFlags out;
    double alpha = -1.0, omega = 1.0;
    std::string side = "both";
    std::vector<double> offsets;
};

int cmd_transit(const TransitFlags& f, std::ostream& os) {
    const Input in = load(f.in);
    const NormalFormField nf = in.normal_form();
    const IntegratorConfig cfg = config_of(f.out);
    const SectionPair s{f.alpha, f.omega};
    check_sections(nf, s);
    std::optional<std::pair<double, double>> closed;
    try {
        closed = gamma_pm(nf, s);
    } catch (const NotHyperbolicFakeSaddle&) {
    }
    std::vector<int> sides;
    if (f.side == "both" || f.side == "+1") sides.push_back(+1);
    if (f.side == "both" || f.side == "-1") sides.push_back(-1);
    const std::vector<double> offsets = f.offsets.empty() ? default_offsets() : f.offsets;

    json rows = json::array();
    for (int side : sides) {
        const SlopeEstimate e = transition_slope(nf, s, side, offsets, cfg);
        std::optional<double> cf;
        if (closed) cf = std::exp(side > 0 ? closed->first : closed->second);
        rows.push_back({{"side", side},
                        {"estimate", e},
                        {"closed_form", optional_number(cf)},
                        {"relative_deviation", cf ? json(rel_dev(e.value, *cf)) : json(nullptr)}});
    }
    const std::string fmt = format_of(f.out);
    if (fmt == "json") {
        os << json{{"input", in.label}, {"sections", s}, {"sides", rows}}.dump(2) << '\n';
    } else if (fmt == "csv") {
        os << "side,empirical,closed_form,relative_deviation,residual\n";
        for (const auto& r : rows)
            os << r["side"] << ',' << r["estimate"]["value"] << ',' << r["closed_form"] << ','
               << r["relative_deviation"] << ',' << r["estimate"]["residual"] << '\n';
    } else {
        os << std::setprecision(10);
        os << "input    " << in.label << "\nsections x = " << f.alpha << " .. " << f.omega << '\n';
        os << "side   empirical        closed form      rel dev\n";
        for (const auto& r : rows) {
            os << std::left << std::setw(7) << (r["side"] == 1 ? "y>0" : "y<0") << std::setw(17)
               << r["estimate"]["value"].get<double>();
            if (r["closed_form"].is_null())
                os << "n/a";
            else
                os << std::setw(17) << r["closed_form"].get<double>() << std::setprecision(3)
                   << r["relative_deviation"].get<double>() << std::setprecision(10);
            os << '\n';
        }
    }
    return kOk;
}

// ---- return

struct ReturnFlags {
    InputFlags in;
    OutputFlags out;
    std::string section = "y";
    std::vector<int> weights;
    std::optional<double> guard;
    std::vector<double> offsets;
};

int cmd_return(const ReturnFlags& f, std::ostream& os) {
    const Input in = load(f.in);
    const IntegratorConfig cfg = config_of(f.out);
    const ReturnSection sec = f.section == "x" ? ReturnSection::PositiveX : ReturnSection::PositiveY;
    // The degenerate family is quasi-homogeneous with weights (1, 2).
    std::array<int, 2> w = in.z_family ? std::array<int, 2>{1, 2} : std::array<int, 2>{1, 1};
    if (!f.weights.empty()) w = {f.weights[0], f.weights[1]};
    const bool weighted = w[0] != w[1];
    const std::vector<double> offsets =
        !f.offsets.empty() ? f.offsets : (weighted ? deep_offsets() : default_offsets());
    const double guard = f.guard.value_or(in.z_family ? 10.0 : 1.0);
    const SlopeEstimate e = return_slope(in.raw, sec, offsets, cfg, guard, std::numeric_limits<double>::infinity(), w);

    std::optional<double> closed;
    if (in.z_family) {
        const double g = 2 * kPi * in.alpha.to_double() / (in.beta.to_double() * std::sqrt(3.0));
        // On y = 0 the return is conjugate to the one on x = 0 by a power map of exponent 2/3.
        closed = std::exp(sec == ReturnSection::PositiveY ? g : 1.5 * g);
    }
    const std::string fmt = format_of(f.out);
    if (fmt == "json") {
        os << json{{"input", in.label},
                   {"section", to_string(sec)},
                   {"weights", w},
                   {"estimate", e},
                   {"closed_form", optional_number(closed)},
                   {"relative_deviation", closed ? json(rel_dev(e.value, *closed)) : json(nullptr)}}
                  .dump(2)
           << '\n';
    } else if (fmt == "csv") {
        os << std::setprecision(17) << "offset,slope\n";
        for (std::size_t i = 0; i < e.offsets_used.size(); ++i)
            os << e.offsets_used[i] << ',' << e.per_offset_slopes[i] << '\n';
        os << "limit," << e.value << '\n';
    } else {
        os << std::setprecision(10);
        os << "input      " << in.label << "\nsection    " << to_string(sec) << "  weights (" << w[0] << ", " << w[1]
           << ")\n";
        os << "empirical  " << e.value << "  (residual " << std::setprecision(3) << e.residual << ")\n"
           << std::setprecision(10);
        if (closed)
            os << "closed     " << *closed << "  rel dev " << std::setprecision(3) << rel_dev(e.value, *closed) << '\n';
    }
    return kOk;
}

// ---- reproduce

struct ReproduceFlags {
    std::string id;
    bool all = false;
    std::string dump;
    OutputFlags out;
};

int cmd_reproduce(const ReproduceFlags& f, std::ostream& os) {
    if (f.all == !f.id.empty()) throw UsageError("give either a case id or --all");
    CaseOptions opt;
    opt.cfg = config_of(f.out);
    opt.dump_dir = f.dump;
    std::vector<CaseResult> results;
    if (f.all)
        results = run_all(opt);
    else
        results.push_back(run_case(f.id, opt));
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed();
    if (format_of(f.out) == "json")
        os << json(results).dump(2) << '\n';
    else
        print_table(os, results);
    return ok ? kOk : kCheckFailed;
}

// ---- portrait

struct PortraitFlags {
    InputFlags in;
    OutputFlags out;
    std::vector<double> window{-1, 1, -1, 1};
    int orbits = 12;
    std::string dir = "portrait";
};

int cmd_portrait(const PortraitFlags& f, std::ostream& os) {
    const Input in = load(f.in);
    const IntegratorConfig cfg = config_of(f.out);
    const Window w{f.window[0], f.window[1], f.window[2], f.window[3]};
    const std::vector<Trajectory> orbits = phase_portrait(in.raw, w, f.orbits, cfg);
    const std::vector<std::string> files = write_portrait(f.dir, orbits, w, in.label);
    std::optional<double> drift;
    if (in.first_integral) {
        drift = 0.0;
        for (const auto& t : orbits) drift = std::max(*drift, conservation_check(example6_first_integral, t, 2 * kPi));
    }
    if (format_of(f.out) == "json") {
        os << json{{"input", in.label},
                   {"window", f.window},
                   {"orbits", orbits.size()},
                   {"files", files},
                   {"first_integral_drift", optional_number(drift)}}
                  .dump(2)
           << '\n';
    } else {
        os << "wrote " << files.size() << " file(s) for " << orbits.size() << " orbit(s) to " << f.dir << '\n';
        if (drift) os << "max first-integral drift " << std::setprecision(3) << *drift << '\n';
    }
    return kOk;
}

}  // namespace

IntegratorConfig parse_tolerances(const std::string& text, IntegratorConfig base) {
    auto number = [](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number '" + s + "'");
        }
        if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
        return v;
    };
    if (text.find('=') == std::string::npos) {
        base.rel_tol = number(text);
        base.abs_tol = base.rel_tol / 100.0;
        return base;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "rel")
            base.rel_tol = number(value);
        else if (key == "abs")
            base.abs_tol = number(value);
        else if (key == "max_steps")
            base.max_steps = static_cast<long>(number(value));
        else
            throw std::invalid_argument("unknown key '" + key + "'");
    }
    return base;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fake-saddle classification, transition asymptotics and numerical cross-checks", "fsl"};
    app.require_subcommand(1);

    ClassifyFlags classify_f;
    auto* classify_cmd = app.add_subcommand("classify", "invariants (a, b, c, d) and the verdict");
    add_input(classify_cmd, classify_f.in);
    add_output(classify_cmd, classify_f.out);

    GammaFlags gamma_f;
    auto* gamma_cmd = app.add_subcommand("gamma", "closed-form transition exponents and both Delta00 paths");
    add_input(gamma_cmd, gamma_f.in);
    add_output(gamma_cmd, gamma_f.out);
    auto* g_alpha = gamma_cmd->add_option("--alpha", gamma_f.alpha, "entry section x = alpha < 0");
    auto* g_omega = gamma_cmd->add_option("--omega", gamma_f.omega, "exit section x = omega > 0");
    gamma_cmd->add_flag("--infinite", gamma_f.infinite, "sections at x = -inf, +inf")->excludes(g_alpha)->excludes(g_omega);

    TransitFlags transit_f;
    auto* transit_cmd = app.add_subcommand("transit", "measured transition slope next to the closed form");
    add_input(transit_cmd, transit_f.in);
    add_output(transit_cmd, transit_f.out);
    transit_cmd->add_option("--alpha", transit_f.alpha, "entry section x = alpha < 0");
    transit_cmd->add_option("--omega", transit_f.omega, "exit section x = omega > 0");
    transit_cmd->add_option("--side", transit_f.side, "+1 (y > 0), -1 (y < 0) or both")
        ->check(CLI::IsMember({"+1", "-1", "both"}));
    transit_cmd->add_option("--offsets", transit_f.offsets, "decreasing start offsets |y0|")->delimiter(',');

    ReturnFlags return_f;
    auto* return_cmd = app.add_subcommand("return", "measured first-return slope");
    add_input(return_cmd, return_f.in);
    add_output(return_cmd, return_f.out);
    return_cmd->add_option("--section", return_f.section, "y: x = 0, y > 0; x: y = 0, x > 0")
        ->check(CLI::IsMember({"x", "y"}));
    return_cmd->add_option("--weights", return_f.weights, "polar weights p q")->expected(2)->check(CLI::PositiveNumber);
    return_cmd->add_option("--guard", return_f.guard, "orbits beyond this scale count as escaped");
    return_cmd->add_option("--offsets", return_f.offsets, "decreasing start points on the section")->delimiter(',');

    ReproduceFlags reproduce_f;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "run casebook entries and print a pass/fail table");
    reproduce_cmd->add_option("id", reproduce_f.id, "case id");
    reproduce_cmd->add_flag("--all", reproduce_f.all, "every registered case");
    reproduce_cmd->add_option("--dump", reproduce_f.dump, "directory for orbit CSVs");
    add_output(reproduce_cmd, reproduce_f.out);

    PortraitFlags portrait_f;
    auto* portrait_cmd = app.add_subcommand("portrait", "orbit CSVs and a gnuplot script");
    add_input(portrait_cmd, portrait_f.in);
    add_output(portrait_cmd, portrait_f.out);
    portrait_cmd->add_option("--window", portrait_f.window, "xmin xmax ymin ymax")->expected(4);
    portrait_cmd->add_option("--orbits", portrait_f.orbits, "number of seed orbits")->check(CLI::NonNegativeNumber);
    portrait_cmd->add_option("--out", portrait_f.dir, "output directory");

    std::vector<std::string> argv_store{"fsl"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kParseError;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(classify_f, out);
        if (gamma_cmd->parsed()) return cmd_gamma(gamma_f, out);
        if (transit_cmd->parsed()) return cmd_transit(transit_f, out);
        if (return_cmd->parsed()) return cmd_return(return_f, out);
        if (reproduce_cmd->parsed()) return cmd_reproduce(reproduce_f, out);
        if (portrait_cmd->parsed()) return cmd_portrait(portrait_f, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const json::exception& e) {
        err << "error: bad JSON: " << e.what() << '\n';
        return kParseError;
    } catch (const UnknownCase& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const NotInNormalForm& e) {
        err << "error: " << e.what() << '\n';
        return kNotInNormalForm;
    } catch (const NotDivisible& e) {
        err << "error: " << e.what() << '\n';
        return kNotInNormalForm;
    } catch (const NotHyperbolicFakeSaddle& e) {
        err << "error: " << e.what() << '\n';
        return kNotHyperbolic;
    } catch (const SectionInvalid& e) {
        err << "error: " << e.what() << '\n';
        return kBadSections;
    } catch (const BadWindow& e) {
        err << "error: " << e.what() << '\n';
        return kBadSections;
    } catch (const TransitDoesNotExist& e) {
        err << "error: " << e.what() << '\n';
        return kNoOrbit;
    } catch (const NoReturn& e) {
        err << "error: " << e.what() << '\n';
        return kNoOrbit;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kParseError;
}

}  // namespace fsl::cli
