#include "cli.hpp"

#include "sdisc/classify.hpp"
#include "sdisc/disc.hpp"
#include "sdisc/roots.hpp"
#include "sdisc/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace sdisc::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string coeffs;
    int n = 0;
    std::uint64_t seed = 1;
    int trials = 10;
    std::string format = "json";
    int cap = 5;
    std::optional<double> tol;
    bool ratio = false;
    bool timings = false;
    unsigned threads = 0;
    std::vector<int> n_list;
    std::vector<std::string> checks;
};

std::vector<Rational> parse_coeffs(const std::string &text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw AlgebraError(Errc::bad_input, "empty coefficient in list");
        out.push_back(Rational::parse(std::string_view(item).substr(b, e - b + 1)));
    }
    if (out.empty())
        throw AlgebraError(Errc::bad_input, "empty coefficient list");
    return out;
}

struct Input {
    MonicPoly f;
    Json header;
};

Input load(const Options &o)
{
    auto asc = parse_coeffs(o.coeffs);
    auto norm = MonicPoly::normalize(asc);
    Input in{norm.poly, Json::object()};
    in.header["n"] = norm.poly.degree();
    auto mc = Json::array();
    for (const auto &c : norm.poly.numeric_coeffs())
        mc.push_back(c.str());
    mc.push_back("1");
    in.header["monic_coeffs"] = mc;
    in.header["notices"] = Json::array();
    if (norm.normalized)
        in.header["notices"].push_back("divided by leading coefficient " + norm.leading.str());
    return in;
}

Json complex_list(std::span<const Complex> zs)
{
    auto a = Json::array();
    for (const auto &z : zs)
        a.push_back(Json::array({z.real(), z.imag()}));
    return a;
}

std::string text_value(const Json &v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto &x : v)
            s += (s.empty() ? "" : ", ") + text_value(x);
        return "[" + s + "]";
    }
    if (v.is_object()) {
        std::string s;
        for (const auto &[k, x] : v.items())
            s += (s.empty() ? "" : ", ") + k + "=" + text_value(x);
        return "{" + s + "}";
    }
    return v.dump();
}

void emit(const Json &report, const Options &o, std::ostream &out)
{
    if (o.format == "json") {
        out << report.dump(2) << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto &[k, v] : report.items())
        width = std::max(width, k.size());
    for (const auto &[k, v] : report.items())
        out << std::left << std::setw(static_cast<int>(width) + 2) << k << text_value(v) << '\n';
}

// Moves "notices" to the end so every report shares the key order.
Json finish(Json report)
{
    Json notices = report["notices"];
    report.erase("notices");
    report["notices"] = notices;
    return report;
}

int cmd_compute(const Options &o, std::ostream &out)
{
    Input in = load(o);
    Json r = in.header;
    r["D1"] = d1(in.f).constant_value().str();
    r["D2"] = d2_via_H(in.f).constant_value().str();
    r["F_degree"] = big_F(in.f).degree(Var::x());
    if (o.ratio) {
        try {
            r["E_over_D2sq"] = e_ratio(in.f).str();
        } catch (const AlgebraError &) {
            r["E_over_D2sq"] = nullptr;
            r["notices"].push_back("E / D2^2 undefined because D2 = 0");
        }
    }
    emit(finish(r), o, out);
    return ok;
}

int cmd_symbolic(const Options &o, std::ostream &out)
{
    if (o.n < 3)
        throw AlgebraError(Errc::degree_too_small, "symbolic D2 needs n >= 3");
    if (o.n > o.cap)
        throw AlgebraError(Errc::cap_exceeded,
                           "n = " + std::to_string(o.n) + " exceeds the symbolic cap " + std::to_string(o.cap) +
                               " (raise with --cap)");
    MPoly d = d2_via_H(MonicPoly::symbolic(o.n));
    Json r;
    r["n"] = o.n;
    r["terms"] = d.term_count();
    r["degree"] = d.total_degree();
    r["D2"] = d.str();
    emit(r, o, out);
    return ok;
}

int cmd_classify(const Options &o, std::ostream &out)
{
    Input in = load(o);
    CubicClass c = classify_cubic(in.f);
    LagrangeRoots lr = lagrange_roots(in.f, o.tol.value_or(1e-9));
    Json r = in.header;
    r["D1"] = c.d1.str();
    r["D2"] = c.d2.str();
    r["classification"] = {{"d1_sign", c.d1_sign},
                           {"d2_sign", c.d2_sign},
                           {"tag", std::string(cubic_tag(c.d1_sign, c.d2_sign))},
                           {"label", std::string(c.label)}};
    r["roots"] = complex_list(lr.roots);
    r["residuals"] = Json(std::vector<double>(lr.residuals.begin(), lr.residuals.end()));
    emit(finish(r), o, out);
    return ok;
}

int cmd_roots(const Options &o, std::ostream &out)
{
    Input in = load(o);
    DurandKernerOptions dko;
    if (o.tol)
        dko.tol = *o.tol;
    auto low = to_double_coeffs(in.f);
    auto res = durand_kerner(std::span<const double>(low), dko);
    Json r = in.header;
    r["roots"] = complex_list(res.roots);
    auto resid = Json::array();
    for (const auto &z : res.roots)
        resid.push_back(std::abs(eval_monic(low, z)));
    r["residuals"] = resid;
    r["iterations"] = res.iterations;
    emit(finish(r), o, out);
    return ok;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err)
{
    SuiteOptions so;
    if (!o.n_list.empty())
        so.n_list = o.n_list;
    so.trials = o.trials;
    so.seed = o.seed;
    so.checks = o.checks;
    so.threads = o.threads;
    auto reports = run_suite(so);
    std::size_t failed = 0;
    for (const auto &rep : reports) {
        if (!rep.pass())
            ++failed;
        if (o.format == "json") {
            out << rep.to_json(o.timings).dump() << '\n';
        } else {
            out << "n=" << rep.n << " trial=" << rep.trial << " kind=" << rep.kind << ' '
                << (rep.pass() ? "PASS" : "FAIL");
            for (const auto &c : rep.checks)
                if (!c.pass)
                    out << ' ' << c.name << " (" << c.detail << ')';
            out << '\n';
        }
    }
    err << reports.size() - failed << '/' << reports.size() << " trials passed\n";
    return failed ? check_failed : ok;
}

int exit_for(Errc code)
{
    switch (code) {
    case Errc::no_convergence:
    case Errc::residual_too_large:
    case Errc::not_divisible:
        return check_failed;
    default:
        return bad_input;
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact first and second discriminants of univariate polynomials", "sdisc"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App *c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto add_coeffs = [&](CLI::App *c) {
        c->add_option("--coeffs", o.coeffs, "Ascending coefficients a0,...,an (rationals p or p/q)")->required();
    };

    auto *compute = app.add_subcommand("compute", "D1, D2 and deg(F, x) of a numeric polynomial");
    add_coeffs(compute);
    add_format(compute);
    compute->add_flag("--ratio", o.ratio, "Also report E / D2^2");

    auto *symbolic = app.add_subcommand("symbolic", "Generic D2 in the symbols a0..a(n-1)");
    symbolic->add_option("--n", o.n, "Degree")->required();
    symbolic->add_option("--cap", o.cap, "Largest degree allowed")->capture_default_str();
    add_format(symbolic);

    auto *classify = app.add_subcommand("classify", "Root configuration of a cubic");
    add_coeffs(classify);
    add_format(classify);
    classify->add_option("--tol", o.tol, "Residual tolerance for the radical roots");

    auto *roots = app.add_subcommand("roots", "Numeric roots by simultaneous iteration");
    add_coeffs(roots);
    add_format(roots);
    roots->add_option("--tol", o.tol, "Relative residual tolerance");

    auto *verify = app.add_subcommand("verify", "Randomized identity checks, one JSON line per trial");
    verify->add_option("--n", o.n_list, "Degrees to test")->delimiter(',')->check(CLI::Range(3, 11));
    verify->add_option("--trials", o.trials, "Trials per degree")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", o.seed, "Suite seed");
    verify->add_option("--checks", o.checks, "Subset of checks")->delimiter(',');
    verify->add_flag("--timings", o.timings, "Include per-trial wall time");
    verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    add_format(verify);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (*compute)
            return cmd_compute(o, out);
        if (*symbolic)
            return cmd_symbolic(o, out);
        if (*classify)
            return cmd_classify(o, out);
        if (*roots)
            return cmd_roots(o, out);
        return cmd_verify(o, out, err);
    } catch (const AlgebraError &e) {
        err << errc_name(e.code()) << ": " << e.what() << '\n';
        return exit_for(e.code());
    }
}

} // namespace sdisc::cli
