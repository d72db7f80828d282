#include "sdisc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <thread>

namespace sdisc {

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long SplitMix64::uniform(long lo, long hi)
{
    if (hi < lo)
        throw AlgebraError(Errc::bad_input, "empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do
        v = next();
    while (v >= limit);
    return lo + static_cast<long>(v % span);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
{
    SplitMix64 g(seed);
    std::uint64_t h = g.next() ^ a;
    SplitMix64 g2(h);
    h = g2.next() ^ b;
    return SplitMix64(h).next();
}

Rational random_rational(SplitMix64 &rng, long bound)
{
    if (bound < 1)
        throw AlgebraError(Errc::bad_input, "bound must be >= 1");
    long p = rng.uniform(-bound, bound);
    long q = rng.uniform(1, bound);
    return Rational(Integer(p), Integer(q));
}

std::vector<Rational> random_rational_roots(int n, std::uint64_t seed, long bound)
{
    if (n < 1)
        throw AlgebraError(Errc::bad_input, "n must be >= 1");
    SplitMix64 rng(seed);
    std::vector<Rational> out;
    for (int i = 0; i < n; ++i)
        out.push_back(random_rational(rng, bound));
    return out;
}

bool has_symmetric_triple(std::span<const Rational> r)
{
    for (std::size_t k = 0; k < r.size(); ++k)
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = i + 1; j < r.size(); ++j)
                if (i != k && j != k && Rational(2) * r[k] == r[i] + r[j])
                    return true;
    return false;
}

bool has_repeated_root(std::span<const Rational> r)
{
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
            if (r[i] == r[j])
                return true;
    return false;
}

namespace {

int fsign(double v, double tol)
{
    if (std::abs(v) <= tol)
        return 0;
    return v > 0 ? 1 : -1;
}

} // namespace

RootStructure cubic_root_structure(const MonicPoly &f, double tol)
{
    if (f.degree() != 3)
        throw AlgebraError(Errc::wrong_degree, "root structure oracle handles cubics only");
    auto low = to_double_coeffs(f);
    auto dk = durand_kerner(std::span<const double>(low));
    RootStructure s;
    s.roots = refine_clusters(low, dk.roots);

    double scale = 1.0;
    for (const auto &z : s.roots)
        scale = std::max(scale, 1.0 + std::abs(z));
    const double eps = tol * scale;

    std::vector<std::pair<Complex, int>> groups;
    for (const auto &z : s.roots) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto &g) { return g.first == z; });
        if (it == groups.end())
            groups.push_back({z, 1});
        else
            ++it->second;
    }
    s.distinct = static_cast<int>(groups.size());
    for (const auto &z : s.roots)
        if (std::abs(z.imag()) <= eps)
            ++s.real_count;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (i != k && j != k && std::abs(2.0 * s.roots[k] - s.roots[i] - s.roots[j]) <= eps)
                    s.arithmetic_triple = true;

    if (s.distinct == 1) {
        s.d1_sign = 0;
        s.d2_sign = 0;
    } else if (s.distinct == 2) {
        const auto &dbl = groups[0].second == 2 ? groups[0] : groups[1];
        const auto &sgl = groups[0].second == 2 ? groups[1] : groups[0];
        s.d1_sign = 0;
        s.d2_sign = fsign(sgl.first.real() - dbl.first.real(), eps);
    } else if (s.real_count == 3) {
        std::vector<double> r;
        for (const auto &z : s.roots)
            r.push_back(z.real());
        std::sort(r.begin(), r.end());
        s.d1_sign = 1;
        s.d2_sign = -fsign(2.0 * r[1] - r[0] - r[2], eps);
    } else {
        // One real root and a conjugate pair.
        auto it = std::min_element(s.roots.begin(), s.roots.end(),
                                   [](const Complex &a, const Complex &b) { return std::abs(a.imag()) < std::abs(b.imag()); });
        const double real_root = it->real();
        double pair_re = 0.0;
        for (auto jt = s.roots.begin(); jt != s.roots.end(); ++jt)
            if (jt != it)
                pair_re += jt->real() / 2.0;
        s.d1_sign = -1;
        s.d2_sign = fsign(2.0 * (real_root - pair_re), eps);
    }
    return s;
}

// ------------------------------------------------------------- reports

bool TrialReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
}

nlohmann::ordered_json TrialReport::to_json(bool with_timings) const
{
    nlohmann::ordered_json j;
    j["n"] = n;
    j["trial"] = trial;
    j["seed"] = std::to_string(seed);
    j["kind"] = kind;
    auto rs = nlohmann::ordered_json::array();
    for (const auto &r : roots)
        rs.push_back(r.str());
    j["roots"] = rs;
    auto cs = nlohmann::ordered_json::object();
    for (const auto &c : checks) {
        if (c.detail.empty())
            cs[c.name] = c.pass;
        else
            cs[c.name] = {{"pass", c.pass}, {"detail", c.detail}};
    }
    j["checks"] = cs;
    auto vs = nlohmann::ordered_json::object();
    for (const auto &[k, v] : values)
        vs[k] = v;
    j["values"] = vs;
    if (with_timings)
        j["seconds"] = seconds;
    j["pass"] = pass();
    return j;
}

const std::vector<std::string> &default_checks()
{
    static const std::vector<std::string> v{"oracle-equivalence", "d1-roots", "h-factorization", "g-equals-h2",
                                            "e-constant",         "zero-set", "d1d2-zero",       "classify"};
    return v;
}

const std::vector<std::string> &known_checks()
{
    static const std::vector<std::string> v = [] {
        auto all = default_checks();
        all.push_back("d2-mod4");
        return all;
    }();
    return v;
}

Rational reference_e_ratio(int n)
{
    static std::mutex mu;
    static std::map<int, Rational> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    std::vector<Rational> roots;
    for (int k = 0; k < n; ++k)
        roots.push_back(Rational((1L << k) - 1));
    Rational c = e_ratio(from_roots(roots));
    std::lock_guard lock(mu);
    cache.emplace(n, c);
    return c;
}

namespace {

struct Instance {
    std::vector<Rational> roots;
    MonicPoly f;
    Rational d1;
    Rational d2;
    MPoly H;
};

using CheckFn = std::function<CheckResult(const Instance &, SplitMix64 &, TrialReport &)>;

CheckResult ok(const std::string &name, bool pass, std::string detail = {})
{
    return {name, pass, std::move(detail)};
}

CheckResult check_oracle(const Instance &in, SplitMix64 &, TrialReport &)
{
    return ok("oracle-equivalence", in.d2 == d2_from_roots(in.roots));
}

CheckResult check_d1(const Instance &in, SplitMix64 &, TrialReport &)
{
    return ok("d1-roots", in.d1 == d1_from_roots(in.roots));
}

CheckResult check_h_factor(const Instance &in, SplitMix64 &, TrialReport &)
{
    for (std::size_t k = 0; k < in.roots.size(); ++k) {
        Rational at = in.H.evaluate({{Var::x(), in.roots[k]}}).constant_value();
        if (!(at == h_factor_at_root(in.roots, k)))
            return ok("h-factorization", false, "mismatch at root index " + std::to_string(k));
    }
    return ok("h-factorization", true);
}

CheckResult check_g(const Instance &in, SplitMix64 &, TrialReport &)
{
    return ok("g-equals-h2", big_G(in.f) == in.H * in.H);
}

CheckResult check_e(const Instance &in, SplitMix64 &, TrialReport &rep)
{
    if (in.d2.is_zero()) {
        bool zero = big_E(in.f).is_zero();
        return ok("e-constant", zero, zero ? "" : "E nonzero although D2 = 0");
    }
    Rational c = e_ratio(in.f);
    rep.values.emplace_back("E_over_D2sq", c.str());
    Rational ref = reference_e_ratio(in.f.degree());
    return ok("e-constant", c == ref, c == ref ? "" : "reference " + ref.str());
}

CheckResult check_zero_set(const Instance &in, SplitMix64 &, TrialReport &)
{
    const bool planted = has_symmetric_triple(in.roots);
    const bool h_zero = in.d2.is_zero();
    const bool prod_zero = d2_from_roots(in.roots).is_zero();
    const bool e_zero = big_E(in.f).is_zero();
    if (h_zero == planted && prod_zero == planted && e_zero == planted)
        return ok("zero-set", true);
    return ok("zero-set", false,
              std::string("triple=") + (planted ? "yes" : "no") + " H-route=" + (h_zero ? "0" : "nonzero") +
                  " product=" + (prod_zero ? "0" : "nonzero") + " E=" + (e_zero ? "0" : "nonzero"));
}

CheckResult check_d1d2(const Instance &in, SplitMix64 &, TrialReport &)
{
    const bool repeated = has_repeated_root(in.roots);
    const bool test = d1d2_zero_test(in.f);
    const bool expect = in.d1.is_zero() || in.d2.is_zero();
    if (test == expect && in.d1.is_zero() == repeated)
        return ok("d1d2-zero", true);
    return ok("d1d2-zero", false,
              std::string("test=") + (test ? "true" : "false") + " D1=" + in.d1.str() + " D2=" + in.d2.str());
}

std::string classify_one(const MonicPoly &f)
{
    CubicClass c = classify_cubic(f);
    RootStructure s = cubic_root_structure(f);
    std::string problems;
    if (s.d1_sign != c.d1_sign || s.d2_sign != c.d2_sign)
        problems += "signs (" + std::to_string(c.d1_sign) + "," + std::to_string(c.d2_sign) + ") vs roots (" +
                    std::to_string(s.d1_sign) + "," + std::to_string(s.d2_sign) + ");";
    if ((c.d1_sign > 0) != (s.real_count == 3 && s.distinct == 3))
        problems += " real count;";
    if (s.arithmetic_triple != (c.d2_sign == 0))
        problems += " arithmetic triple;";
    LagrangeRoots lr = lagrange_roots(f);
    auto low = to_double_coeffs(f);
    auto dk = durand_kerner(std::span<const double>(low));
    // Repeated roots scatter in the iteration; compare with the refined set.
    auto ref = c.d1_sign == 0 ? refine_clusters(low, dk.roots) : dk.roots;
    double dist = matched_distance(lr.roots, ref);
    if (!(dist <= 1e-7))
        problems += " Lagrange vs iteration distance " + std::to_string(dist) + ";";
    return problems;
}

CheckResult check_classify(const Instance &in, SplitMix64 &rng, TrialReport &rep)
{
    std::vector<Rational> low;
    for (int i = 0; i < 3; ++i)
        low.push_back(random_rational(rng, 10));
    MonicPoly g = MonicPoly::from_low_coeffs(low);
    std::string problems = classify_one(in.f);
    std::string other = classify_one(g);
    CubicClass cg = classify_cubic(g);
    std::string coeffs;
    for (const auto &c : low)
        coeffs += (coeffs.empty() ? "" : ",") + c.str();
    rep.values.emplace_back("random_cubic", coeffs + ",1");
    rep.values.emplace_back("random_cubic_class", std::string(cubic_tag(cg.d1_sign, cg.d2_sign)));
    if (!other.empty())
        problems += " random cubic:" + other;
    return ok("classify", problems.empty(), problems);
}

CheckResult check_mod4(const Instance &in, SplitMix64 &rng, TrialReport &rep)
{
    std::vector<Rational> low;
    for (int i = 0; i < in.f.degree(); ++i)
        low.push_back(Rational(rng.uniform(-10, 10)));
    Rational d2 = d2_via_H(MonicPoly::from_low_coeffs(low)).constant_value();
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), d2.num().gmp().get_mpz_t(), 4);
    rep.values.emplace_back("d2_mod4", r.get_str());
    return ok("d2-mod4", true);
}

const std::map<std::string, CheckFn> &registry()
{
    static const std::map<std::string, CheckFn> r{
        {"oracle-equivalence", check_oracle}, {"d1-roots", check_d1},     {"h-factorization", check_h_factor},
        {"g-equals-h2", check_g},             {"e-constant", check_e},    {"zero-set", check_zero_set},
        {"d1d2-zero", check_d1d2},            {"classify", check_classify}, {"d2-mod4", check_mod4},
    };
    return r;
}

TrialReport run_trial(int n, int trial, std::uint64_t suite_seed, long bound, const std::vector<std::string> &checks)
{
    TrialReport rep;
    rep.n = n;
    rep.trial = trial;
    rep.seed = mix_seed(suite_seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
    auto start = std::chrono::steady_clock::now();

    rep.roots = random_rational_roots(n, rep.seed, bound);
    rep.kind = "generic";
    if (trial % 5 == 0) {
        if ((trial / 5) % 2 == 0) {
            rep.kind = "planted-triple";
            rep.roots[2] = (rep.roots[0] + rep.roots[1]) * Rational(Integer(1), Integer(2));
        } else {
            rep.kind = "planted-double";
            rep.roots[1] = rep.roots[0];
        }
    }
    SplitMix64 rng(rep.seed ^ 0xA5A5A5A5A5A5A5A5ULL);

    try {
        Instance in{rep.roots, from_roots(rep.roots), {}, {}, {}};
        in.H = build_H(in.f);
        in.d1 = d1(in.f).constant_value();
        in.d2 = sylvester_resultant(in.f.in(Var::x()), in.H, Var::x()).constant_value();
        rep.values.emplace_back("D1", in.d1.str());
        rep.values.emplace_back("D2", in.d2.str());
        for (const auto &name : checks) {
            if (name == "classify" && n != 3)
                continue;
            try {
                rep.checks.push_back(registry().at(name)(in, rng, rep));
            } catch (const AlgebraError &e) {
                rep.checks.push_back({name, false, std::string(errc_name(e.code())) + ": " + e.what()});
            }
        }
    } catch (const AlgebraError &e) {
        rep.checks.push_back({"setup", false, std::string(errc_name(e.code())) + ": " + e.what()});
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace

std::vector<TrialReport> run_suite(const SuiteOptions &opt)
{
    const auto &checks = opt.checks.empty() ? default_checks() : opt.checks;
    for (const auto &c : checks)
        if (!registry().contains(c))
            throw AlgebraError(Errc::bad_input, "unknown check '" + c + "'");
    for (int n : opt.n_list)
        if (n < 3)
            throw AlgebraError(Errc::degree_too_small, "suite needs n >= 3");
    if (opt.trials < 0)
        throw AlgebraError(Errc::bad_input, "trials must be >= 0");

    std::vector<std::pair<int, int>> jobs;
    for (int n : opt.n_list)
        for (int t = 0; t < opt.trials; ++t)
            jobs.emplace_back(n, t);
    std::vector<TrialReport> out(jobs.size());

    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();)
            out[i] = run_trial(jobs[i].first, jobs[i].second, opt.seed, opt.bound, checks);
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    std::stable_sort(out.begin(), out.end(), [](const TrialReport &a, const TrialReport &b) {
        return std::pair(a.n, a.trial) < std::pair(b.n, b.trial);
    });
    return out;
}

} // namespace sdisc
