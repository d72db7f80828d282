#include "sdisc/disc.hpp"

#include <map>
#include <mutex>

namespace sdisc {

namespace {

void require_degree(const MonicPoly &f, int min_n, const char *what)
{
    if (f.degree() < min_n)
        throw AlgebraError(Errc::degree_too_small,
                           std::string(what) + " needs degree >= " + std::to_string(min_n) + ", got " +
                               std::to_string(f.degree()));
}

Rational binomial(int n, int k)
{
    if (k < 0 || k > n)
        return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(Integer(std::move(r)));
}

const MPoly &x_poly()
{
    static const MPoly x(Var::x());
    return x;
}

const MPoly &y_poly()
{
    static const MPoly y(Var::y());
    return y;
}

} // namespace

// ----------------------------------------------------------- MonicPoly

MonicPoly MonicPoly::symbolic(int n)
{
    if (n < 1 || n > kMaxCoeffSymbols)
        throw AlgebraError(Errc::out_of_range, "symbolic degree must be in 1.." + std::to_string(kMaxCoeffSymbols));
    MonicPoly f;
    for (int i = 0; i < n; ++i)
        f.low_.emplace_back(Var::a(i));
    return f;
}

MonicPoly MonicPoly::from_low_coeffs(std::vector<Rational> low)
{
    MonicPoly f;
    f.low_.reserve(low.size());
    for (auto &c : low)
        f.low_.emplace_back(c);
    return f;
}

MonicPoly MonicPoly::from_low_coeffs(std::vector<MPoly> low)
{
    MonicPoly f;
    f.low_ = std::move(low);
    return f;
}

MonicPoly::Normalized MonicPoly::normalize(std::span<const Rational> ascending)
{
    if (ascending.empty())
        throw AlgebraError(Errc::bad_input, "empty coefficient list");
    const Rational &lead = ascending.back();
    if (lead.is_zero())
        throw AlgebraError(Errc::bad_input, "leading coefficient is zero");
    std::vector<Rational> low(ascending.begin(), ascending.end() - 1);
    for (auto &c : low)
        c /= lead;
    return {from_low_coeffs(std::move(low)), !lead.is_one(), lead};
}

MPoly MonicPoly::coeff(int i) const
{
    if (i == degree())
        return MPoly(1);
    if (i < 0 || i > degree())
        return MPoly();
    return low_[i];
}

bool MonicPoly::is_numeric() const
{
    for (const auto &c : low_)
        if (!c.is_constant())
            return false;
    return true;
}

std::vector<Rational> MonicPoly::numeric_coeffs() const
{
    std::vector<Rational> out;
    out.reserve(low_.size());
    for (const auto &c : low_) {
        if (!c.is_constant())
            throw AlgebraError(Errc::bad_input, "polynomial has symbolic coefficients");
        out.push_back(c.constant_value());
    }
    return out;
}

MPoly MonicPoly::in(Var v) const
{
    return at(MPoly(v));
}

MPoly MonicPoly::at(const MPoly &arg) const
{
    MPoly acc(1);
    for (int i = degree() - 1; i >= 0; --i)
        acc = acc * arg + low_[i];
    return acc;
}

// ------------------------------------------------------ root products

std::vector<Rational> elementary_symmetric(std::span<const Rational> values)
{
    // e[k] after processing a prefix; standard in-place update from the top.
    std::vector<Rational> e(values.size() + 1, Rational(0));
    e[0] = Rational(1);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k)
            e[k] += e[k - 1] * values[i];
    return e;
}

MonicPoly from_roots(std::span<const Rational> roots)
{
    const auto n = roots.size();
    auto e = elementary_symmetric(roots);
    std::vector<Rational> low(n);
    for (std::size_t i = 1; i <= n; ++i)
        low[n - i] = i % 2 ? -e[i] : e[i];
    return MonicPoly::from_low_coeffs(std::move(low));
}

Rational d2_from_roots(std::span<const Rational> roots)
{
    Rational prod(1);
    const auto n = roots.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j)
                    continue;
                prod *= Rational(2) * roots[k] - roots[i] - roots[j];
            }
    return prod;
}

Rational d1_from_roots(std::span<const Rational> roots)
{
    Rational prod(1);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            Rational d = roots[i] - roots[j];
            prod *= d * d;
        }
    return prod;
}

Rational h_factor_at_root(std::span<const Rational> roots, std::size_t k)
{
    Rational prod(1);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (i == k || j == k)
                continue;
            prod *= Rational(2) * roots[k] - roots[i] - roots[j];
        }
    return prod;
}

// --------------------------------------------------- constructions

std::vector<MPoly> derivative_ladder(const MonicPoly &f)
{
    // Coefficient of x^j in f^(k)/k! is C(j, k) a_j.
    const int n = f.degree();
    std::vector<MPoly> ladder;
    ladder.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        MPoly d;
        for (int j = k; j <= n; ++j) {
            MPoly c = f.coeff(j);
            if (c.is_zero())
                continue;
            d += c * binomial(j, k) * MPoly(Monomial::var(Var::x(), static_cast<unsigned>(j - k)), Rational(1));
        }
        ladder.push_back(std::move(d));
    }
    return ladder;
}

MPoly build_f1(const MonicPoly &f)
{
    require_degree(f, 1, "f1");
    return exact_div(f.in(Var::y()) - f.in(Var::x()), y_poly() - x_poly());
}

MPoly build_f2(const MonicPoly &f)
{
    require_degree(f, 1, "f2");
    const Rational half(Integer(1), Integer(2));
    MPoly mid = (x_poly() + y_poly()) * half;
    return exact_div(f.at(mid) - f.in(Var::x()), (y_poly() - x_poly()) * half);
}

MPoly build_f3(const MonicPoly &f)
{
    require_degree(f, 2, "f3");
    const Rational half(Integer(1), Integer(2));
    MPoly mid = (x_poly() + y_poly()) * half;
    MPoly num = f.in(Var::y()) - f.at(mid) * Rational(2) + f.in(Var::x());
    MPoly diff = y_poly() - x_poly();
    return exact_div(num, diff * diff * half);
}

namespace {

MPoly shear(const MPoly &p)
{
    return p.substitute({{Var::x(), x_poly() - y_poly()}, {Var::y(), x_poly() + y_poly()}});
}

MPoly z_series(const std::vector<MPoly> &ladder, int first, int n)
{
    MPoly out;
    for (int k = 0; first + 2 * k <= n; ++k)
        out += ladder[first + 2 * k] * MPoly(Monomial::var(Var::z(), static_cast<unsigned>(k)), Rational(1));
    return out;
}

} // namespace

MPoly build_g1(const MonicPoly &f)
{
    return shear(build_f1(f));
}

MPoly build_g3(const MonicPoly &f)
{
    return shear(build_f3(f));
}

MPoly build_g1_star(const MonicPoly &f)
{
    require_degree(f, 3, "g1*");
    return z_series(derivative_ladder(f), 1, f.degree());
}

MPoly build_g3_star(const MonicPoly &f)
{
    require_degree(f, 3, "g3*");
    return z_series(derivative_ladder(f), 2, f.degree());
}

RingMatrix<MPoly> build_M(const MonicPoly &f, std::optional<int> order)
{
    require_degree(f, 3, "M");
    const int n = f.degree();
    const int size = order.value_or(n - 2);
    if (size < 0)
        throw AlgebraError(Errc::out_of_range, "negative matrix order");
    auto ladder = derivative_ladder(f);
    RingMatrix<MPoly> m(size, size);
    for (int r = 0; r < size; ++r) {
        const int pair = r / 2;
        for (int c = 1; c <= size; ++c) {
            const int order_k = r % 2 == 0 ? 2 * (c - pair) : 2 * (c - pair) - 1;
            if (order_k >= 1 && order_k <= n)
                m(r, c - 1) = ladder[order_k];
        }
    }
    return m;
}

MPoly build_H(const MonicPoly &f)
{
    require_degree(f, 3, "H");
    const auto k = static_cast<std::size_t>(f.degree() - 2);
    return leading_principal_minor(build_M(f), k);
}

MPoly d1(const MonicPoly &f)
{
    require_degree(f, 1, "D1");
    const int n = f.degree();
    MPoly fx = f.in(Var::x());
    MPoly r = sylvester_resultant(fx, fx.derivative(Var::x()), Var::x());
    return (n * (n - 1) / 2) % 2 ? -r : r;
}

MPoly d2_via_H(const MonicPoly &f)
{
    require_degree(f, 3, "D2");
    return sylvester_resultant(f.in(Var::x()), build_H(f), Var::x());
}

MPoly big_F(const MonicPoly &f)
{
    require_degree(f, 3, "F");
    return sylvester_resultant(build_f1(f), build_f3(f), Var::y());
}

MPoly big_E_from_F(const MonicPoly &f, const MPoly &F, ResultantRoute route)
{
    require_degree(f, 3, "E");
    if (route == ResultantRoute::monic_multiplication)
        return monic_resultant(f.in(Var::x()), F, Var::x());
    return sylvester_resultant(f.in(Var::x()), F, Var::x());
}

MPoly big_E(const MonicPoly &f, ResultantRoute route)
{
    return big_E_from_F(f, big_F(f), route);
}

MPoly res_g_star(const MonicPoly &f)
{
    require_degree(f, 3, "G");
    return sylvester_resultant(build_g1_star(f), build_g3_star(f), Var::z());
}

MPoly big_G(const MonicPoly &f)
{
    MPoly r = res_g_star(f);
    return r * r;
}

MPoly big_G_direct(const MonicPoly &f)
{
    require_degree(f, 3, "G");
    return sylvester_resultant(build_g1(f), build_g3(f), Var::y());
}

bool d1d2_zero_test(const MonicPoly &f)
{
    require_degree(f, 3, "d1d2 zero test");
    if (!f.is_numeric())
        throw AlgebraError(Errc::bad_input, "d1d2 zero test needs numeric coefficients");
    MPoly inner = sylvester_resultant(build_f1(f), build_f2(f), Var::y());
    return sylvester_resultant(f.in(Var::x()), inner, Var::x()).is_zero();
}

std::optional<Rational> e_constant(int n, int symbolic_cap)
{
    static std::mutex mu;
    static std::map<int, Rational> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    if (n < 3)
        throw AlgebraError(Errc::degree_too_small, "E constant needs n >= 3");
    if (n > symbolic_cap)
        return std::nullopt;
    MonicPoly f = MonicPoly::symbolic(n);
    MPoly d2 = d2_via_H(f);
    MPoly q = exact_div(big_E(f), d2 * d2);
    if (!q.is_constant() || q.is_zero())
        throw AlgebraError(Errc::not_divisible, "E / D2^2 is not a nonzero constant for n = " + std::to_string(n));
    Rational c = q.constant_value();
    std::lock_guard lock(mu);
    cache.emplace(n, c);
    return c;
}

Rational e_ratio(const MonicPoly &f)
{
    if (!f.is_numeric())
        throw AlgebraError(Errc::bad_input, "e_ratio needs numeric coefficients");
    Rational d2 = d2_via_H(f).constant_value();
    if (d2.is_zero())
        throw AlgebraError(Errc::not_divisible, "E / D2^2 undefined when D2 = 0");
    return big_E(f).constant_value() / (d2 * d2);
}

} // namespace sdisc
