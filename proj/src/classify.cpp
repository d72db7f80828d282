#include "sdisc/classify.hpp"

#include <cmath>
#include <numbers>

namespace sdisc {

namespace {

struct Entry {
    std::string_view tag;
    std::string_view label;
};

// Indexed by (d1_sign + 1) * 3 + (d2_sign + 1).
constexpr std::array<Entry, 9> kTable{{
    {"pair-real-left", "one real root and a complex pair, real root left of the pair's real part"},
    {"pair-real-centered", "one real root and a complex pair, real root equal to the pair's real part"},
    {"pair-real-right", "one real root and a complex pair, real root right of the pair's real part"},
    {"double-simple-left", "double real root with the simple root to its left"},
    {"triple", "triple real root"},
    {"double-simple-right", "double real root with the simple root to its right"},
    {"real3-middle-high", "three distinct real roots, middle root above the average of the outer pair"},
    {"real3-progression", "three distinct real roots in arithmetic progression"},
    {"real3-middle-low", "three distinct real roots, middle root below the average of the outer pair"},
}};

const Entry &entry(int d1_sign, int d2_sign)
{
    if (d1_sign < -1 || d1_sign > 1 || d2_sign < -1 || d2_sign > 1)
        throw AlgebraError(Errc::out_of_range, "signs must be -1, 0 or 1");
    return kTable[static_cast<std::size_t>((d1_sign + 1) * 3 + (d2_sign + 1))];
}

void require_cubic(const MonicPoly &f)
{
    if (f.degree() != 3)
        throw AlgebraError(Errc::wrong_degree, "expected a cubic, got degree " + std::to_string(f.degree()));
    if (!f.is_numeric())
        throw AlgebraError(Errc::bad_input, "cubic classification needs numeric coefficients");
}

} // namespace

std::string_view cubic_label(int d1_sign, int d2_sign)
{
    return entry(d1_sign, d2_sign).label;
}

std::string_view cubic_tag(int d1_sign, int d2_sign)
{
    return entry(d1_sign, d2_sign).tag;
}

CubicClass classify_cubic(const MonicPoly &f)
{
    require_cubic(f);
    CubicClass c;
    c.d1 = d1(f).constant_value();
    c.d2 = d2_via_H(f).constant_value();
    c.d1_sign = c.d1.sign();
    c.d2_sign = c.d2.sign();
    c.label = cubic_label(c.d1_sign, c.d2_sign);
    return c;
}

LagrangeRoots lagrange_roots(const MonicPoly &f, double tol)
{
    require_cubic(f);
    const auto a = f.numeric_coeffs();
    const double D1 = d1(f).constant_value().to_double();
    const double D2 = d2_via_H(f).constant_value().to_double();
    const double delta = (a[2] * a[2] - Rational(3) * a[1]).to_double();
    const double a2 = a[2].to_double();

    LagrangeRoots out;
    out.omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Complex s = std::sqrt(Complex(-3.0 * D1, 0.0));
    const Complex plus = (D2 + 3.0 * s) / 2.0;
    const Complex minus = (D2 - 3.0 * s) / 2.0;
    const Complex rad = std::abs(plus) >= std::abs(minus) ? plus : minus;

    out.c1 = rad == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : std::pow(rad, 1.0 / 3.0);
    if (std::abs(out.c1) == 0.0)
        out.c2 = std::pow(Complex(delta, 0.0), 1.0 / 3.0);
    else
        out.c2 = delta / out.c1;

    const Complex w2 = out.omega * out.omega;
    Complex wk(1.0, 0.0);
    Complex w2k(1.0, 0.0);
    auto low = to_double_coeffs(f);
    for (std::size_t k = 0; k < 3; ++k) {
        out.roots[k] = (-a2 + wk * out.c1 + w2k * out.c2) / 3.0;
        out.residuals[k] = std::abs(eval_monic(low, out.roots[k]));
        wk *= out.omega;
        w2k *= w2;
    }
    for (std::size_t k = 0; k < 3; ++k)
        if (!(out.residuals[k] <= tol * residual_scale(low, out.roots[k])))
            throw AlgebraError(Errc::residual_too_large,
                               "Lagrange root " + std::to_string(k) + " has residual " +
                                   std::to_string(out.residuals[k]));
    return out;
}

} // namespace sdisc
