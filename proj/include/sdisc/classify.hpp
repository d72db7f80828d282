#ifndef SDISC_CLASSIFY_HPP
#define SDISC_CLASSIFY_HPP

/* Root configurations of a real cubic x^3 + a2 x^2 + a1 x + a0, read off
 * the exact signs of D1 and D2.
 *
 * D1 > 0: three distinct real roots r1 < r2 < r3, and
 *         D2 = -(2r2 - r1 - r3)(...)(...) has the sign of (r1 + r3)/2 - r2.
 * D1 = 0: double root r, simple root s, D2 = 2 (s - r)^3.
 * D1 < 0: real root r, pair u +- iv, D2 = 2 (r - u)((u - r)^2 + 9 v^2).
 */

#include "sdisc/disc.hpp"
#include "sdisc/roots.hpp"

#include <array>
#include <string_view>

namespace sdisc {

struct CubicClass {
    int d1_sign = 0;
    int d2_sign = 0;
    std::string_view label;
    Rational d1;
    Rational d2;
};

/// Descriptive name of the configuration with the given signs.
std::string_view cubic_label(int d1_sign, int d2_sign);

/// Short identifier such as "real3-middle-low", stable for golden files.
std::string_view cubic_tag(int d1_sign, int d2_sign);

/// Throws wrong_degree unless f is a numeric cubic.
CubicClass classify_cubic(const MonicPoly &f);

struct LagrangeRoots {
    Complex c1;
    Complex c2;
    Complex omega;
    std::array<Complex, 3> roots;
    std::array<double, 3> residuals;
};

/* Cardano roots (-a2 + w^k c1 + w^2k c2) / 3 with
 *     c1^3 = (D2 +- 3 sqrt(-3 D1)) / 2,   c1 c2 = a2^2 - 3 a1.
 * Uses the sign giving the radicand of larger modulus.  Throws
 * residual_too_large if some |f(root)| exceeds tol residual_scale(root). */
LagrangeRoots lagrange_roots(const MonicPoly &f, double tol = 1e-9);

} // namespace sdisc

#endif
