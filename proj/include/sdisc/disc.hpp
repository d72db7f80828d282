#ifndef SDISC_DISC_HPP
#define SDISC_DISC_HPP

/* First and second discriminants of a monic univariate polynomial
 *
 *     f = x^n + a(n-1) x^(n-1) + ... + a1 x + a0
 *
 * and the auxiliary polynomials used to build the second one.  Every
 * construction works both symbolically (coefficients are the symbols
 * a0..a(n-1)) and numerically (coefficients are rational constants);
 * the only difference is what the coefficient MPolys contain.
 *
 * With roots r1..rn:
 *     D1 = prod_{i<j} (ri - rj)^2
 *     D2 = prod_{i<j, k != i,j} (2 rk - ri - rj)
 */

#include "sdisc/linalg.hpp"
#include "sdisc/mpoly.hpp"
#include "sdisc/ring.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sdisc {

class MonicPoly {
public:
    /// f with generic coefficient symbols a0..a(n-1).
    static MonicPoly symbolic(int n);
    /// f = x^n + sum low[i] x^i, with low = a0..a(n-1).
    static MonicPoly from_low_coeffs(std::vector<Rational> low);
    static MonicPoly from_low_coeffs(std::vector<MPoly> low);

    /* Ascending coefficient list including the leading one.  Trailing
     * zeros are rejected (the last entry is the leading coefficient and
     * must be nonzero); a non-unit leading coefficient is divided out.
     * `normalized` reports whether that happened. */
    struct Normalized;
    static Normalized normalize(std::span<const Rational> ascending);

    int degree() const { return static_cast<int>(low_.size()); }
    /// a_i; i == n gives 1.
    MPoly coeff(int i) const;
    const std::vector<MPoly> &low_coeffs() const { return low_; }
    bool is_numeric() const;
    /// Rational a0..a(n-1); throws bad_input in symbolic mode.
    std::vector<Rational> numeric_coeffs() const;

    /// f(v) as a polynomial in the given variable.
    MPoly in(Var v) const;
    /// f(arg) for an arbitrary polynomial argument (Horner).
    MPoly at(const MPoly &arg) const;

    std::string str() const { return in(Var::x()).str(); }

private:
    std::vector<MPoly> low_;
};

struct MonicPoly::Normalized {
    MonicPoly poly;
    bool normalized = false;
    Rational leading;
};

/// Elementary symmetric polynomials e0..en of the given values.
std::vector<Rational> elementary_symmetric(std::span<const Rational> values);

/// Monic polynomial with the given roots: a(n-i) = (-1)^i e_i.
MonicPoly from_roots(std::span<const Rational> roots);

/// [f, f'/1!, f''/2!, ..., f^(n)/n!] in x, indexed by derivative order.
std::vector<MPoly> derivative_ladder(const MonicPoly &f);

/// (f(y) - f(x)) / (y - x).
MPoly build_f1(const MonicPoly &f);
/// (f((x+y)/2) - f(x)) / ((y-x)/2).
MPoly build_f2(const MonicPoly &f);
/// (f(y) - 2 f((x+y)/2) + f(x)) / ((y-x)^2/2).  Needs n >= 2.
MPoly build_f3(const MonicPoly &f);

/// f1(x - y, x + y) and f3(x - y, x + y).
MPoly build_g1(const MonicPoly &f);
MPoly build_g3(const MonicPoly &f);

/* g1 and g3 are even in y; replacing y^2 by z gives
 *     g1* = sum_k f^(2k+1)/(2k+1)! z^k,   g3* = sum_k f^(2k+2)/(2k+2)! z^k. */
MPoly build_g1_star(const MonicPoly &f);
MPoly build_g3_star(const MonicPoly &f);

/* Interleaved derivative matrix, order x order (default n - 2).  For
 * pair p = 0, 1, ... row 2p carries f^(2(c-p))/(2(c-p))! in column c and
 * row 2p+1 carries f^(2(c-p)-1)/(2(c-p)-1)!, with columns c = 1, 2, ...
 * and entries of derivative order <= 0 or > n set to zero. */
RingMatrix<MPoly> build_M(const MonicPoly &f, std::optional<int> order = {});

/// (n-2)th leading principal minor of M, a polynomial in x.
MPoly build_H(const MonicPoly &f);

/// (-1)^(n(n-1)/2) res(f, f', x).
MPoly d1(const MonicPoly &f);

/// res(f, H, x).
MPoly d2_via_H(const MonicPoly &f);

/// prod over i<j, k != i,j of (2 rk - ri - rj).
Rational d2_from_roots(std::span<const Rational> roots);

/// prod_{i<j} (ri - rj)^2.
Rational d1_from_roots(std::span<const Rational> roots);

/// prod over i<j, k != i,j of (2 r - ri - rj) with r = roots[k] fixed.
Rational h_factor_at_root(std::span<const Rational> roots, std::size_t k);

/// F = res(f1, f3, y).
MPoly big_F(const MonicPoly &f);

enum class ResultantRoute { sylvester, monic_multiplication };

/// E = res(f, F, x); both routes return the same polynomial.
MPoly big_E(const MonicPoly &f, ResultantRoute route = ResultantRoute::sylvester);
MPoly big_E_from_F(const MonicPoly &f, const MPoly &F, ResultantRoute route = ResultantRoute::sylvester);

/// res(g1*, g3*, z), which is H up to sign.
MPoly res_g_star(const MonicPoly &f);
/// G = res(g1*, g3*, z)^2.
MPoly big_G(const MonicPoly &f);
/// res(g1, g3, y) computed directly from the y-polynomials.
MPoly big_G_direct(const MonicPoly &f);

/// res(f, res(f1, f2, y), x) == 0, for numeric f.
bool d1d2_zero_test(const MonicPoly &f);

/* The constant c with E = c D2^2, measured on the generic symbolic
 * polynomial of degree n (exact division) and cached per n.  Returns
 * nullopt when n is above `symbolic_cap`. */
std::optional<Rational> e_constant(int n, int symbolic_cap = 4);

/// E / D2^2 for a numeric f with D2 != 0.
Rational e_ratio(const MonicPoly &f);

} // namespace sdisc

#endif
