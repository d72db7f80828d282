#ifndef SDISC_MPOLY_HPP
#define SDISC_MPOLY_HPP

#include "sdisc/ring.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sdisc {

/* Variable universe shared by every polynomial in the library:
 *
 *     a0 < a1 < ... < a10 < x < y < z < w
 *
 * The coefficient symbols of a degree-n polynomial are a0..a(n-1), so a
 * single universe serves every n up to kMaxCoeffSymbols. */
inline constexpr int kMaxCoeffSymbols = 11;
inline constexpr int kNumVars = kMaxCoeffSymbols + 4;

class Var {
public:
    static Var a(int i);
    static Var x() { return Var(kMaxCoeffSymbols); }
    static Var y() { return Var(kMaxCoeffSymbols + 1); }
    static Var z() { return Var(kMaxCoeffSymbols + 2); }
    static Var w() { return Var(kMaxCoeffSymbols + 3); }
    /// Inverse of name(); throws bad_input for anything outside the universe.
    static Var from_name(std::string_view name);
    /// Position in the canonical order; throws out_of_range.
    static Var at(int index);

    int index() const { return idx_; }
    bool is_coeff_symbol() const { return idx_ < kMaxCoeffSymbols; }
    std::string name() const;

    friend bool operator==(Var, Var) = default;
    friend auto operator<=>(Var, Var) = default;

private:
    explicit Var(int idx) : idx_(idx) {}
    int idx_;
};

/* Exponent vector packed into two 64-bit words.  Byte 7 of `hi` holds
 * the total degree, the remaining bytes hold one exponent each, placed
 * so that unsigned comparison of (hi, lo) is graded lexicographic order
 * with w > z > y > x > a10 > ... > a0.  Total degree is capped at 255,
 * which also bounds every exponent, so adding two monomials never
 * carries between bytes. */
class Monomial {
public:
    static constexpr unsigned kMaxDegree = 255;

    Monomial() = default;
    static Monomial var(Var v, unsigned e = 1);

    unsigned degree() const { return static_cast<unsigned>(hi_ >> 56); }
    unsigned exponent(Var v) const;
    bool is_one() const { return hi_ == 0 && lo_ == 0; }
    bool divides(const Monomial &m) const;
    /// Requires divides(m); returns m / *this.
    Monomial quotient_of(const Monomial &m) const;
    Monomial without(Var v) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
    {
        if (auto c = a.hi_ <=> b.hi_; c != 0)
            return c;
        return a.lo_ <=> b.lo_;
    }

private:
    static int shift(int idx) { return 8 * (idx < 8 ? idx : idx - 8); }
    std::uint64_t hi_ = 0;
    std::uint64_t lo_ = 0;
};

struct Term {
    Monomial mono;
    Rational coeff;
};

/* Sparse polynomial over Q.  Terms are kept sorted by strictly
 * decreasing monomial with no zero coefficients, so structural equality
 * is polynomial equality. */
class MPoly {
public:
    MPoly() = default;
    MPoly(long c) : MPoly(Rational(c)) {}
    MPoly(const Rational &c);
    MPoly(Var v) : MPoly(Monomial::var(v), Rational(1)) {}
    MPoly(const Monomial &m, const Rational &c);

    static MPoly zero() { return MPoly(); }
    static MPoly one() { return MPoly(1); }
    /// Builds from an arbitrary term list; sorts, merges and drops zeros.
    static MPoly from_terms(std::vector<Term> terms);
    /// Reads the canonical text form (and the looser forms used in
    /// fixtures: implicit coefficient 1, p/q coefficients, free spacing).
    static MPoly parse(std::string_view text);

    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    /// Coefficient of a constant polynomial; throws out_of_range otherwise.
    Rational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    /// 0 for the zero polynomial.
    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
    unsigned degree(Var v) const;
    bool involves(Var v) const { return degree(v) > 0; }
    const Term &leading_term() const { return terms_.front(); }
    /// Coefficient of the given monomial (zero when absent).
    Rational coeff(const Monomial &m) const;

    MPoly operator-() const;
    MPoly &operator+=(const MPoly &o);
    MPoly &operator-=(const MPoly &o);
    MPoly &operator*=(const MPoly &o);
    MPoly &operator*=(const Rational &c);
    friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }
    friend MPoly operator*(const MPoly &a, const MPoly &b);
    friend MPoly operator*(MPoly a, const Rational &c) { return a *= c; }
    friend MPoly operator*(const Rational &c, MPoly a) { return a *= c; }
    MPoly pow(unsigned e) const;

    friend bool operator==(const MPoly &a, const MPoly &b);

    /// d/dv.
    MPoly derivative(Var v) const;
    /// Simultaneous substitution; unbound variables are left alone.
    MPoly substitute(const std::map<Var, MPoly> &bindings) const;
    /// Substitution by constants.
    MPoly evaluate(const std::map<Var, Rational> &values) const;

    /// Canonical text: terms in descending graded-lex order, variables
    /// within a term in ascending order, e.g. "-2*a2^3 + 9*a1*a2 - 27*a0".
    std::string str() const;
    friend std::ostream &operator<<(std::ostream &os, const MPoly &p) { return os << p.str(); }

private:
    std::vector<Term> terms_;
};

/// Exact quotient p/q.  Throws not_divisible when q does not divide p.
MPoly exact_div(const MPoly &p, const MPoly &q);

/* Coefficients of a polynomial with respect to one distinguished
 * variable, in ascending powers.  The top coefficient is nonzero; the
 * zero polynomial has an empty coefficient list. */
struct UniView {
    Var main = Var::x();
    std::vector<MPoly> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    /// Degree in `main`; 0 for the zero polynomial.
    int degree() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1; }
    const MPoly &leading() const { return coeffs.back(); }
    MPoly assemble() const;
};

UniView univariate_view(const MPoly &p, Var v);

} // namespace sdisc

#endif
