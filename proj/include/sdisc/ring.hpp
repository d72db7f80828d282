#ifndef SDISC_RING_HPP
#define SDISC_RING_HPP

/* Exact integers and rationals.
 *
 * Both types are thin value wrappers around GMP's C++ classes.  A
 * Rational is always stored in lowest terms with a positive
 * denominator; every arithmetic operator canonicalizes its result.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sdisc {

enum class Errc {
    bad_input,
    not_divisible,
    both_zero,
    degree_too_small,
    wrong_degree,
    out_of_range,
    cap_exceeded,
    no_convergence,
    residual_too_large,
    overflow,
};

const char *errc_name(Errc code);

class AlgebraError : public std::runtime_error {
public:
    AlgebraError(Errc code, const std::string &what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class Integer {
public:
    Integer() = default;
    Integer(long v) : v_(v) {}
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal string.  Throws bad_input.
    static Integer parse(std::string_view text);

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    Integer abs() const { return Integer(mpz_class(::abs(v_))); }
    std::string str() const { return v_.get_str(); }
    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const { return v_.get_si(); }
    const mpz_class &gmp() const { return v_; }

    friend Integer operator+(const Integer &a, const Integer &b) { return Integer(mpz_class(a.v_ + b.v_)); }
    friend Integer operator-(const Integer &a, const Integer &b) { return Integer(mpz_class(a.v_ - b.v_)); }
    friend Integer operator*(const Integer &a, const Integer &b) { return Integer(mpz_class(a.v_ * b.v_)); }
    Integer operator-() const { return Integer(mpz_class(-v_)); }

    friend bool operator==(const Integer &a, const Integer &b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Integer &a, const Integer &b)
    {
        return cmp(a.v_, b.v_) <=> 0;
    }

    friend Integer gcd(const Integer &a, const Integer &b);
    friend std::ostream &operator<<(std::ostream &os, const Integer &a) { return os << a.v_; }

private:
    mpz_class v_;
};

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(const Integer &v) : v_(v.gmp()) {}
    /// num/den, reduced.  Throws bad_input on a zero denominator.
    Rational(const Integer &num, const Integer &den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "p" or "p/q" with optional sign; whitespace around the
    /// parts is ignored.  Throws bad_input.
    static Rational parse(std::string_view text);
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }

    Integer num() const { return Integer(mpz_class(v_.get_num())); }
    Integer den() const { return Integer(mpz_class(v_.get_den())); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;
    Rational pow(unsigned e) const;
    double to_double() const { return v_.get_d(); }
    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;
    const mpq_class &gmp() const { return v_; }

    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        return cmp(a.v_, b.v_) <=> 0;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &a) { return os << a.str(); }

private:
    mpq_class v_;
};

/* The coefficient-ring contract the generic linear algebra is written
 * against.  exact_div(a, b) must return q with q*b == a or throw
 * not_divisible. */
template <typename R>
concept Ring = requires(const R &a, const R &b) {
    { R::zero() } -> std::convertible_to<R>;
    { R::one() } -> std::convertible_to<R>;
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { exact_div(a, b) } -> std::convertible_to<R>;
};

inline Rational exact_div(const Rational &a, const Rational &b) { return a / b; }

} // namespace sdisc

#endif
