#include "sdisc/ring.hpp"

#include <cctype>

namespace sdisc {

const char *errc_name(Errc code)
{
    switch (code) {
    case Errc::bad_input: return "BadInput";
    case Errc::not_divisible: return "NotDivisible";
    case Errc::both_zero: return "BothZero";
    case Errc::degree_too_small: return "DegreeTooSmall";
    case Errc::wrong_degree: return "WrongDegree";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::residual_too_large: return "ResidualTooLarge";
    case Errc::overflow: return "Overflow";
    }
    return "Unknown";
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Integer Integer::parse(std::string_view text)
{
    std::string_view s = trim(text);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        throw AlgebraError(Errc::bad_input, "empty integer literal '" + std::string(text) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw AlgebraError(Errc::bad_input, "not a decimal integer: '" + std::string(text) + "'");
    // mpz_class rejects a leading '+'.
    std::string canon(s.front() == '+' ? s.substr(1) : s);
    return Integer(mpz_class(canon, 10));
}

Integer gcd(const Integer &a, const Integer &b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Integer(std::move(g));
}

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den.is_zero())
        throw AlgebraError(Errc::bad_input, "zero denominator");
    v_ = mpq_class(num.gmp(), den.gmp());
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(Integer::parse(s));
    Integer num = Integer::parse(s.substr(0, slash));
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw AlgebraError(Errc::bad_input, "signed denominator in '" + std::string(text) + "'");
    return Rational(num, Integer::parse(den_text));
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw AlgebraError(Errc::not_divisible, "inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned e) const
{
    mpq_class r(1);
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(std::move(r));
}

std::string Rational::str() const
{
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero())
        throw AlgebraError(Errc::not_divisible, "division by zero");
    v_ /= o.v_;
    return *this;
}

} // namespace sdisc
