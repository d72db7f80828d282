#ifndef SDISC_TESTS_SUPPORT_HPP
#define SDISC_TESTS_SUPPORT_HPP

#include "sdisc/linalg.hpp"
#include "sdisc/mpoly.hpp"
#include "sdisc/verify.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace sdisc::test {

inline Rational q(long p, long d = 1)
{
    return Rational(Integer(p), Integer(d));
}

inline MPoly P(std::string_view s)
{
    return MPoly::parse(s);
}

inline std::vector<Rational> qs(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v)
        out.push_back(Rational(x));
    return out;
}

/// Random sparse polynomial in the given variables with small coefficients.
inline MPoly random_poly(SplitMix64 &rng, const std::vector<Var> &vars, int max_terms, unsigned max_exp)
{
    std::vector<Term> terms;
    int count = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < count; ++t) {
        Monomial m;
        for (Var v : vars)
            m = m * Monomial::var(v, static_cast<unsigned>(rng.uniform(0, max_exp)));
        terms.push_back({m, random_rational(rng, 5)});
    }
    return MPoly::from_terms(std::move(terms));
}

/// Laplace expansion along the first row; exponential, for small oracles only.
template <Ring R>
R cofactor_det(const RingMatrix<R> &m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return R::one();
    if (n == 1)
        return m(0, 0);
    R acc = R::zero();
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero())
            continue;
        RingMatrix<R> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c)
                    minor(i - 1, k++) = m(i, j);
        R term = m(0, c) * cofactor_det(minor);
        acc = c % 2 ? acc - term : acc + term;
    }
    return acc;
}

inline std::string read_fixture(const std::string &name)
{
    std::ifstream in(std::string(SDISC_FIXTURE_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace sdisc::test

#endif
