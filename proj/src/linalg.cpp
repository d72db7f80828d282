#include "sdisc/linalg.hpp"

#include <algorithm>

namespace sdisc {

namespace {

void check_main(const UniView &p, const UniView &q)
{
    if (p.main != q.main)
        throw AlgebraError(Errc::bad_input, "resultant operands viewed in different variables");
}

MPoly sign_power(int exponent)
{
    return exponent % 2 ? MPoly(-1) : MPoly(1);
}

} // namespace

RingMatrix<MPoly> sylvester_matrix(const UniView &p, const UniView &q)
{
    check_main(p, q);
    const int m = p.degree();
    const int k = q.degree();
    RingMatrix<MPoly> s(m + k, m + k);
    for (int r = 0; r < k; ++r)
        for (int i = 0; i <= m; ++i)
            s(r, r + i) = p.coeffs[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= k; ++i)
            s(k + r, r + i) = q.coeffs[k - i];
    return s;
}

MPoly sylvester_resultant(const UniView &p, const UniView &q)
{
    check_main(p, q);
    if (p.is_zero() && q.is_zero())
        throw AlgebraError(Errc::both_zero, "resultant of two zero polynomials");
    if (p.is_zero() || q.is_zero())
        return MPoly();
    return bareiss_det(sylvester_matrix(p, q));
}

MPoly sylvester_resultant(const MPoly &p, const MPoly &q, Var v)
{
    return sylvester_resultant(univariate_view(p, v), univariate_view(q, v));
}

RingMatrix<MPoly> bezout_matrix(const UniView &p, const UniView &q)
{
    check_main(p, q);
    const int m = p.degree();
    if (q.degree() > m)
        throw AlgebraError(Errc::bad_input, "bezout_matrix expects deg p >= deg q");
    auto pc = [&](int i) { return i < static_cast<int>(p.coeffs.size()) ? p.coeffs[i] : MPoly(); };
    auto qc = [&](int i) { return i < static_cast<int>(q.coeffs.size()) ? q.coeffs[i] : MPoly(); };
    // c(i, j) is the coefficient of y^i t^j in p(y)q(t) - p(t)q(y).
    auto c = [&](int i, int j) { return pc(i) * qc(j) - pc(j) * qc(i); };

    // Dividing by (y - t): b(i, j) = b(i-1, j+1) - c(i, j+1).
    RingMatrix<MPoly> b(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            MPoly v = -c(i, j + 1);
            if (i > 0 && j + 1 < m)
                v += b(i - 1, j + 1);
            b(i, j) = std::move(v);
        }
    return b;
}

/* det B(p, q) = (-1)^(m(m-1)/2) * lc(p)^(m-k) * res(p, q) for
 * m = deg p >= k = deg q. */
MPoly bezout_resultant(const UniView &p, const UniView &q)
{
    check_main(p, q);
    if (p.is_zero() && q.is_zero())
        throw AlgebraError(Errc::both_zero, "resultant of two zero polynomials");
    if (p.is_zero() || q.is_zero())
        return MPoly();
    if (p.degree() < q.degree())
        return sign_power(p.degree() * q.degree()) * bezout_resultant(q, p);
    const int m = p.degree();
    const int k = q.degree();
    if (m == 0)
        return MPoly(1);
    MPoly det = bareiss_det(bezout_matrix(p, q));
    det = det * sign_power(m * (m - 1) / 2);
    if (m > k)
        det = exact_div(det, p.leading().pow(static_cast<unsigned>(m - k)));
    return det;
}

MPoly bezout_resultant(const MPoly &p, const MPoly &q, Var v)
{
    return bezout_resultant(univariate_view(p, v), univariate_view(q, v));
}

MPoly monic_resultant(const MPoly &f, const MPoly &g, Var v)
{
    UniView fv = univariate_view(f, v);
    if (fv.is_zero() || !(fv.leading() == MPoly(1)))
        throw AlgebraError(Errc::bad_input, "monic_resultant needs f monic in " + v.name());
    const int n = fv.degree();
    if (n == 0)
        return MPoly(1);

    // Reduce a coefficient vector (ascending) modulo the monic f in place.
    auto reduce = [&](std::vector<MPoly> &c) {
        for (int top = static_cast<int>(c.size()) - 1; top >= n; --top) {
            if (!c[top].is_zero()) {
                MPoly lead = std::move(c[top]);
                for (int i = 0; i < n; ++i)
                    if (!fv.coeffs[i].is_zero())
                        c[top - n + i] -= lead * fv.coeffs[i];
            }
        }
        c.resize(n);
    };

    std::vector<MPoly> col = univariate_view(g, v).coeffs;
    col.resize(std::max<std::size_t>(col.size(), n));
    reduce(col);

    RingMatrix<MPoly> mult(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i)
            mult(i, j) = col[i];
        col.insert(col.begin(), MPoly());
        reduce(col);
    }
    return bareiss_det(std::move(mult));
}

} // namespace sdisc
