#ifndef SDISC_LINALG_HPP
#define SDISC_LINALG_HPP

#include "sdisc/mpoly.hpp"
#include "sdisc/ring.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace sdisc {

/// Dense row-major matrix over a commutative ring.
template <Ring R>
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, R::zero()) {}
    RingMatrix(std::initializer_list<std::initializer_list<R>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    R &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    /// Top-left k x k block.
    RingMatrix leading_block(std::size_t k) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

template <Ring R>
RingMatrix<R>::RingMatrix(std::initializer_list<std::initializer_list<R>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_)
            throw AlgebraError(Errc::bad_input, "ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

template <Ring R>
RingMatrix<R> RingMatrix<R>::leading_block(std::size_t k) const
{
    if (k > rows_ || k > cols_)
        throw AlgebraError(Errc::out_of_range, "leading block of order " + std::to_string(k) + " exceeds matrix");
    RingMatrix<R> b(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            b(i, j) = (*this)(i, j);
    return b;
}

/* Fraction-free Gaussian elimination.  After step k every entry below
 * and right of the pivot is a (k+1)-minor of the input, so the division
 * by the previous pivot is exact.  Pivot: first nonzero entry at or
 * below the diagonal in the current column. */
template <Ring R>
R bareiss_det(RingMatrix<R> m)
{
    if (!m.is_square())
        throw AlgebraError(Errc::bad_input, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return R::one();
    bool negate = false;
    R prev = R::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero())
                ++p;
            if (p == n)
                return R::zero();
            m.swap_rows(k, p);
            negate = !negate;
        }
        const R &pivot = m(k, k);
        const bool unit_prev = prev == R::one();
        for (std::size_t i = k + 1; i < n; ++i) {
            const R &lead = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                R v = m(i, j) * pivot;
                if (!lead.is_zero() && !m(k, j).is_zero())
                    v = v - lead * m(k, j);
                m(i, j) = unit_prev ? std::move(v) : exact_div(v, prev);
            }
            m(i, k) = R::zero();
        }
        prev = m(k, k);
    }
    R det = m(n - 1, n - 1);
    return negate ? -det : det;
}

template <Ring R>
R leading_principal_minor(const RingMatrix<R> &m, std::size_t k)
{
    return bareiss_det(m.leading_block(k));
}

/* Sylvester matrix of p and q in their shared main variable: deg q rows
 * of p's coefficients (highest power first), then deg p rows of q's. */
RingMatrix<MPoly> sylvester_matrix(const UniView &p, const UniView &q);

/// det of the Sylvester matrix.  res(c, d) = 1 for nonzero constants,
/// 0 when exactly one side is zero; throws both_zero otherwise.
MPoly sylvester_resultant(const UniView &p, const UniView &q);
MPoly sylvester_resultant(const MPoly &p, const MPoly &q, Var v);

/* Bezout matrix B of p, q with deg p >= deg q: the coefficients of the
 * Cayley quotient (p(y)q(t) - p(t)q(y)) / (y - t), B(j, k) multiplying
 * y^j t^k.  Its order is deg p. */
RingMatrix<MPoly> bezout_matrix(const UniView &p, const UniView &q);

/// Resultant via det of the Bezout matrix, rescaled so that the result
/// agrees with sylvester_resultant exactly (sign included).
MPoly bezout_resultant(const UniView &p, const UniView &q);
MPoly bezout_resultant(const MPoly &p, const MPoly &q, Var v);

/* res(f, g) for f monic in v, as the determinant of multiplication by g
 * on Q[...][v]/(f).  Equals sylvester_resultant(f, g) and is far smaller
 * when deg g is much larger than deg f. */
MPoly monic_resultant(const MPoly &f, const MPoly &g, Var v);

} // namespace sdisc

#endif
