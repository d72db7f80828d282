#ifndef SDISC_ROOTS_HPP
#define SDISC_ROOTS_HPP

#include "sdisc/disc.hpp"

#include <complex>
#include <span>
#include <vector>

namespace sdisc {

using Complex = std::complex<double>;

struct DurandKernerOptions {
    double tol = 1e-12;
    int max_iter = 500;
};

struct DurandKernerResult {
    std::vector<Complex> roots;
    int iterations = 0;
    /// max |f(z_k)| / residual_scale(z_k).
    double max_residual = 0.0;
};

/// Value of the monic polynomial with low coefficients a0..a(n-1) at z.
Complex eval_monic(std::span<const double> low, Complex z);

/* Size of the terms summed when evaluating f at z, floored at
 * 1 + max |a_j|.  Rounding error in f(z) is proportional to it. */
double residual_scale(std::span<const double> low, Complex z);

/// Doubles nearest to the coefficients of a numeric polynomial.
std::vector<double> to_double_coeffs(const MonicPoly &f);

/* Simultaneous Weierstrass iteration from the points (0.4 + 0.9i)^k.
 * Keeps sweeping after every |f(z_k)| <= tol residual_scale(z_k) until the
 * corrections stop shrinking, and returns the sweep with the smallest
 * residual.  Throws no_convergence when the residual bound is not reached
 * in max_iter sweeps. */
DurandKernerResult durand_kerner(std::span<const double> low, const DurandKernerOptions &opt = {});
DurandKernerResult durand_kerner(const MonicPoly &f, const DurandKernerOptions &opt = {});

/* Approximations of an m-fold root scatter on a circle of radius about
 * eps^(1/m).  Groups approximations closer than radius (1 + |z|), and
 * replaces each group of m by the root of f^(m-1) found by Newton's
 * method from the group mean, which is a simple root there. */
std::vector<Complex> refine_clusters(std::span<const double> low, std::vector<Complex> roots, double radius = 1e-4);

/// Smallest achievable max distance between two equal-size root lists
/// over all pairings (brute force; intended for small degrees).
double matched_distance(std::span<const Complex> a, std::span<const Complex> b);

} // namespace sdisc

#endif
