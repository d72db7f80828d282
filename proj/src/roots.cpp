#include "sdisc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sdisc {

Complex eval_monic(std::span<const double> low, Complex z)
{
    Complex acc(1.0, 0.0);
    for (std::size_t i = low.size(); i-- > 0;)
        acc = acc * z + low[i];
    return acc;
}

std::vector<double> to_double_coeffs(const MonicPoly &f)
{
    std::vector<double> out;
    for (const auto &c : f.numeric_coeffs())
        out.push_back(c.to_double());
    return out;
}

double residual_scale(std::span<const double> low, Complex z)
{
    const double r = std::abs(z);
    double largest = 0.0;
    double sum = 0.0;
    double power = 1.0;
    for (double a : low) {
        largest = std::max(largest, std::abs(a));
        sum += std::abs(a) * power;
        power *= r;
    }
    return std::max(1.0 + largest, sum + power);
}

namespace {

double max_residual(std::span<const double> low, const std::vector<Complex> &z)
{
    double r = 0.0;
    for (const auto &v : z)
        r = std::max(r, std::abs(eval_monic(low, v)) / residual_scale(low, v));
    return r;
}

// Ascending coefficients of f^(k) (not normalized), leading included.
std::vector<double> derivative_coeffs(std::span<const double> low, int k)
{
    std::vector<double> c(low.begin(), low.end());
    c.push_back(1.0);
    for (int d = 0; d < k; ++d) {
        std::vector<double> next;
        for (std::size_t j = 1; j < c.size(); ++j)
            next.push_back(c[j] * static_cast<double>(j));
        c = std::move(next);
    }
    return c;
}

Complex eval_dense(const std::vector<double> &c, Complex z)
{
    Complex acc(0.0, 0.0);
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * z + c[i];
    return acc;
}

} // namespace

DurandKernerResult durand_kerner(std::span<const double> low, const DurandKernerOptions &opt)
{
    const std::size_t n = low.size();
    if (n == 0)
        throw AlgebraError(Errc::degree_too_small, "durand_kerner needs degree >= 1");
    DurandKernerResult res;
    if (n == 1) {
        res.roots = {Complex(-low[0], 0.0)};
        res.max_residual = 0.0;
        return res;
    }

    const double bound = opt.tol;
    const Complex seed(0.4, 0.9);
    std::vector<Complex> z(n);
    z[0] = Complex(1.0, 0.0);
    for (std::size_t k = 1; k < n; ++k)
        z[k] = z[k - 1] * seed;

    bool reached = false;
    std::vector<Complex> best;
    double best_residual = INFINITY;
    double prev_step = INFINITY;
    int stalls = 0;
    int it = 0;
    for (; it < opt.max_iter; ++it) {
        double step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex denom(1.0, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    denom *= z[i] - z[j];
            if (denom == Complex(0.0, 0.0))
                denom = Complex(1e-300, 0.0);
            Complex delta = eval_monic(low, z[i]) / denom;
            if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag()))
                throw AlgebraError(Errc::no_convergence, "durand_kerner diverged");
            z[i] -= delta;
            step = std::max(step, std::abs(delta) / (1.0 + std::abs(z[i])));
        }
        const double resid = max_residual(low, z);
        if (resid < best_residual) {
            best_residual = resid;
            best = z;
        }
        reached = reached || resid <= bound;
        if (reached) {
            if (step == 0.0 || step >= prev_step)
                ++stalls;
            if (step <= 4e-16 || stalls >= 3)
                break;
        }
        prev_step = step;
    }
    res.max_residual = best_residual;
    if (!reached)
        throw AlgebraError(Errc::no_convergence,
                           "durand_kerner did not reach the residual bound in " + std::to_string(opt.max_iter) +
                               " sweeps");
    res.iterations = it;
    res.roots = std::move(best);
    return res;
}

DurandKernerResult durand_kerner(const MonicPoly &f, const DurandKernerOptions &opt)
{
    auto low = to_double_coeffs(f);
    return durand_kerner(std::span<const double>(low), opt);
}

std::vector<Complex> refine_clusters(std::span<const double> low, std::vector<Complex> roots, double radius)
{
    const std::size_t n = roots.size();
    // Single-linkage grouping via union-find.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double scale = 1.0 + std::max(std::abs(roots[i]), std::abs(roots[j]));
            if (std::abs(roots[i] - roots[j]) <= radius * scale)
                parent[find(i)] = find(j);
        }

    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i)
        groups[find(i)].push_back(i);

    for (const auto &g : groups) {
        if (g.size() < 2)
            continue;
        Complex mean(0.0, 0.0);
        for (auto i : g)
            mean += roots[i];
        mean /= static_cast<double>(g.size());

        auto d = derivative_coeffs(low, static_cast<int>(g.size()) - 1);
        auto dd = derivative_coeffs(low, static_cast<int>(g.size()));
        Complex z = mean;
        for (int it = 0; it < 50; ++it) {
            Complex slope = eval_dense(dd, z);
            if (slope == Complex(0.0, 0.0))
                break;
            Complex step = eval_dense(d, z) / slope;
            z -= step;
            if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z)))
                break;
        }
        double scale = 1.0 + std::abs(mean);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z - mean) > 10.0 * radius * scale)
            z = mean;
        for (auto i : g)
            roots[i] = z;
    }
    return roots;
}

double matched_distance(std::span<const Complex> a, std::span<const Complex> b)
{
    if (a.size() != b.size())
        throw AlgebraError(Errc::bad_input, "matched_distance needs lists of equal size");
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = INFINITY;
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return a.empty() ? 0.0 : best;
}

} // namespace sdisc
