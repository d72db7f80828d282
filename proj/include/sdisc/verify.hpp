#ifndef SDISC_VERIFY_HPP
#define SDISC_VERIFY_HPP

#include "sdisc/classify.hpp"
#include "sdisc/disc.hpp"
#include "sdisc/roots.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sdisc {

/// splitmix64: 64-bit state, one multiply-xorshift finalizer per draw.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

private:
    std::uint64_t state_;
};

/// Stateless mixing of several words into one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// p/q with |p| <= bound and 1 <= q <= bound.
Rational random_rational(SplitMix64 &rng, long bound);
std::vector<Rational> random_rational_roots(int n, std::uint64_t seed, long bound);

/// Some roots[k] equals the average of two others (distinct indices).
bool has_symmetric_triple(std::span<const Rational> roots);
bool has_repeated_root(std::span<const Rational> roots);

/* Numeric picture of a cubic's roots, independent of D1 and D2: roots
 * from Durand-Kerner, clusters merged, then signs predicted from the
 * geometry (real count, multiplicity, position of the odd root). */
struct RootStructure {
    std::vector<Complex> roots;
    int real_count = 0;
    int distinct = 0;
    bool arithmetic_triple = false;
    int d1_sign = 0;
    int d2_sign = 0;
};
RootStructure cubic_root_structure(const MonicPoly &f, double tol = 1e-7);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct TrialReport {
    int n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    std::string kind;
    std::vector<Rational> roots;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> values;
    double seconds = 0.0;

    bool pass() const;
    nlohmann::ordered_json to_json(bool with_timings = false) const;
};

struct SuiteOptions {
    std::vector<int> n_list{3, 4, 5};
    int trials = 10;
    std::uint64_t seed = 1;
    /// Empty means every default check.
    std::vector<std::string> checks;
    long bound = 10;
    unsigned threads = 0;
};

/// Checks run when none are named.  "d2-mod4" is opt-in and never fails.
const std::vector<std::string> &default_checks();
const std::vector<std::string> &known_checks();

/* Reports ordered by (n, trial).  Every 5th trial is planted: alternately
 * a symmetric triple and a repeated root. */
std::vector<TrialReport> run_suite(const SuiteOptions &opt);

/// E / D2^2 on the fixed instance with roots 2^k - 1 (no symmetric triple).
Rational reference_e_ratio(int n);

} // namespace sdisc

#endif
