#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ineq/rng.hpp"
#include "ineq/ustat.hpp"

namespace ineq {

/// Index family: the logarithmic-kernel index (p > 1), the power-mean-gap
/// index (q > 0), or their common large-parameter limit (the Gini
/// coefficient at m = 2, the m-th Gini index otherwise).
enum class Family { GP, HQ, Limit };

std::string family_name(Family family);

struct IndexSpec {
    Family family;
    std::size_t m = 2;
    double param = 0.0;  ///< p for GP, q for HQ; unused for Limit

    static IndexSpec gp(double p, std::size_t m = 2);
    static IndexSpec hq(double q, std::size_t m = 2);
    static IndexSpec gini();
    static IndexSpec igm(std::size_t m);

    void validate() const;

    /// Order-m kernel for this spec (the first tuple element is the pivot
    /// of the logarithmic kernel).
    TupleKernel tuple_kernel() const;
    /// Pair kernel; requires m == 2.
    PairKernel pair_kernel() const;
};

struct Diagnostics {
    bool variance_clamped = false;  ///< plug-in variance was nonpositive
    bool incomplete = false;        ///< incomplete U-statistic mode was used
};

struct Estimate {
    IndexSpec spec;
    double point = 0.0;
    std::optional<double> se;
    std::optional<double> ci_low;
    std::optional<double> ci_high;
    std::optional<double> level;
    std::size_t n = 0;
    Diagnostics diagnostics;
};

/// Point estimate U_n / (m * mean), algebraically identical to the
/// prefactor form (m-1)!/((n-1)...(n-m+1)) * sum / (sum of X). No
/// standard error is attached.
Estimate estimate_index(const Sample& sample, const IndexSpec& spec,
                        const EvalMode& mode = ExactMode{},
                        const UStatOptions& options = {});

/// Point estimate with delta-method standard error and a two-sided
/// normal confidence interval truncated to [0, inf). Pair estimators
/// only (m == 2).
Estimate estimate_with_ci(const Sample& sample, const IndexSpec& spec,
                          double level = 0.95, unsigned threads = 1);

/// Monte Carlo approximation of the population index: averages the
/// family kernel over floor(draws/m) i.i.d. m-tuples from `dist` and
/// divides by m times the known distribution mean.
double population_value(const DistSpec& dist, const IndexSpec& spec,
                        std::uint64_t draws, Rng& rng);

struct CurvePoint {
    double param;
    double estimate;
};

struct ConvergenceCurve {
    std::vector<CurvePoint> points;
    double gini;  ///< reference line: the limit estimate on the same sample
};

/// Pair-estimator values over a parameter grid plus the limit reference.
ConvergenceCurve convergence_curve(const Sample& sample, Family family,
                                   std::span<const double> param_grid,
                                   const UStatOptions& options = {});

/// JSON record {family, m, param, point, se, ci_low, ci_high, level, n,
/// diagnostics} with 17-significant-digit numbers; absent fields omitted.
std::string to_json(const Estimate& estimate);

}  // namespace ineq
