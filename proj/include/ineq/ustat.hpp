#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ineq/rng.hpp"

namespace ineq {

/// Validated sample of nonnegative observations with cached sum and mean.
class Sample {
  public:
    explicit Sample(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double sum() const noexcept { return sum_; }
    double mean() const noexcept { return mean_; }

  private:
    std::vector<double> values_;
    double sum_;
    double mean_;
};

/// Plug-in variance components of the joint CLT for (U_n, mean).
struct XiEstimates {
    double xi1;      ///< conditional-mean variance component, clamped at 0
    double xi12;     ///< cross component between kernel and observation
    double xi2;      ///< population-style variance of the sample
    double u_value;  ///< the pair U-statistic itself
    double mean;     ///< sample mean
    bool clamped;    ///< a negative component was clamped to 0
};

using TupleKernel = std::function<double(std::span<const double>)>;
using PairKernel = std::function<double(double, double)>;

struct ExactMode {};

/// Average over `draws` distinct combinations sampled via `rng`.
struct IncompleteMode {
    std::uint64_t draws;
    Rng rng;
};

using EvalMode = std::variant<ExactMode, IncompleteMode>;

struct UStatOptions {
    std::uint64_t max_kernel_evals = 100'000'000;
    unsigned threads = 1;
};

/// C(n, m) if it fits below `cap`, otherwise nullopt.
std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t m,
                                      std::uint64_t cap);

/// Order-m U-statistic of `kernel` over the sample.
///
/// Exact mode averages the kernel over all C(n, m) index combinations in
/// lexicographic order of the original data positions (the first index of
/// each combination is the tuple's pivot). Incomplete mode averages over
/// `draws` distinct combinations and is reproducible from its rng; it
/// falls back to exact enumeration when draws >= C(n, m).
double u_statistic(const Sample& sample, const TupleKernel& kernel,
                   std::size_t m, const EvalMode& mode,
                   const UStatOptions& options = {});

/// O(n^2) plug-in estimates of the variance components for a pair kernel:
/// conditional means g1(i) = mean_{j != i} kernel(X_i, X_j), then
///   xi1  = mean_i (g1(i) - U_n)^2        (clamped at 0)
///   xi12 = mean_i X_i g1(i) - mean(X) U_n
///   xi2  = mean_i (X_i - mean(X))^2.
XiEstimates xi_components(const Sample& sample, const PairKernel& kernel,
                          unsigned threads = 1);

}  // namespace ineq
