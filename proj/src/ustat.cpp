#include "ineq/ustat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "ineq/parallel.hpp"

namespace ineq {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw std::invalid_argument("Sample: need at least 2 observations");
    }
    KahanSum acc;
    for (double v : values_) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::domain_error("Sample: observations must be finite and nonnegative");
        }
        acc.add(v);
    }
    sum_ = acc.value();
    if (!(sum_ > 0.0)) {
        throw std::domain_error("Sample: observations must not all be zero");
    }
    mean_ = sum_ / static_cast<double>(values_.size());
}

std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t m,
                                      std::uint64_t cap) {
    if (m > n) {
        return 0;
    }
    m = std::min(m, n - m);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        r = r * (n - m + i) / i;  // exact: r*(n-m+i)/i is C(n-m+i, i)
        if (r > cap) {
            return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(r);
}

namespace {

// Enumerates ascending index tuples of size k from [start, n) in
// lexicographic order. Returns false once exhausted.
class CombinationEnumerator {
  public:
    CombinationEnumerator(std::size_t start, std::size_t n, std::size_t k)
        : n_(n), idx_(k) {
        for (std::size_t j = 0; j < k; ++j) {
            idx_[j] = start + j;
        }
    }

    std::span<const std::size_t> indices() const noexcept { return idx_; }

    bool advance() noexcept {
        const std::size_t k = idx_.size();
        std::size_t j = k;
        while (j > 0) {
            --j;
            if (idx_[j] != n_ - k + j) {
                ++idx_[j];
                for (std::size_t l = j + 1; l < k; ++l) {
                    idx_[l] = idx_[l - 1] + 1;
                }
                return true;
            }
        }
        return false;
    }

  private:
    std::size_t n_;
    std::vector<std::size_t> idx_;
};

// Exact average over all combinations, chunked by the first index so
// parallel evaluation reduces in a fixed order.
double exact_average(std::span<const double> values, const TupleKernel& kernel,
                     std::size_t m, std::uint64_t n_combinations,
                     unsigned threads) {
    const std::size_t n = values.size();
    const std::size_t slots = n - m + 1;
    std::vector<double> slot_sums(slots, 0.0);

    if (m == 2) {
        parallel_for_index(slots, threads, [&](std::size_t i) {
            double pair[2];
            pair[0] = values[i];
            KahanSum acc;
            for (std::size_t j = i + 1; j < n; ++j) {
                pair[1] = values[j];
                acc.add(kernel(std::span<const double>(pair, 2)));
            }
            slot_sums[i] = acc.value();
        });
    } else {
        parallel_for_index(slots, threads, [&](std::size_t first) {
            std::vector<double> tuple(m);
            tuple[0] = values[first];
            KahanSum acc;
            CombinationEnumerator combos(first + 1, n, m - 1);
            do {
                const auto rest = combos.indices();
                for (std::size_t l = 0; l < m - 1; ++l) {
                    tuple[l + 1] = values[rest[l]];
                }
                acc.add(kernel(tuple));
            } while (combos.advance());
            slot_sums[first] = acc.value();
        });
    }

    KahanSum total;
    for (double s : slot_sums) {
        total.add(s);
    }
    return total.value() / static_cast<double>(n_combinations);
}

// Average over `draws` distinct combinations chosen by lexicographic rank
// (Floyd sampling over [0, C)); used when the combination space is small
// enough to walk but too large to evaluate in full.
double sampled_ranks_average(std::span<const double> values,
                             const TupleKernel& kernel, std::size_t m,
                             std::uint64_t n_combinations, std::uint64_t draws,
                             Rng& rng) {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(draws) * 2);
    for (std::uint64_t j = n_combinations - draws; j < n_combinations; ++j) {
        const std::uint64_t t = rng.next_below(j + 1);
        if (!chosen.insert(t).second) {
            chosen.insert(j);
        }
    }
    std::vector<std::uint64_t> ranks(chosen.begin(), chosen.end());
    std::sort(ranks.begin(), ranks.end());

    const std::size_t n = values.size();
    std::vector<double> tuple(m);
    KahanSum acc;
    std::size_t next_rank = 0;
    std::uint64_t rank = 0;
    CombinationEnumerator combos(0, n, m);
    do {
        if (rank == ranks[next_rank]) {
            const auto idx = combos.indices();
            for (std::size_t l = 0; l < m; ++l) {
                tuple[l] = values[idx[l]];
            }
            acc.add(kernel(tuple));
            if (++next_rank == ranks.size()) {
                break;
            }
        }
        ++rank;
    } while (combos.advance());
    return acc.value() / static_cast<double>(draws);
}

// Average over `draws` distinct combinations sampled directly as index
// tuples; used when the combination space is too large to enumerate.
double sampled_tuples_average(std::span<const double> values,
                              const TupleKernel& kernel, std::size_t m,
                              std::uint64_t draws, Rng& rng) {
    const std::size_t n = values.size();
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<double> tuple(m);
    KahanSum acc;
    std::uint64_t accepted = 0;
    std::uint64_t attempts = 0;
    const std::uint64_t max_attempts = 20 * draws + 1000;
    std::vector<std::uint32_t> combo(m);
    while (accepted < draws) {
        if (++attempts > max_attempts) {
            throw std::runtime_error(
                "u_statistic: incomplete sampling rejected too many duplicate "
                "combinations; request fewer draws");
        }
        // Floyd's algorithm for m distinct indices in [0, n).
        std::unordered_set<std::uint32_t> picked;
        for (std::size_t j = n - m; j < n; ++j) {
            const auto t = static_cast<std::uint32_t>(rng.next_below(j + 1));
            if (!picked.insert(t).second) {
                picked.insert(static_cast<std::uint32_t>(j));
            }
        }
        combo.assign(picked.begin(), picked.end());
        std::sort(combo.begin(), combo.end());
        if (!seen.insert(combo).second) {
            continue;  // duplicate combination, redraw
        }
        for (std::size_t l = 0; l < m; ++l) {
            tuple[l] = values[combo[l]];
        }
        acc.add(kernel(tuple));
        ++accepted;
    }
    return acc.value() / static_cast<double>(draws);
}

}  // namespace

double u_statistic(const Sample& sample, const TupleKernel& kernel,
                   std::size_t m, const EvalMode& mode,
                   const UStatOptions& options) {
    const std::size_t n = sample.size();
    if (m < 2 || m > n) {
        throw std::invalid_argument("u_statistic: order m must satisfy 2 <= m <= n");
    }
    const auto values = sample.values();

    if (std::holds_alternative<ExactMode>(mode)) {
        const auto count = binomial(n, m, options.max_kernel_evals);
        if (!count) {
            throw std::runtime_error(
                "u_statistic: exact evaluation exceeds the kernel-evaluation "
                "budget; raise --max-kernel-evals or use incomplete mode");
        }
        return exact_average(values, kernel, m, *count, options.threads);
    }

    const auto& inc = std::get<IncompleteMode>(mode);
    if (inc.draws == 0) {
        throw std::invalid_argument("u_statistic: incomplete mode needs draws >= 1");
    }
    if (inc.draws > options.max_kernel_evals) {
        throw std::runtime_error(
            "u_statistic: requested draws exceed the kernel-evaluation budget");
    }
    const auto count = binomial(n, m, UINT64_MAX / 4);
    Rng rng = inc.rng;
    if (count && inc.draws >= *count) {
        // Every combination is requested: identical to the exact statistic.
        return exact_average(values, kernel, m, *count, options.threads);
    }
    if (count && *count <= options.max_kernel_evals && inc.draws > *count / 2) {
        return sampled_ranks_average(values, kernel, m, *count, inc.draws, rng);
    }
    return sampled_tuples_average(values, kernel, m, inc.draws, rng);
}

XiEstimates xi_components(const Sample& sample, const PairKernel& kernel,
                          unsigned threads) {
    const std::size_t n = sample.size();
    if (n < 3) {
        throw std::invalid_argument("xi_components: need at least 3 observations");
    }
    const auto values = sample.values();
    const auto nd = static_cast<double>(n);

    // Conditional means; each row is summed in ascending j order so the
    // result does not depend on the worker count.
    std::vector<double> row_mean(n);
    parallel_for_index(n, threads, [&](std::size_t i) {
        KahanSum acc;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                acc.add(kernel(values[i], values[j]));
            }
        }
        row_mean[i] = acc.value() / (nd - 1.0);
    });

    KahanSum u_acc;
    for (double r : row_mean) {
        u_acc.add(r);
    }
    const double u_value = u_acc.value() / nd;

    const double mean = sample.mean();
    KahanSum acc1;
    KahanSum acc12;
    KahanSum acc2;
    for (std::size_t i = 0; i < n; ++i) {
        const double dev = row_mean[i] - u_value;
        acc1.add(dev * dev);
        acc12.add(values[i] * row_mean[i]);
        const double centered = values[i] - mean;
        acc2.add(centered * centered);
    }

    XiEstimates xi;
    xi.u_value = u_value;
    xi.mean = mean;
    xi.clamped = false;
    xi.xi1 = acc1.value() / nd;
    xi.xi12 = acc12.value() / nd - mean * u_value;
    xi.xi2 = acc2.value() / nd;
    if (xi.xi1 < 0.0) {
        xi.xi1 = 0.0;
        xi.clamped = true;
    }
    if (xi.xi2 < 0.0) {
        xi.xi2 = 0.0;
        xi.clamped = true;
    }
    return xi;
}

}  // namespace ineq
