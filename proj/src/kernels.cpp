#include "ineq/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ineq/special.hpp"

namespace ineq::kernels {

namespace {

constexpr double kLn2 = 0.6931471805599453;

void check_p(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw std::domain_error("kernel: p must be finite and > 1");
    }
}

void check_q(double q) {
    if (!(q > 0.0) || !std::isfinite(q)) {
        throw std::domain_error("kernel: q must be finite and > 0");
    }
}

}  // namespace

double g_pair(double x1, double x2, double p) {
    check_p(p);
    if (x1 == x2) {
        return 0.0;
    }
    const double log_p = std::log(p);
    const double t = (x2 - x1) * log_p;
    const double value =
        (special::log1p_exp(t) + special::log1p_exp(-t) - 2.0 * kLn2) / log_p;
    return std::max(value, 0.0);
}

double h_pair(double x1, double x2, double q) {
    check_q(q);
    if (x1 == x2) {
        return 0.0;
    }
    const double pair[2] = {x1, x2};
    const double value =
        special::power_mean(pair, q) - special::power_mean(pair, -q);
    return std::max(value, 0.0);
}

double g_tuple(std::span<const double> xs, double p) {
    check_p(p);
    const std::size_t m = xs.size();
    if (m < 2) {
        throw std::invalid_argument("g_tuple: need at least 2 values");
    }
    const double log_p = std::log(p);
    const double pivot = xs[0];

    // Both log-sum-exp evaluations share the exponents d_j * log p with
    // opposite signs; scan twice to avoid a temporary buffer.
    double peak_pos = 0.0;
    double peak_neg = 0.0;
    for (std::size_t j = 1; j < m; ++j) {
        const double t = (xs[j] - pivot) * log_p;
        peak_pos = std::max(peak_pos, t);
        peak_neg = std::max(peak_neg, -t);
    }
    double sum_pos = std::exp(-peak_pos);
    double sum_neg = std::exp(-peak_neg);
    for (std::size_t j = 1; j < m; ++j) {
        const double t = (xs[j] - pivot) * log_p;
        sum_pos += std::exp(t - peak_pos);
        sum_neg += std::exp(-t - peak_neg);
    }
    const double lse_pos = peak_pos + std::log(sum_pos);
    const double lse_neg = peak_neg + std::log(sum_neg);
    const double value =
        (lse_pos + lse_neg - 2.0 * std::log(static_cast<double>(m))) / log_p;
    return std::max(value, 0.0);
}

double h_tuple(std::span<const double> xs, double q) {
    check_q(q);
    if (xs.size() < 2) {
        throw std::invalid_argument("h_tuple: need at least 2 values");
    }
    const double value =
        special::power_mean(xs, q) - special::power_mean(xs, -q);
    return std::max(value, 0.0);
}

double range(std::span<const double> xs) {
    if (xs.size() < 2) {
        throw std::invalid_argument("range: need at least 2 values");
    }
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    return *hi - *lo;
}

std::vector<std::pair<double, double>> curve_t(double x1, double x2,
                                               std::span<const double> p_grid) {
    std::vector<std::pair<double, double>> out;
    out.reserve(p_grid.size());
    for (double p : p_grid) {
        check_p(p);
        const double t = (x2 - x1) * std::log(p);
        out.emplace_back(p, special::log1p_exp(t) + special::log1p_exp(-t));
    }
    return out;
}

std::vector<std::pair<double, double>> curve_k(double x1, double x2,
                                               std::span<const double> q_grid) {
    std::vector<std::pair<double, double>> out;
    out.reserve(q_grid.size());
    for (double q : q_grid) {
        out.emplace_back(q, h_pair(x1, x2, q));
    }
    return out;
}

}  // namespace ineq::kernels
