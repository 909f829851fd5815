#include "ineq/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ineq/format.hpp"
#include "ineq/kernels.hpp"
#include "ineq/parallel.hpp"
#include "ineq/special.hpp"

namespace ineq {

std::string family_name(Family family) {
    switch (family) {
        case Family::GP: return "gp";
        case Family::HQ: return "hq";
        case Family::Limit: return "gini";
    }
    return "?";
}

IndexSpec IndexSpec::gp(double p, std::size_t m) { return {Family::GP, m, p}; }
IndexSpec IndexSpec::hq(double q, std::size_t m) { return {Family::HQ, m, q}; }
IndexSpec IndexSpec::gini() { return {Family::Limit, 2, 0.0}; }
IndexSpec IndexSpec::igm(std::size_t m) { return {Family::Limit, m, 0.0}; }

void IndexSpec::validate() const {
    if (m < 2) {
        throw std::invalid_argument("IndexSpec: order m must be at least 2");
    }
    switch (family) {
        case Family::GP:
            if (!(param > 1.0) || !std::isfinite(param)) {
                throw std::domain_error("IndexSpec: p must be finite and > 1");
            }
            break;
        case Family::HQ:
            if (!(param > 0.0) || !std::isfinite(param)) {
                throw std::domain_error("IndexSpec: q must be finite and > 0");
            }
            break;
        case Family::Limit:
            break;
    }
}

TupleKernel IndexSpec::tuple_kernel() const {
    validate();
    switch (family) {
        case Family::GP: {
            const double p = param;
            return [p](std::span<const double> xs) { return kernels::g_tuple(xs, p); };
        }
        case Family::HQ: {
            const double q = param;
            return [q](std::span<const double> xs) { return kernels::h_tuple(xs, q); };
        }
        case Family::Limit:
            return [](std::span<const double> xs) { return kernels::range(xs); };
    }
    throw std::logic_error("IndexSpec: unknown family");
}

PairKernel IndexSpec::pair_kernel() const {
    validate();
    if (m != 2) {
        throw std::invalid_argument("IndexSpec: pair kernel requires m = 2");
    }
    switch (family) {
        case Family::GP: {
            const double p = param;
            return [p](double a, double b) { return kernels::g_pair(a, b, p); };
        }
        case Family::HQ: {
            const double q = param;
            return [q](double a, double b) { return kernels::h_pair(a, b, q); };
        }
        case Family::Limit:
            return [](double a, double b) { return std::abs(a - b); };
    }
    throw std::logic_error("IndexSpec: unknown family");
}

Estimate estimate_index(const Sample& sample, const IndexSpec& spec,
                        const EvalMode& mode, const UStatOptions& options) {
    spec.validate();
    if (spec.m > sample.size()) {
        throw std::invalid_argument("estimate_index: order m exceeds sample size");
    }
    const double u = u_statistic(sample, spec.tuple_kernel(), spec.m, mode, options);

    Estimate est;
    est.spec = spec;
    est.point = u / (static_cast<double>(spec.m) * sample.mean());
    est.n = sample.size();
    est.diagnostics.incomplete = std::holds_alternative<IncompleteMode>(mode);
    return est;
}

Estimate estimate_with_ci(const Sample& sample, const IndexSpec& spec,
                          double level, unsigned threads) {
    spec.validate();
    if (spec.m != 2) {
        throw std::invalid_argument("estimate_with_ci: only pair estimators (m = 2) have CIs");
    }
    if (!(level > 0.0) || !(level < 1.0)) {
        throw std::domain_error("estimate_with_ci: level must lie in (0, 1)");
    }

    const XiEstimates xi = xi_components(sample, spec.pair_kernel(), threads);
    const double x = xi.u_value;
    const double y = xi.mean;
    const double y2 = y * y;

    // Plug-in of the limit variance of sqrt(n) (U/(2 mean) - index):
    // xi1/y^2 - x xi12/y^3 + x^2 xi2/(4 y^4).
    double variance = xi.xi1 / y2 - x * xi.xi12 / (y2 * y) +
                      x * x * xi.xi2 / (4.0 * y2 * y2);
    const bool clamped = !(variance > 0.0);
    variance = std::max(variance, 0.0);

    const double n = static_cast<double>(sample.size());
    const double se = std::sqrt(variance / n);
    const double z = special::normal_quantile(0.5 * (1.0 + level));

    Estimate est;
    est.spec = spec;
    est.point = x / (2.0 * y);
    est.se = se;
    est.ci_low = std::max(0.0, est.point - z * se);
    est.ci_high = est.point + z * se;
    est.level = level;
    est.n = sample.size();
    est.diagnostics.variance_clamped = clamped || xi.clamped;
    return est;
}

double population_value(const DistSpec& dist, const IndexSpec& spec,
                        std::uint64_t draws, Rng& rng) {
    spec.validate();
    if (draws < 2 * spec.m) {
        throw std::invalid_argument("population_value: need draws >= 2*m");
    }
    const auto kernel = spec.tuple_kernel();
    const std::uint64_t tuples = draws / spec.m;
    std::vector<double> tuple(spec.m);
    KahanSum acc;
    for (std::uint64_t t = 0; t < tuples; ++t) {
        for (double& v : tuple) {
            v = rng.next_gamma(dist);
        }
        acc.add(kernel(tuple));
    }
    const double mean_kernel = acc.value() / static_cast<double>(tuples);
    return mean_kernel / (static_cast<double>(spec.m) * dist.mean());
}

ConvergenceCurve convergence_curve(const Sample& sample, Family family,
                                   std::span<const double> param_grid,
                                   const UStatOptions& options) {
    if (family == Family::Limit) {
        throw std::invalid_argument("convergence_curve: family must be gp or hq");
    }
    ConvergenceCurve curve;
    curve.points.reserve(param_grid.size());
    for (double param : param_grid) {
        IndexSpec spec{family, 2, param};
        curve.points.push_back(
            {param, estimate_index(sample, spec, ExactMode{}, options).point});
    }
    curve.gini =
        estimate_index(sample, IndexSpec::gini(), ExactMode{}, options).point;
    return curve;
}

std::string to_json(const Estimate& estimate) {
    std::ostringstream out;
    out << "{\"family\":\"" << family_name(estimate.spec.family) << "\"";
    out << ",\"m\":" << estimate.spec.m;
    if (estimate.spec.family == Family::Limit) {
        out << ",\"param\":null";
    } else {
        out << ",\"param\":" << fmt_g17(estimate.spec.param);
    }
    out << ",\"point\":" << fmt_g17(estimate.point);
    if (estimate.se) {
        out << ",\"se\":" << fmt_g17(*estimate.se);
    }
    if (estimate.ci_low && estimate.ci_high) {
        out << ",\"ci_low\":" << fmt_g17(*estimate.ci_low)
            << ",\"ci_high\":" << fmt_g17(*estimate.ci_high);
    }
    if (estimate.level) {
        out << ",\"level\":" << fmt_g17(*estimate.level);
    }
    out << ",\"n\":" << estimate.n;
    out << ",\"diagnostics\":{\"variance_clamped\":"
        << (estimate.diagnostics.variance_clamped ? "true" : "false")
        << ",\"incomplete\":" << (estimate.diagnostics.incomplete ? "true" : "false")
        << "}}";
    return out.str();
}

}  // namespace ineq
