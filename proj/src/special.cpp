#include "ineq/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ineq::special {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// Beyond |t| = 40 the neglected term sits below double resolution.
constexpr double kSoftplusCutoff = 40.0;

}  // namespace

double log1p_exp(double t) {
    if (!std::isfinite(t)) {
        throw std::domain_error("log1p_exp: argument must be finite");
    }
    if (t > kSoftplusCutoff) {
        return t + std::log1p(std::exp(-t));
    }
    if (t < -kSoftplusCutoff) {
        return std::exp(t);
    }
    if (t > 0.0) {
        return t + std::log1p(std::exp(-t));
    }
    return std::log1p(std::exp(t));
}

double power_mean(std::span<const double> values, double order) {
    if (values.empty()) {
        throw std::invalid_argument("power_mean: empty value list");
    }
    if (order == 0.0 || !std::isfinite(order)) {
        throw std::domain_error("power_mean: order must be finite and nonzero");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (double v : values) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::domain_error("power_mean: values must be finite and nonnegative");
        }
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi == 0.0) {
        return 0.0;  // all zeros
    }
    if (order < 0.0 && lo == 0.0) {
        return 0.0;  // continuous limit convention
    }

    const double k = static_cast<double>(values.size());

    // Direct evaluation when v^r cannot overflow; otherwise factor out the
    // extreme element so every ratio power stays in (0, 1].
    const double max_log = order * ((order > 0.0) ? std::log(hi) : std::log(lo));
    if (max_log < 700.0) {
        double sum = 0.0;
        for (double v : values) {
            sum += std::pow(v, order);
        }
        return std::clamp(std::pow(sum / k, 1.0 / order), lo, hi);
    }

    const double pivot = (order > 0.0) ? hi : lo;
    double sum = 0.0;
    for (double v : values) {
        sum += std::pow(v / pivot, order);
    }
    return std::clamp(pivot * std::pow(sum / k, 1.0 / order), lo, hi);
}

double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("ln_gamma: argument must be positive and finite");
    }
    // Lanczos, g = 7, 9 coefficients.
    static constexpr double kCoef[] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        // Reflection keeps the series argument away from the poles.
        constexpr double kPi = 3.141592653589793;
        return std::log(kPi / std::sin(kPi * x)) - ln_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double series = kCoef[0];
    for (int i = 1; i < 9; ++i) {
        series += kCoef[i] / (z + i);
    }
    const double t = z + 7.5;
    constexpr double kLnSqrt2Pi = 0.9189385332046727;
    return kLnSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

double digamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("digamma: argument must be positive and finite");
    }
    double result = 0.0;
    while (x < 6.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic series through the x^-14 term.
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = inv2 * (1.0 / 12.0 -
                    inv2 * (1.0 / 120.0 -
                    inv2 * (1.0 / 252.0 -
                    inv2 * (1.0 / 240.0 -
                    inv2 * (1.0 / 132.0 -
                    inv2 * (691.0 / 32760.0 -
                    inv2 * (1.0 / 12.0)))))));
    return result + std::log(x) - 0.5 * inv - series;
}

namespace {

// Series expansion of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 1000; ++k) {
        term *= x / (a + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) {
            break;
        }
    }
    const double log_prefix = -x + a * std::log(x) - ln_gamma(a);
    return sum * std::exp(log_prefix);
}

// Modified Lentz continued fraction for Q(a, x), valid for x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) {
            break;
        }
    }
    const double log_prefix = -x + a * std::log(x) - ln_gamma(a);
    return std::exp(log_prefix) * h;
}

}  // namespace

double reg_gamma_lower(double a, double x) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::domain_error("reg_gamma_lower: shape must be positive and finite");
    }
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::domain_error("reg_gamma_lower: argument must be nonnegative and finite");
    }
    if (x == 0.0) {
        return 0.0;
    }
    double p;
    if (x < a + 1.0) {
        p = gamma_p_series(a, x);
    } else {
        p = 1.0 - gamma_q_contfrac(a, x);
    }
    return std::clamp(p, 0.0, 1.0);
}

double normal_quantile(double prob) {
    if (!(prob > 0.0) || !(prob < 1.0)) {
        throw std::domain_error("normal_quantile: probability must lie in (0, 1)");
    }
    // Acklam's rational approximation, then one Halley step against the
    // erfc-based CDF to push the error to machine precision.
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (prob < p_low) {
        const double q = std::sqrt(-2.0 * std::log(prob));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (prob <= 1.0 - p_low) {
        const double q = prob - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-prob));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    constexpr double kSqrt2 = 1.4142135623730951;
    constexpr double kSqrt2Pi = 2.5066282746310002;
    const double cdf = 0.5 * std::erfc(-x / kSqrt2);
    const double pdf = std::exp(-0.5 * x * x) / kSqrt2Pi;
    const double err = cdf - prob;
    // Halley refinement: u = err/pdf, correction u / (1 + x u / 2).
    const double u = err / pdf;
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

}  // namespace ineq::special
