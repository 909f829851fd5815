#pragma once

#include <span>
#include <utility>
#include <vector>

namespace ineq::kernels {

/// Logarithmic pair kernel, p > 1:
///   [log(1 + p^(x2-x1)) + log(1 + p^(x1-x2)) - 2 log 2] / log p.
/// Evaluated entirely in log space; symmetric, in [0, |x1 - x2|],
/// exactly 0 when x1 == x2.
double g_pair(double x1, double x2, double p);

/// Power-mean gap kernel, q > 0:
///   power_mean({x1,x2}, q) - power_mean({x1,x2}, -q).
/// Symmetric, in [0, |x1 - x2|], nondecreasing in q.
double h_pair(double x1, double x2, double q);

/// Order-m logarithmic kernel with the first element as pivot:
///   [log(1 + sum_{j>=2} p^(x_j-x_1)) + log(1 + sum_{j>=2} p^(x_1-x_j))
///    - 2 log m] / log p.
/// Depends on which element sits in position 0; reduces to g_pair at m=2.
double g_tuple(std::span<const double> xs, double p);

/// Order-m power-mean gap kernel; fully symmetric, in [0, max - min].
double h_tuple(std::span<const double> xs, double q);

/// max(xs) - min(xs); the common limit kernel of g_tuple and h_tuple.
double range(std::span<const double> xs);

/// T(p) = log(1 + p^(x2-x1)) + log(1 + p^(x1-x2)) over a grid of p > 1.
/// Unnormalized diagnostic curve; T(p) >= 2 log 2 everywhere.
std::vector<std::pair<double, double>> curve_t(double x1, double x2,
                                               std::span<const double> p_grid);

/// K(q) = h_pair(x1, x2, q) over a grid of q > 0.
std::vector<std::pair<double, double>> curve_k(double x1, double x2,
                                               std::span<const double> q_grid);

}  // namespace ineq::kernels
