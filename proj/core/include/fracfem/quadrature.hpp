#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fracfem {

/// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule, nodes ascending. n in [1, 64].
const QuadratureRule& gauss_legendre(int n);

struct AdaptiveResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Interior breakpoints (if any) seed the initial partition.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, double abs_tol,
                                  std::span<const double> breakpoints = {},
                                  int max_intervals = 4000);

}  // namespace fracfem
