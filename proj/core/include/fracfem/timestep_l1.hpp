#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fracfem/fem_core.hpp"

namespace fracfem {

/// b_j = (j+1)^{1-alpha} - j^{1-alpha}, j = 0..n-1.
struct L1Weights {
  double alpha = 0.5;
  std::vector<double> b;
};

L1Weights l1_weights(int n, double alpha);

/// L1 approximation of the Caputo derivative at t_n = n tau from samples u_0..u_n.
double discrete_caputo(std::span<const double> history, double alpha, double tau);

/// Right-hand side f(t) as a nodal vector; the scheme adds gamma * M_* f(t_n).
using NodalForcing = std::function<NodalVector(double t)>;

struct L1Trajectory {
  double tau = 0.0;
  std::vector<NodalVector> states;  ///< states[n] approximates u(n tau); states[0] = v_h

  const NodalVector& final_state() const { return states.back(); }
};

/// Fully discrete scheme
///   (M_* + gamma K) U^n = M_* [U^{n-1} - sum_{j=1}^{n-1} b_j (U^{n-j} - U^{n-j-1})] + gamma M_* f(t_n),
/// gamma = Gamma(2 - alpha) tau^alpha.
L1Trajectory l1_solve(const TriDiagMatrix& stiffness, const TriDiagMatrix& mass, double alpha, double tau,
                      std::span<const double> v_h, int n_steps, const NodalForcing& forcing = {});

}  // namespace fracfem
