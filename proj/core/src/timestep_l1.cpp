#include "fracfem/timestep_l1.hpp"

#include <cmath>
#include <sstream>

#include "fracfem/errors.hpp"
#include "fracfem/special_functions.hpp"

namespace fracfem {

namespace {

void check_alpha(double alpha, const char* what) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream os;
    os << what << ": alpha = " << alpha << " outside (0, 1)";
    throw DomainError(os.str());
  }
}

}  // namespace

L1Weights l1_weights(int n, double alpha) {
  check_alpha(alpha, "l1_weights");
  if (n < 1) throw DomainError("l1_weights: need at least one weight");
  L1Weights w{alpha, std::vector<double>(n)};
  const double p = 1.0 - alpha;
  double prev = 0.0;
  for (int j = 0; j < n; ++j) {
    const double next = std::pow(j + 1.0, p);
    w.b[j] = next - prev;
    prev = next;
  }
  return w;
}

double discrete_caputo(std::span<const double> history, double alpha, double tau) {
  if (history.size() < 2) throw DomainError("discrete_caputo: history needs at least two samples");
  if (!(tau > 0.0)) throw DomainError("discrete_caputo: tau must be positive");
  const int n = static_cast<int>(history.size()) - 1;
  const L1Weights w = l1_weights(n, alpha);
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += w.b[j] * (history[n - j] - history[n - j - 1]);
  return s / (gamma(2.0 - alpha) * std::pow(tau, alpha));
}

L1Trajectory l1_solve(const TriDiagMatrix& stiffness, const TriDiagMatrix& mass, double alpha, double tau,
                      std::span<const double> v_h, int n_steps, const NodalForcing& forcing) {
  check_alpha(alpha, "l1_solve");
  if (!(tau > 0.0)) throw DomainError("l1_solve: tau must be positive");
  if (n_steps < 0) throw DomainError("l1_solve: negative step count");
  const std::size_t n = v_h.size();
  if (stiffness.size() != n || mass.size() != n) {
    std::ostringstream os;
    os << "l1_solve: K (" << stiffness.size() << "), M (" << mass.size() << ") and v_h (" << n
       << ") sizes differ";
    throw DimensionError(os.str());
  }
  const double g = gamma(2.0 - alpha) * std::pow(tau, alpha);
  const TriDiagFactor lhs(mass.plus(stiffness, g));
  const L1Weights w = l1_weights(std::max(n_steps, 1), alpha);

  L1Trajectory traj;
  traj.tau = tau;
  traj.states.reserve(static_cast<std::size_t>(n_steps) + 1);
  traj.states.emplace_back(v_h.begin(), v_h.end());

  // Increments d_m = U^m - U^{m-1}, kept so the history sum needs no subtraction per step.
  std::vector<NodalVector> incr;
  incr.reserve(n_steps);
  NodalVector hist(n);
  for (int step = 1; step <= n_steps; ++step) {
    const NodalVector& prev = traj.states.back();
    for (std::size_t i = 0; i < n; ++i) hist[i] = prev[i];
    for (int j = 1; j < step; ++j) {
      const double bj = w.b[j];
      const NodalVector& d = incr[step - j - 1];
      for (std::size_t i = 0; i < n; ++i) hist[i] -= bj * d[i];
    }
    NodalVector rhs = mass.apply(hist);
    if (forcing) {
      const NodalVector f = forcing(step * tau);
      if (f.size() != n) throw DimensionError("l1_solve: forcing returned a vector of the wrong size");
      const NodalVector mf = mass.apply(f);
      for (std::size_t i = 0; i < n; ++i) rhs[i] += g * mf[i];
    }
    NodalVector next = lhs.solve(rhs);
    NodalVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = next[i] - prev[i];
    incr.push_back(std::move(d));
    traj.states.push_back(std::move(next));
  }
  return traj;
}

}  // namespace fracfem
