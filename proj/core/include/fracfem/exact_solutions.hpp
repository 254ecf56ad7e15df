#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fracfem/fem_core.hpp"
#include "fracfem/special_functions.hpp"

namespace fracfem {

/// Initial data v = sum_n c_n sin(n pi x) on (0, 1).
enum class InitialDataKind {
  quadratic_a,        ///< v = 4x(1 - x)
  hat_b,              ///< x on [0, 1/2], 1 - x on (1/2, 1]
  one_c1,             ///< v = 1
  linear_c2,          ///< v = x
  characteristic_c3,  ///< indicator of (0, 1/2)
  dirac_d,            ///< delta at 1/2
};

struct InitialData {
  InitialDataKind kind = InitialDataKind::quadratic_a;

  /// Smooth enough for the Ritz projection (v in H^1_0).
  bool in_h10() const;
  /// Pointwise values exist (everything but the delta).
  bool is_function() const;
  /// Series converges absolutely at t = 0.
  bool series_at_zero() const;
};

const char* to_string(InitialDataKind kind);
InitialDataKind initial_data_from_string(std::string_view name);

/// c_n with v = sum c_n sin(n pi x). Throws for n < 1.
double sine_coefficient(InitialDataKind kind, long n);

/// Bound |c_n| <= envelope * n^{-decay} for all n >= 1.
struct CoefficientEnvelope {
  double constant;
  int decay;
};
CoefficientEnvelope coefficient_envelope(InitialDataKind kind);

double initial_value(InitialDataKind kind, double x);
double initial_derivative(InitialDataKind kind, double x);

/// ||v||_{L2}; 1 for the delta, whose errors are reported unnormalized.
double initial_l2_norm(InitialDataKind kind);

/// Points where v or v' is discontinuous inside (0, 1).
std::vector<double> initial_breakpoints(InitialDataKind kind);

/// (v, phi_i) for the functions; throws for the delta.
NodalVector initial_load_vector(const Mesh1D& mesh, InitialDataKind kind);
/// (k v', phi_i') for data in H^1_0; throws otherwise.
NodalVector initial_energy_load(const Mesh1D& mesh, const CoefficientField& k, InitialDataKind kind);

/// Series coefficients a_n = c_n E_{alpha,1}(-n^2 pi^2 t^alpha) at one time.
struct SeriesSnapshot {
  InitialDataKind kind = InitialDataKind::quadratic_a;
  double alpha = 1.0;
  double t = 0.0;
  std::vector<double> coeffs;  ///< coeffs[n - 1] = a_n
  double tail_bound = 0.0;        ///< bound on sup_x |sum_{n > N} a_n sin(n pi x)|
  double deriv_tail_bound = 0.0;  ///< same for the x-derivative (infinite if not summable)
  /// For n > N, a_n = c_n * kappa / n^2 to relative accuracy ~ 1/(lambda_N t^alpha); 0 if negligible.
  double remainder_kappa = 0.0;
  MlRegionStats regions;

  long n_modes() const { return static_cast<long>(coeffs.size()); }
  double value(double x) const;
  double derivative(double x) const;
};

/// Truncated Fourier-Mittag-Leffler series u(x, t) = sum c_n E_{alpha,1}(-n^2 pi^2 t^alpha) sin(n pi x).
class FourierSeriesSolution {
public:
  FourierSeriesSolution(InitialData data, double alpha, double rel_tail_tol = 1e-10, long max_modes = 200000);

  const InitialData& data() const { return data_; }
  double alpha() const { return alpha_; }
  double rel_tail_tol() const { return rel_tail_tol_; }
  long max_modes() const { return max_modes_; }

  /// Mode count chosen by the integral-test tail rule for the value (order 0) or derivative (order 1).
  long required_modes(double t, int order) const;

  /// Coefficients at time t, with enough modes for both value and derivative (capped).
  SeriesSnapshot snapshot(double t) const;

  double eval(double x, double t) const;
  double eval_deriv(double x, double t) const;

private:
  void check_time(double t) const;

  InitialData data_;
  double alpha_;
  double rel_tail_tol_;
  long max_modes_;
};

double eval_exact(const FourierSeriesSolution& sol, double x, double t);
double eval_exact_deriv(const FourierSeriesSolution& sol, double x, double t);

}  // namespace fracfem
