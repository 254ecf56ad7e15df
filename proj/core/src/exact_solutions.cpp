#include "fracfem/exact_solutions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "fracfem/errors.hpp"

namespace fracfem {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

/// sin(n pi / 2) and cos(n pi / 2) exactly.
double sin_half_pi(long n) {
  static constexpr double s[4] = {0.0, 1.0, 0.0, -1.0};
  return s[n % 4];
}
double cos_half_pi(long n) {
  static constexpr double c[4] = {1.0, 0.0, -1.0, 0.0};
  return c[n % 4];
}

double odd_indicator(long n) { return (n % 2 == 1) ? 2.0 : 0.0; }  // 1 - (-1)^n

}  // namespace

bool InitialData::in_h10() const {
  return kind == InitialDataKind::quadratic_a || kind == InitialDataKind::hat_b;
}

bool InitialData::is_function() const { return kind != InitialDataKind::dirac_d; }

bool InitialData::series_at_zero() const { return in_h10(); }

const char* to_string(InitialDataKind kind) {
  switch (kind) {
    case InitialDataKind::quadratic_a: return "a";
    case InitialDataKind::hat_b: return "b";
    case InitialDataKind::one_c1: return "c1";
    case InitialDataKind::linear_c2: return "c2";
    case InitialDataKind::characteristic_c3: return "c3";
    case InitialDataKind::dirac_d: return "d";
  }
  return "?";
}

InitialDataKind initial_data_from_string(std::string_view name) {
  if (name == "a") return InitialDataKind::quadratic_a;
  if (name == "b") return InitialDataKind::hat_b;
  if (name == "c1") return InitialDataKind::one_c1;
  if (name == "c2") return InitialDataKind::linear_c2;
  if (name == "c3") return InitialDataKind::characteristic_c3;
  if (name == "d") return InitialDataKind::dirac_d;
  throw DomainError("unknown initial data '" + std::string(name) + "'");
}

double sine_coefficient(InitialDataKind kind, long n) {
  if (n < 1) throw DomainError("sine_coefficient: n must be at least 1");
  const double dn = static_cast<double>(n);
  switch (kind) {
    case InitialDataKind::quadratic_a: return 16.0 * odd_indicator(n) / (kPi * kPi * kPi * dn * dn * dn);
    case InitialDataKind::hat_b: return 4.0 * sin_half_pi(n) / (dn * dn * kPi * kPi);
    case InitialDataKind::one_c1: return 2.0 * odd_indicator(n) / (dn * kPi);
    case InitialDataKind::linear_c2: return (n % 2 == 1 ? 2.0 : -2.0) / (dn * kPi);
    case InitialDataKind::characteristic_c3: return 2.0 * (1.0 - cos_half_pi(n)) / (dn * kPi);
    case InitialDataKind::dirac_d: return 2.0 * sin_half_pi(n);
  }
  return 0.0;
}

CoefficientEnvelope coefficient_envelope(InitialDataKind kind) {
  switch (kind) {
    case InitialDataKind::quadratic_a: return {32.0 / (kPi * kPi * kPi), 3};
    case InitialDataKind::hat_b: return {4.0 / (kPi * kPi), 2};
    case InitialDataKind::one_c1: return {4.0 / kPi, 1};
    case InitialDataKind::linear_c2: return {2.0 / kPi, 1};
    case InitialDataKind::characteristic_c3: return {4.0 / kPi, 1};
    case InitialDataKind::dirac_d: return {2.0, 0};
  }
  return {0.0, 0};
}

double initial_value(InitialDataKind kind, double x) {
  switch (kind) {
    case InitialDataKind::quadratic_a: return 4.0 * x * (1.0 - x);
    case InitialDataKind::hat_b: return x <= 0.5 ? x : 1.0 - x;
    case InitialDataKind::one_c1: return 1.0;
    case InitialDataKind::linear_c2: return x;
    case InitialDataKind::characteristic_c3: return x < 0.5 ? 1.0 : 0.0;
    case InitialDataKind::dirac_d: break;
  }
  throw DomainError("initial_value: the delta has no pointwise values");
}

double initial_derivative(InitialDataKind kind, double x) {
  switch (kind) {
    case InitialDataKind::quadratic_a: return 4.0 - 8.0 * x;
    case InitialDataKind::hat_b: return x < 0.5 ? 1.0 : -1.0;
    case InitialDataKind::one_c1:
    case InitialDataKind::characteristic_c3: return 0.0;
    case InitialDataKind::linear_c2: return 1.0;
    case InitialDataKind::dirac_d: break;
  }
  throw DomainError("initial_derivative: the delta has no pointwise values");
}

double initial_l2_norm(InitialDataKind kind) {
  switch (kind) {
    case InitialDataKind::quadratic_a: return std::sqrt(8.0 / 15.0);
    case InitialDataKind::hat_b: return 1.0 / std::sqrt(12.0);
    case InitialDataKind::one_c1: return 1.0;
    case InitialDataKind::linear_c2: return 1.0 / std::sqrt(3.0);
    case InitialDataKind::characteristic_c3: return 1.0 / std::sqrt(2.0);
    case InitialDataKind::dirac_d: return 1.0;
  }
  return 1.0;
}

std::vector<double> initial_breakpoints(InitialDataKind kind) {
  if (kind == InitialDataKind::hat_b || kind == InitialDataKind::characteristic_c3) return {0.5};
  return {};
}

NodalVector initial_load_vector(const Mesh1D& mesh, InitialDataKind kind) {
  if (kind == InitialDataKind::dirac_d) throw DomainError("initial_load_vector: use dirac_load for the delta");
  const auto bp = initial_breakpoints(kind);
  return load_vector(mesh, [kind](double x) { return initial_value(kind, x); }, bp);
}

NodalVector initial_energy_load(const Mesh1D& mesh, const CoefficientField& k, InitialDataKind kind) {
  if (!InitialData{kind}.in_h10()) {
    std::ostringstream os;
    os << "initial_energy_load: data '" << to_string(kind) << "' is not in H^1_0; the Ritz projection is undefined";
    throw DomainError(os.str());
  }
  const auto bp = initial_breakpoints(kind);
  return energy_load_vector(mesh, k, [kind](double x) { return initial_derivative(kind, x); }, bp);
}

double SeriesSnapshot::value(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("SeriesSnapshot::value: x outside [0, 1]");
  double s = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) s += coeffs[i] * std::sin(kPi * static_cast<double>(i + 1) * x);
  return s;
}

double SeriesSnapshot::derivative(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("SeriesSnapshot::derivative: x outside [0, 1]");
  double s = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const double n = static_cast<double>(i + 1);
    s += coeffs[i] * n * kPi * std::cos(kPi * n * x);
  }
  return s;
}

FourierSeriesSolution::FourierSeriesSolution(InitialData data, double alpha, double rel_tail_tol, long max_modes)
    : data_(data), alpha_(alpha), rel_tail_tol_(rel_tail_tol), max_modes_(max_modes) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream os;
    os << "FourierSeriesSolution: alpha = " << alpha << " outside (0, 1]";
    throw DomainError(os.str());
  }
  if (!(rel_tail_tol > 0.0)) throw DomainError("FourierSeriesSolution: tail tolerance must be positive");
  if (max_modes < 1) throw DomainError("FourierSeriesSolution: max_modes must be positive");
}

void FourierSeriesSolution::check_time(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("FourierSeriesSolution: t must be finite and nonnegative");
  if (t == 0.0 && !data_.series_at_zero()) {
    std::ostringstream os;
    os << "FourierSeriesSolution: series for data '" << to_string(data_.kind) << "' does not converge at t = 0";
    throw DomainError(os.str());
  }
}

namespace {

struct TailRule {
  long modes;
  double bound;
};

/// Smallest N with sum_{n > N} K n^{-q} <= tol by the integral test, capped.
TailRule algebraic_tail(double k, int q, double tol, long cap) {
  if (q <= 1) return {cap, kInf};
  const double p = q - 1.0;
  const double n = std::ceil(std::pow(k / (p * tol), 1.0 / p));
  const long modes = std::clamp<long>(static_cast<long>(std::min(n, 1e15)), 1, cap);
  return {modes, k / (p * std::pow(static_cast<double>(modes), p))};
}

/// alpha = 1: terms C n^{d-p} pi^d e^{-n^2 pi^2 t} with consecutive ratio <= e^{-(2n+1) pi^2 t}.
TailRule exponential_tail(double c, int p, int d, double t, double tol, long cap) {
  for (long n = 1; n < cap; ++n) {
    const double m = static_cast<double>(n + 1);
    const double first = c * std::pow(m, d - p) * std::pow(kPi, d) * std::exp(-m * m * kPi * kPi * t);
    const double ratio = std::exp(-(2.0 * m + 1.0) * kPi * kPi * t);
    const double bound = ratio < 1.0 ? first / (1.0 - ratio) : kInf;
    if (bound <= tol) return {n, bound};
  }
  return {cap, kInf};
}

}  // namespace

long FourierSeriesSolution::required_modes(double t, int order) const {
  check_time(t);
  const CoefficientEnvelope env = coefficient_envelope(data_.kind);
  const double tol_rel = (order == 1 && data_.kind == InitialDataKind::dirac_d) ? std::max(rel_tail_tol_, 1e-8)
                                                                                 : rel_tail_tol_;
  // Head magnitude from the first few terms.
  double head = 0.0;
  const double ta = std::pow(t, alpha_);
  for (long n = 1; n <= 8; ++n) {
    const double lam = n * n * kPi * kPi;
    const double e = mittag_leffler({alpha_, 1.0}, -lam * ta);
    head = std::max(head, std::abs(sine_coefficient(data_.kind, n) * e) * std::pow(n * kPi, order));
  }
  const double tol = tol_rel * std::max(head, std::numeric_limits<double>::min());
  if (t == 0.0) return algebraic_tail(env.constant * std::pow(kPi, order), env.decay - order, tol, max_modes_).modes;
  if (alpha_ == 1.0) return exponential_tail(env.constant, env.decay, order, t, tol, max_modes_).modes;
  // |E_{alpha,1}(-x)| <= 2 / x
  const double k = env.constant * std::pow(kPi, order) * 2.0 / (kPi * kPi * ta);
  return algebraic_tail(k, env.decay + 2 - order, tol, max_modes_).modes;
}

SeriesSnapshot FourierSeriesSolution::snapshot(double t) const {
  const long n_modes = std::max(required_modes(t, 0), required_modes(t, 1));
  SeriesSnapshot s;
  s.kind = data_.kind;
  s.alpha = alpha_;
  s.t = t;
  s.coeffs.resize(static_cast<std::size_t>(n_modes));
  const double ta = std::pow(t, alpha_);
  for (long n = 1; n <= n_modes; ++n) {
    const double c = sine_coefficient(data_.kind, n);
    if (c == 0.0) {
      s.coeffs[n - 1] = 0.0;
      continue;
    }
    const MlValue e = t == 0.0 ? MlValue{1.0, MlRegion::closed_form}
                               : mittag_leffler_eval({alpha_, 1.0}, -static_cast<double>(n) * n * kPi * kPi * ta);
    s.regions.record(e.region);
    s.coeffs[n - 1] = c * e.value;
  }
  const CoefficientEnvelope env = coefficient_envelope(data_.kind);
  const double big_n = static_cast<double>(n_modes);
  const auto tail_sum = [&](double k, int q) {
    if (q <= 1) return kInf;
    return k / ((q - 1.0) * std::pow(big_n, q - 1.0));
  };
  if (t == 0.0) {
    s.tail_bound = tail_sum(env.constant, env.decay);
    s.deriv_tail_bound = tail_sum(env.constant * kPi, env.decay - 1);
  } else if (alpha_ == 1.0) {
    const auto tb = [&](int d) {
      const double m = big_n + 1.0;
      const double first = env.constant * std::pow(m, d - env.decay) * std::pow(kPi, d) * std::exp(-m * m * kPi * kPi * t);
      const double ratio = std::exp(-(2.0 * m + 1.0) * kPi * kPi * t);
      return ratio < 1.0 ? first / (1.0 - ratio) : kInf;
    };
    s.tail_bound = tb(0);
    s.deriv_tail_bound = tb(1);
  } else {
    const double k = env.constant * 2.0 / (kPi * kPi * ta);
    s.tail_bound = tail_sum(k, env.decay + 2);
    s.deriv_tail_bound = tail_sum(k * kPi, env.decay + 1);
    const double lam_next = (big_n + 1.0) * (big_n + 1.0) * kPi * kPi * ta;
    if (lam_next >= 1e4) s.remainder_kappa = reciprocal_gamma(1.0 - alpha_) / (kPi * kPi * ta);
  }
  return s;
}

double FourierSeriesSolution::eval(double x, double t) const { return snapshot(t).value(x); }

double FourierSeriesSolution::eval_deriv(double x, double t) const { return snapshot(t).derivative(x); }

double eval_exact(const FourierSeriesSolution& sol, double x, double t) { return sol.eval(x, t); }

double eval_exact_deriv(const FourierSeriesSolution& sol, double x, double t) { return sol.eval_deriv(x, t); }

}  // namespace fracfem
