#include "fracfem/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "fracfem/errors.hpp"
#include "fracfem/quadrature.hpp"

namespace fracfem {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kGammaOverflow = 171.6243769563027;

bool is_integer(double x) { return std::isfinite(x) && std::floor(x) == x; }

/// log|1/Gamma(x)| and its sign; sign 0 at the poles.
std::pair<double, int> log_reciprocal_gamma(double x) {
  if (x > 0.0) return {-std::lgamma(x), 1};
  if (is_integer(x)) return {-std::numeric_limits<double>::infinity(), 0};
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  const double s = sin_pi(x);
  return {std::log(std::abs(s)) + std::lgamma(1.0 - x) - std::log(kPi), s > 0.0 ? 1 : -1};
}

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

void validate(MlParams p, double z) {
  if (!(p.alpha > 0.0 && p.alpha <= 1.0)) {
    std::ostringstream os;
    os << "mittag_leffler: alpha = " << p.alpha << " outside (0, 1]";
    throw DomainError(os.str());
  }
  if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
    std::ostringstream os;
    os << "mittag_leffler: beta = " << p.beta << " must be positive";
    throw DomainError(os.str());
  }
  if (!std::isfinite(z)) throw DomainError("mittag_leffler: non-finite argument");
  if (z > 0.0) {
    std::ostringstream os;
    os << "mittag_leffler: positive argument z = " << z << " is not supported";
    throw DomainError(os.str());
  }
}

template <class T>
T ml_taylor_sum(MlParams p, double z, T* max_term) {
  T acc = 0, comp = 0, zk = 1;
  T prev = std::numeric_limits<T>::infinity();
  T biggest = 0;
  for (int k = 0; k < 20000; ++k) {
    const T term = zk / std::tgamma(static_cast<T>(p.alpha) * k + static_cast<T>(p.beta));
    const T y = term - comp;
    const T s = acc + y;
    comp = (s - acc) - y;
    acc = s;
    const T mag = std::fabs(term);
    biggest = std::max(biggest, mag);
    if (k > 2 && mag < prev && mag <= std::numeric_limits<T>::epsilon() / 8 * std::fabs(acc)) break;
    prev = mag;
    zk *= z;
  }
  if (max_term) *max_term = biggest;
  return acc;
}

// Small alpha: terms grow to ~1e4 times the sum, redo in extended precision.
double ml_taylor(MlParams p, double z) {
  double biggest = 0.0;
  const double sum = ml_taylor_sum<double>(p, z, &biggest);
  if (biggest <= 1e3 * std::abs(sum)) return sum;
  return static_cast<double>(ml_taylor_sum<long double>(p, z, nullptr));
}

double ml_asymptotic(MlParams p, double z) {
  // E(z) ~ -sum_{k>=1} z^{-k} / Gamma(beta - alpha k); terms at the poles vanish.
  const double x = -z;
  const double log_x = std::log(x);
  const double log_pi = std::log(kPi);
  KahanSum acc;
  double prev_envelope = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 5000; ++k) {
    const double arg = p.beta - p.alpha * k;
    // Envelope of |term| without the oscillating sin(pi arg) factor.
    const double envelope =
        (arg < 1.0 ? std::lgamma(1.0 - arg) - log_pi : -std::lgamma(arg)) - k * log_x;
    if (envelope > prev_envelope) break;
    prev_envelope = envelope;
    const auto [lg, sign] = log_reciprocal_gamma(arg);
    if (sign != 0) {
      const double zsign = (k % 2 == 0) ? 1.0 : -1.0;
      acc.add(-zsign * sign * std::exp(lg - k * log_x));
    }
    if (acc.sum != 0.0 && std::exp(envelope) <= 1e-17 * std::abs(acc.sum)) break;
  }
  return acc.sum;
}

double ml_integral_fractional(MlParams p, double x) {
  // Hankel contour collapsed onto the branch cut, with u = r^alpha:
  // E(-x) = 1/(pi alpha) int_0^inf exp(-u^{1/alpha}) u^{(1-beta)/alpha}
  //         [u sin(beta pi) + x sin((beta - alpha) pi)] / (u^2 + 2 x u cos(alpha pi) + x^2) du
  // valid for 0 < alpha < 1 and beta < 1 + alpha; used for beta <= 1 where u = 0 is regular.
  const double a = p.alpha;
  const double inv_a = 1.0 / a;
  const double power = (1.0 - p.beta) / a;
  const double s_beta = sin_pi(p.beta);
  const double s_diff = sin_pi(p.beta - a);
  const double c_alpha = std::cos(kPi * a);
  const double xs = x * sin_pi(a);
  const auto integrand = [&](double u) {
    if (u <= 0.0) {
      if (power < 0.0) return 0.0;  // integrable endpoint singularity, never sampled by GK
      return power == 0.0 ? s_diff / x : 0.0;
    }
    const double num = u * s_beta + x * s_diff;
    // u^2 + 2 x u cos(alpha pi) + x^2 without cancellation near alpha = 1
    const double shifted = u + x * c_alpha;
    const double den = shifted * shifted + xs * xs;
    return std::exp(-std::pow(u, inv_a)) * std::pow(u, power) * num / den;
  };
  const double upper = std::pow(700.0, a);
  std::vector<double> cuts;
  for (double m : {0.1, 1.0, 5.0, 20.0, 50.0, 100.0, 300.0}) cuts.push_back(std::pow(m, a));
  if (c_alpha < 0.0) {
    const double u0 = -x * c_alpha;
    const double w = x * std::sin(kPi * a);
    for (double s : {-10.0, -3.0, -1.0, 0.0, 1.0, 3.0, 10.0}) cuts.push_back(u0 + s * w);
  }
  const AdaptiveResult r = integrate_adaptive(integrand, 0.0, upper, 1e-15, 1e-300, cuts);
  return r.value / (kPi * a);
}

double ml_integral_unit_alpha(double beta, double z) {
  // alpha = 1, beta > 1: E(z) = 1/Gamma(beta) int_0^1 exp(z (1 - v^{1/(beta-1)})) dv
  const double e = 1.0 / (beta - 1.0);
  const auto integrand = [&](double v) { return std::exp(z * (1.0 - std::pow(v, e))); };
  const AdaptiveResult r = integrate_adaptive(integrand, 0.0, 1.0, 1e-15, 1e-300);
  return r.value * reciprocal_gamma(beta);
}

double ml_middle(MlParams p, double z) {
  const double x = -z;
  if (p.alpha < 1.0) {
    if (p.beta <= 1.0) return ml_integral_fractional(p, x);
    // E_{a,b}(z) = (E_{a,b-a}(z) - 1/Gamma(b-a)) / z
    const MlParams lower{p.alpha, p.beta - p.alpha};
    return (ml_middle(lower, z) - reciprocal_gamma(lower.beta)) / z;
  }
  if (p.beta > 1.0) return ml_integral_unit_alpha(p.beta, z);
  // beta < 1: E_{1,b}(z) = z E_{1,b+1}(z) + 1/Gamma(b)
  return z * ml_middle({1.0, p.beta + 1.0}, z) + reciprocal_gamma(p.beta);
}

}  // namespace

const char* to_string(MlRegion region) {
  switch (region) {
    case MlRegion::closed_form: return "closed_form";
    case MlRegion::taylor: return "taylor";
    case MlRegion::integral: return "integral";
    case MlRegion::asymptotic: return "asymptotic";
  }
  return "unknown";
}

std::size_t MlRegionStats::total() const {
  std::size_t n = 0;
  for (auto c : counts) n += c;
  return n;
}

MlRegionStats& MlRegionStats::operator+=(const MlRegionStats& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  return *this;
}

double sin_pi(double x) {
  if (is_integer(x)) return 0.0;
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double gamma(double x) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    std::ostringstream os;
    os << "gamma: argument " << x << " must be finite and positive";
    throw DomainError(os.str());
  }
  if (x > kGammaOverflow) return std::numeric_limits<double>::infinity();
  if (is_integer(x)) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    return f;
  }
  return std::tgamma(x);
}

double reciprocal_gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("reciprocal_gamma: non-finite argument");
  if (x > 0.0) {
    if (x > kGammaOverflow) return std::exp(-std::lgamma(x));
    return 1.0 / gamma(x);
  }
  if (is_integer(x)) return 0.0;
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  const double g = 1.0 - x;
  if (g > kGammaOverflow) {
    const auto [lg, sign] = log_reciprocal_gamma(x);
    return sign * std::exp(lg);
  }
  return sin_pi(x) * gamma(g) / kPi;
}

double ml_taylor_radius(double alpha) { return 1.0 + 2.0 * alpha; }

double ml_asymptotic_radius(double alpha) { return std::max(10.0, std::pow(10.0, 2.0 * alpha)); }

MlValue mittag_leffler_eval(MlParams p, double z) {
  validate(p, z);
  if (z == 0.0) return {reciprocal_gamma(p.beta), MlRegion::closed_form};
  if (p.alpha == 1.0 && p.beta == 1.0) return {std::exp(z), MlRegion::closed_form};
  const double x = -z;
  if (x <= ml_taylor_radius(p.alpha)) return {ml_taylor(p, z), MlRegion::taylor};
  if (x >= ml_asymptotic_radius(p.alpha)) return {ml_asymptotic(p, z), MlRegion::asymptotic};
  return {ml_middle(p, z), MlRegion::integral};
}

}  // namespace fracfem
