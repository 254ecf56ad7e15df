#pragma once

#include <array>
#include <cstddef>

namespace fracfem {

/// Parameters of the two-parameter Mittag-Leffler function E_{alpha,beta}.
struct MlParams {
  double alpha = 1.0;  ///< in (0, 1]
  double beta = 1.0;   ///< > 0
};

/// Which approximation produced a Mittag-Leffler value.
enum class MlRegion : std::size_t { closed_form = 0, taylor, integral, asymptotic };

inline constexpr std::size_t kMlRegionCount = 4;

const char* to_string(MlRegion region);

struct MlValue {
  double value;
  MlRegion region;
};

/// Tally of evaluation regions; filled by callers that want kernel statistics.
struct MlRegionStats {
  std::array<std::size_t, kMlRegionCount> counts{};

  void record(MlRegion r) { ++counts[static_cast<std::size_t>(r)]; }
  std::size_t total() const;
  MlRegionStats& operator+=(const MlRegionStats& other);
};

/// Gamma function for x > 0. Exact for small positive integers.
double gamma(double x);

/// 1/Gamma(x) for any finite real x; zero at the poles 0, -1, -2, ...
double reciprocal_gamma(double x);

/// sin(pi x) with exact zeros at integers.
double sin_pi(double x);

/// E_{alpha,beta}(z) for z <= 0 together with the region used.
///
/// Regions on the negative real axis:
///   |z| <= 1 + 2 alpha                  Taylor series with compensated summation
///   |z| >= max(10, 10^(2 alpha))        asymptotic series truncated at the smallest term
///   otherwise                           real integral along the collapsed Hankel contour
/// alpha = beta = 1 is evaluated as exp(z).
MlValue mittag_leffler_eval(MlParams p, double z);

inline double mittag_leffler(MlParams p, double z) { return mittag_leffler_eval(p, z).value; }

/// Region thresholds, exposed for tests and diagnostics.
double ml_taylor_radius(double alpha);
double ml_asymptotic_radius(double alpha);

}  // namespace fracfem
