#include <doctest.h>

#include <cmath>
#include <cfloat>
#include <limits>
#include <vector>

#include "fracfem/errors.hpp"
#include "fracfem/special_functions.hpp"
#include "fracfem/timestep_l1.hpp"
#include "ml_reference_values.hpp"

using namespace fracfem;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const std::vector<double> kAlphas{0.05, 0.1, 0.25, 0.3, 0.5, 0.7, 0.75, 0.9, 0.95, 0.999, 1.0};

}  // namespace

TEST_SUITE("special_functions") {

TEST_CASE("gamma known values") {
  CHECK(fracfem::gamma(1.0) == 1.0);
  CHECK(fracfem::gamma(5.0) == 24.0);
  CHECK(rel(fracfem::gamma(0.5), std::sqrt(M_PI)) <= 1e-14);
  CHECK(rel(fracfem::gamma(1.5), 0.88622692545275801365) <= 1e-14);
  CHECK(rel(fracfem::gamma(2.5), 1.3293403881791370205) <= 1e-14);
  CHECK(rel(fracfem::gamma(0.1), 9.5135076986687312858) <= 1e-14);
  CHECK(rel(fracfem::gamma(10.3), 716430.68906237640663) <= 1e-14);
}

TEST_CASE("gamma rejects invalid input") {
  CHECK_THROWS_AS(fracfem::gamma(0.0), DomainError);
  CHECK_THROWS_AS(fracfem::gamma(-1.5), DomainError);
  CHECK_THROWS_AS(fracfem::gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(fracfem::gamma(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("reciprocal gamma vanishes at the poles and obeys reflection") {
  for (int k = 0; k <= 6; ++k) CHECK(reciprocal_gamma(-k) == 0.0);
  for (double x : {-0.5, -1.3, -2.7, -6.1}) {
    const double expected = std::sin(M_PI * x) * fracfem::gamma(1.0 - x) / M_PI;
    CHECK(std::abs(reciprocal_gamma(x) - expected) <= 1e-14 * std::abs(expected) + 1e-300);
  }
}

TEST_CASE("mittag_leffler examples") {
  CHECK(rel(mittag_leffler({1.0, 1.0}, -2.0), std::exp(-2.0)) <= 1e-15);
  CHECK(mittag_leffler({0.5, 1.0}, 0.0) == 1.0);
  CHECK(rel(mittag_leffler({0.5, 1.0}, -1.0), std::exp(1.0) * std::erfc(1.0)) <= 1e-12);
  CHECK(rel(mittag_leffler({0.5, 1.0}, -1.0), 0.42758357615580700441) <= 1e-12);
}

TEST_CASE("mittag_leffler rejects unsupported arguments") {
  CHECK_THROWS_AS(mittag_leffler({0.5, 1.0}, 0.1), DomainError);
  CHECK_THROWS_AS(mittag_leffler({0.0, 1.0}, -1.0), DomainError);
  CHECK_THROWS_AS(mittag_leffler({1.2, 1.0}, -1.0), DomainError);
  CHECK_THROWS_AS(mittag_leffler({0.5, 0.0}, -1.0), DomainError);
  CHECK_THROWS_AS(mittag_leffler({0.5, 1.0}, std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("mittag_leffler against extended precision oracle") {
  double worst = 0.0;
  for (const auto& r : test::kMlReference) {
    const double v = mittag_leffler({r.alpha, r.beta}, r.z);
    const double e = rel(v, r.value);
    worst = std::max(worst, e);
    INFO("alpha=" << r.alpha << " beta=" << r.beta << " z=" << r.z << " got " << v << " want " << r.value);
    CHECK(e <= 1e-12);
  }
  MESSAGE("worst relative error " << worst);
}

TEST_CASE("E_{1,1} equals exp on [-50, 0]") {
  for (int i = 0; i <= 500; ++i) {
    const double z = -50.0 * i / 500.0;
    CHECK(rel(mittag_leffler({1.0, 1.0}, z), std::exp(z)) <= 1e-10);
  }
}

TEST_CASE("alpha close to 1") {
  CHECK(rel(mittag_leffler({0.9999, 1.0}, -0.5), 0.60652610988754118306) <= 1e-12);
  CHECK(rel(mittag_leffler({0.9999, 1.0}, -2.0), 0.13536415139111667915) <= 1e-12);
  CHECK(rel(mittag_leffler({0.9999, 1.0}, -8.0), 3.5312192614565895288e-4) <= 1e-12);
}

TEST_CASE("beta just below 1 + alpha") {
  CHECK(rel(mittag_leffler({0.999, 1.998}, -3.4), 0.284138589869971108) <= 1e-12);
  CHECK(rel(mittag_leffler({0.999, 1.998}, -10.0), 0.099935934193833716476) <= 1e-12);
  CHECK(rel(mittag_leffler({0.7, 1.65}, -5.0), 0.18055309936259281833) <= 1e-12);
  CHECK(rel(mittag_leffler({0.3, 1.25}, -2.5), 0.29488406199422450707) <= 1e-12);
}

TEST_CASE("normalization at zero") {
  for (double a : kAlphas) {
    CHECK(mittag_leffler({a, 1.0}, 0.0) == 1.0);
    CHECK(rel(mittag_leffler({a, a}, 0.0), 1.0 / fracfem::gamma(a)) <= 1e-15);
  }
}

TEST_CASE("decay bound with C fitted at zero") {
  for (double a : kAlphas) {
    const double c = mittag_leffler({a, 1.0}, 0.0);
    CHECK(c <= 10.0);
    for (double x = 1e-3; x <= 1e8; x *= 1.2) {
      const double v = mittag_leffler({a, 1.0}, -x);
      INFO("alpha=" << a << " x=" << x);
      CHECK(std::abs(v) <= c / (1.0 + x) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("monotone decay on a geometric grid") {
  for (double a : kAlphas) {
    double prev = mittag_leffler({a, 1.0}, 0.0);
    for (double x = 1e-4; x <= 1e6; x *= 1.05) {
      const double v = mittag_leffler({a, 1.0}, -x);
      INFO("alpha=" << a << " x=" << x);
      CHECK(v <= prev * (1.0 + 1e-14));
      CHECK(v >= 0.0);
      prev = v;
    }
  }
}

TEST_CASE("two-term recurrence") {
  double worst = 0.0;
  for (double a : kAlphas) {
    for (double beta : {1.0, a}) {
      for (double z = -1e-3; z >= -100.0; z *= 1.3) {
        const double lhs = mittag_leffler({a, beta}, z);
        const double shifted = z * mittag_leffler({a, a + beta}, z);
        const double g = 1.0 / fracfem::gamma(beta);
        const double rhs = shifted + g;
        // Rounding floor of adding two O(1) terms whose sum is far smaller.
        const double floor = 16.0 * DBL_EPSILON * (std::abs(shifted) + std::abs(g));
        const double e = std::abs(lhs - rhs) / (std::abs(lhs) + floor / 1e-10);
        worst = std::max(worst, e);
        INFO("alpha=" << a << " beta=" << beta << " z=" << z);
        CHECK(e <= 1e-10);
      }
    }
  }
  MESSAGE("worst recurrence residual " << worst);
}

TEST_CASE("region boundaries are continuous") {
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double beta : {1.0, a}) {
      for (double r : {ml_taylor_radius(a), ml_asymptotic_radius(a)}) {
        const double below = mittag_leffler({a, beta}, -r * (1.0 - 1e-15));
        const double above = mittag_leffler({a, beta}, -r * (1.0 + 1e-15));
        INFO("alpha=" << a << " beta=" << beta << " r=" << r);
        CHECK(rel(below, above) <= 2e-12);
      }
    }
  }
}

TEST_CASE("region selection") {
  CHECK(mittag_leffler_eval({1.0, 1.0}, -3.0).region == MlRegion::closed_form);
  CHECK(mittag_leffler_eval({0.5, 1.0}, -0.5).region == MlRegion::taylor);
  CHECK(mittag_leffler_eval({0.5, 1.0}, -5.0).region == MlRegion::integral);
  CHECK(mittag_leffler_eval({0.5, 1.0}, -50.0).region == MlRegion::asymptotic);
  MlRegionStats s;
  s.record(MlRegion::taylor);
  s.record(MlRegion::taylor);
  s.record(MlRegion::integral);
  CHECK(s.total() == 3);
}

TEST_CASE("L1 Caputo of E(-t^alpha) reproduces -E(-t^alpha)") {
  const double alpha = 0.5, tau = 1e-5;
  const int n = 100000;
  std::vector<double> hist(n + 1);
  for (int k = 0; k <= n; ++k) hist[k] = mittag_leffler({alpha, 1.0}, -std::pow(k * tau, alpha));
  const double d = discrete_caputo(hist, alpha, tau);
  CHECK(rel(d, -hist.back()) <= 1e-2);
}

}
