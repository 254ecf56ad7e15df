#include "fracfem/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "fracfem/errors.hpp"
#include "fracfem/quadrature.hpp"
#include "fracfem/spectral.hpp"
#include "fracfem/timestep_l1.hpp"

namespace fracfem {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// sin(pi * num / den) with the argument reduced exactly.
double sin_pi_rational(long num, long den) {
  const long r = ((num % (2 * den)) + 2 * den) % (2 * den);
  return sin_pi(static_cast<double>(r) / static_cast<double>(den));
}

double cos_pi_rational(long num, long den) { return sin_pi_rational(2 * num + den, 2 * den); }

/// sum_{n > N} n^{-q}, midpoint form of the integral test.
double power_tail(double big_n, double q) { return std::pow(big_n + 0.5, 1.0 - q) / (q - 1.0); }

double check_norm(double norm) {
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DomainError("error normalization must be positive");
  return norm;
}

}  // namespace

ErrorNorms series_errors(const Mesh1D& mesh, std::span<const double> u_h, const SeriesSnapshot& exact, double norm,
                         const ErrorOptions& opt) {
  validate_mesh_vector(mesh, u_h, "series_errors");
  check_norm(norm);
  const long nc = mesh.n_cells();
  const long n_modes = exact.n_modes();
  const long low = std::min(n_modes, std::max(1L, nc / 2));
  const std::vector<double> slope = element_slopes(mesh, u_h);
  const std::vector<double>& a = exact.coeffs;

  // Low modes by Gauss quadrature.
  long double l2sq = 0.0L;
  long double h1sq = 0.0L;
  const QuadratureRule& g = gauss_legendre(opt.gauss_order);
  for (long e = 0; e < nc; ++e) {
    const double xl = mesh.node(static_cast<int>(e));
    const double ul = e == 0 ? 0.0 : u_h[e - 1];
    const double ur = e + 1 == nc ? 0.0 : u_h[e];
    for (std::size_t q = 0; q < g.size(); ++q) {
      const double s = 0.5 * (1.0 + g.nodes[q]);
      const double x = xl + s * mesh.h();
      double v = 0.0;
      double dv = 0.0;
      for (long n = 1; n <= low; ++n) {
        const double arg = kPi * static_cast<double>(n) * x;
        v += a[n - 1] * std::sin(arg);
        dv += a[n - 1] * kPi * static_cast<double>(n) * std::cos(arg);
      }
      const double w = 0.5 * mesh.h() * g.weights[q];
      const double ev = v - ((1.0 - s) * ul + s * ur);
      const double ed = dv - slope[e];
      l2sq += w * ev * ev;
      h1sq += w * ed * ed;
    }
  }

  // (sin n pi x, u_h) = p[n mod 2nc] / n^2 and (n pi cos n pi x, u_h') = q[n mod 2nc].
  const long period = 2 * nc;
  std::vector<double> p(period, 0.0);
  std::vector<double> qv(period, 0.0);
  for (long m = 0; m < period; ++m) {
    double sp = 0.0;
    double sq = 0.0;
    for (long k = 1; k < nc; ++k) {
      const double sn = sin_pi_rational(m * k, nc);
      sp += u_h[k - 1] * sn;
      sq += sn * (slope[k - 1] - slope[k]);
    }
    const double half = sin_pi_rational(m, 2 * nc);  // sin(m pi h / 2)
    p[m] = sp * 4.0 * half * half / (kPi * kPi * mesh.h());
    qv[m] = sq;
  }
  for (long n = low + 1; n <= n_modes; ++n) {
    const double an = a[n - 1];
    if (an == 0.0) continue;
    const double dn = static_cast<double>(n);
    l2sq += 0.5L * an * an - 2.0L * an * p[n % period] / (dn * dn);
    h1sq += 0.5L * (dn * kPi * an) * (dn * kPi * an) - 2.0L * an * qv[n % period];
  }

  // Beyond the truncation: a_n = kappa chat(n) n^{-d-2} with chat(n) = c_n n^d periodic.
  if (exact.remainder_kappa > 0.0) {
    const CoefficientEnvelope env = coefficient_envelope(exact.kind);
    const long tper = std::lcm(4L, period);
    double m_cc = 0.0, m_cp = 0.0, m_cq = 0.0;
    for (long n = n_modes + 1; n <= n_modes + tper; ++n) {
      const double chat = sine_coefficient(exact.kind, n) * std::pow(static_cast<double>(n), env.decay);
      m_cc += chat * chat;
      m_cp += chat * p[n % period];
      m_cq += chat * qv[n % period];
    }
    m_cc /= tper;
    m_cp /= tper;
    m_cq /= tper;
    const double kap = exact.remainder_kappa;
    const double big_n = static_cast<double>(n_modes);
    const int d = env.decay;
    l2sq += 0.5 * kap * kap * m_cc * power_tail(big_n, 2 * d + 4) - 2.0 * kap * m_cp * power_tail(big_n, d + 4);
    h1sq += 0.5 * kPi * kPi * kap * kap * m_cc * power_tail(big_n, 2 * d + 2) -
            2.0 * kap * m_cq * power_tail(big_n, d + 2);
  }

  ErrorNorms r;
  r.l2 = std::sqrt(std::max(0.0L, l2sq)) / norm;
  r.h1 = std::sqrt(std::max(0.0L, h1sq)) / norm;

  if (opt.recovered_gradient) {
    // u'(m_e) at midpoints m_e = (2e + 1) / (2 nc); cos(n pi m_e) has period 4 nc in n.
    const long cper = 4 * nc;
    std::vector<double> bucket(cper, 0.0);
    for (long n = 1; n <= n_modes; ++n) bucket[n % cper] += static_cast<double>(n) * kPi * a[n - 1];
    long double s = 0.0L;
    for (long e = 0; e < nc; ++e) {
      double du = 0.0;
      for (long m = 0; m < cper; ++m)
        if (bucket[m] != 0.0) du += bucket[m] * cos_pi_rational(m * (2 * e + 1), 2 * nc);
      const double diff = du - slope[e];
      s += mesh.h() * diff * diff;
    }
    r.gh = std::sqrt(static_cast<double>(s)) / norm;
  }
  return r;
}

double l2_error(const Mesh1D& mesh, std::span<const double> u_h, const FourierSeriesSolution& sol, double t) {
  return series_errors(mesh, u_h, sol.snapshot(t), initial_l2_norm(sol.data().kind)).l2;
}

double h1_error(const Mesh1D& mesh, std::span<const double> u_h, const FourierSeriesSolution& sol, double t) {
  return series_errors(mesh, u_h, sol.snapshot(t), initial_l2_norm(sol.data().kind)).h1;
}

double recovered_gradient_error(const Mesh1D& mesh, std::span<const double> u_h, const FourierSeriesSolution& sol,
                                double t) {
  ErrorOptions opt;
  opt.recovered_gradient = true;
  return *series_errors(mesh, u_h, sol.snapshot(t), initial_l2_norm(sol.data().kind), opt).gh;
}

ErrorNorms fe_reference_errors(const Mesh1D& mesh, std::span<const double> u_h, const Mesh1D& fine,
                               std::span<const double> u_ref, double norm) {
  validate_mesh_vector(mesh, u_h, "fe_reference_errors");
  validate_mesh_vector(fine, u_ref, "fe_reference_errors");
  check_norm(norm);
  if (fine.n_cells() % mesh.n_cells() != 0) {
    std::ostringstream os;
    os << "fe_reference_errors: mesh with " << fine.n_cells() << " cells does not refine " << mesh.n_cells();
    throw DimensionError(os.str());
  }
  const int r = fine.n_cells() / mesh.n_cells();
  const auto nodal = [](std::span<const double> u, int k, int nc) { return (k <= 0 || k >= nc) ? 0.0 : u[k - 1]; };
  long double l2sq = 0.0L;
  long double h1sq = 0.0L;
  for (int k = 0; k < fine.n_cells(); ++k) {
    // Coarse values at the fine nodes k and k + 1 by linear interpolation.
    const auto coarse_at = [&](int j) {
      const int e = std::min(j / r, mesh.n_cells() - 1);
      const double s = static_cast<double>(j - e * r) / r;
      return (1.0 - s) * nodal(u_h, e, mesh.n_cells()) + s * nodal(u_h, e + 1, mesh.n_cells());
    };
    const double d0 = nodal(u_ref, k, fine.n_cells()) - coarse_at(k);
    const double d1 = nodal(u_ref, k + 1, fine.n_cells()) - coarse_at(k + 1);
    const double hf = fine.h();
    l2sq += hf * (d0 * d0 + d0 * d1 + d1 * d1) / 3.0;
    h1sq += (d1 - d0) * (d1 - d0) / hf;
  }
  return {std::sqrt(static_cast<double>(l2sq)) / norm, std::sqrt(static_cast<double>(h1sq)) / norm, std::nullopt};
}

std::vector<double> error_ratios(std::span<const double> errors) {
  std::vector<double> r;
  for (double e : errors)
    if (!(e > 0.0) || !std::isfinite(e)) throw DomainError("error_ratios: errors must be positive and finite");
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) r.push_back(errors[i] / errors[i + 1]);
  return r;
}

std::vector<double> observed_rate(std::span<const double> errors) {
  if (errors.size() < 2) throw DomainError("observed_rate: need at least two errors");
  std::vector<double> r = error_ratios(errors);
  for (double& v : r) v = std::log2(v);
  return r;
}

double mean_ratio(std::span<const double> ratios) {
  if (ratios.empty()) return kNaN;
  double s = 0.0;
  for (double r : ratios) s += std::log(r);
  return std::exp(s / static_cast<double>(ratios.size()));
}

double ConvergenceTable::l2_ratio() const { return mean_ratio(l2_ratios); }
double ConvergenceTable::h1_ratio() const { return mean_ratio(h1_ratios); }
double ConvergenceTable::gh_ratio() const { return mean_ratio(gh_ratios); }

void compute_ratios(ConvergenceTable& table) {
  std::vector<double> l2, h1, gh;
  bool all_gh = !table.rows.empty();
  for (const auto& row : table.rows) {
    l2.push_back(row.l2_error);
    h1.push_back(row.h1_error);
    if (row.gh_error) gh.push_back(*row.gh_error);
    else all_gh = false;
  }
  table.l2_ratios = error_ratios(l2);
  table.h1_ratios = error_ratios(h1);
  table.gh_ratios = all_gh ? error_ratios(gh) : std::vector<double>{};
}

const char* to_string(Method m) {
  switch (m) {
    case Method::galerkin: return "galerkin";
    case Method::lumped: return "lumped";
    case Method::l1: return "l1";
  }
  return "?";
}

const char* to_string(Projection p) {
  switch (p) {
    case Projection::ritz: return "ritz";
    case Projection::l2: return "l2";
    case Projection::interpolation: return "interpolation";
    case Projection::dirac: return "dirac";
  }
  return "?";
}

Method method_from_string(std::string_view s) {
  if (s == "galerkin") return Method::galerkin;
  if (s == "lumped") return Method::lumped;
  if (s == "l1") return Method::l1;
  throw DomainError("unknown method '" + std::string(s) + "' (expected galerkin, lumped or l1)");
}

Projection projection_from_string(std::string_view s) {
  if (s == "ritz") return Projection::ritz;
  if (s == "l2") return Projection::l2;
  if (s == "interpolation") return Projection::interpolation;
  if (s == "dirac") return Projection::dirac;
  throw DomainError("unknown projection '" + std::string(s) + "' (expected ritz, l2, interpolation or dirac)");
}

Projection Example::default_projection() const {
  if (data == InitialDataKind::dirac_d) return Projection::dirac;
  if (InitialData{data}.in_h10()) return Projection::ritz;
  if (data == InitialDataKind::one_c1 || data == InitialDataKind::linear_c2) return Projection::interpolation;
  return Projection::l2;
}

Example example_from_string(std::string_view name) {
  if (name == "e") return {"e", InitialDataKind::one_c1, CoefficientField::sinusoidal()};
  return {std::string(name), initial_data_from_string(name), CoefficientField::constant(1.0)};
}

NodalVector initial_projection(const Mesh1D& mesh, const Example& ex, Projection projection) {
  const bool dirac = ex.data == InitialDataKind::dirac_d;
  if (dirac != (projection == Projection::dirac)) {
    std::ostringstream os;
    os << "projection '" << to_string(projection) << "' is incompatible with data '" << ex.name << "'";
    throw DomainError(os.str());
  }
  switch (projection) {
    // P_h delta: column of the consistent mass inverse, for either method.
    case Projection::dirac: return dirac_load(mesh, 0.5, MassKind::consistent);
    case Projection::ritz: return ritz_project(mesh, ex.k, initial_energy_load(mesh, ex.k, ex.data));
    case Projection::l2: return l2_project(mesh, initial_load_vector(mesh, ex.data));
    case Projection::interpolation: {
      NodalVector v(mesh.n_interior());
      for (int i = 0; i < mesh.n_interior(); ++i) v[i] = initial_value(ex.data, mesh.interior_node(i));
      return v;
    }
  }
  return {};
}

NodalVector discrete_solution(const Mesh1D& mesh, const Example& ex, Method method, Projection projection,
                              double alpha, double t, int l1_steps, TableDiagnostics* diag) {
  const MassKind mass = method == Method::galerkin ? MassKind::consistent : MassKind::lumped;
  const NodalVector v_h = initial_projection(mesh, ex, projection);
  if (method == Method::l1) {
    if (l1_steps < 1) throw DomainError("discrete_solution: l1_steps must be positive");
    const L1Trajectory traj = l1_solve(assemble_stiffness(mesh, ex.k), assemble_mass(mesh, mass), alpha,
                                       t / l1_steps, v_h, l1_steps);
    return traj.final_state();
  }
  const bool closed_form = method == Method::lumped && ex.k.is_constant() && ex.k.value() == 1.0;
  const EigenSystem eig = closed_form ? analytic_lumped_eigensystem(mesh) : build_eigensystem(mesh, ex.k, mass);
  if (diag) {
    diag->max_eigen_residual = std::max(diag->max_eigen_residual, max_relative_residual(eig));
    diag->max_orthonormality_defect = std::max(diag->max_orthonormality_defect, max_orthonormality_defect(eig));
    if (method == Method::galerkin && ex.k.is_constant()) {
      const EigenSystem lumped = analytic_lumped_eigensystem(mesh);
      for (std::size_t j = 0; j < eig.size(); ++j)
        diag->max_eigenvalue_gap = std::max(
            diag->max_eigenvalue_gap, std::abs(eig.lambdas[j] - lumped.lambdas[j]) / eig.lambdas[j]);
    }
  }
  return homogeneous_solve(eig, v_h, alpha, t, diag ? &diag->regions : nullptr);
}

ConvergenceTable build_table(const TableRequest& req, const FineReference* reference, TableDiagnostics* diag) {
  const Example ex = example_from_string(req.example);
  const Projection projection = req.projection.value_or(ex.default_projection());
  if (projection == Projection::ritz && !InitialData{ex.data}.in_h10())
    throw DomainError("build_table: the Ritz projection needs H^1_0 data; example '" + ex.name + "' is not");
  if (!ex.has_series() && reference == nullptr)
    throw DomainError("build_table: example '" + ex.name + "' needs a fine reference solution");
  if (req.levels.empty()) throw DomainError("build_table: no levels");

  ConvergenceTable table;
  table.example = ex.name;
  table.method = to_string(req.method);
  table.projection = to_string(projection);
  table.alpha = req.alpha;
  table.t = req.t;
  table.normalized = ex.data != InitialDataKind::dirac_d;

  std::optional<SeriesSnapshot> snap;
  if (ex.has_series()) {
    const FourierSeriesSolution sol(InitialData{ex.data}, req.alpha, req.tail_tol);
    snap = sol.snapshot(req.t);
    if (diag) {
      diag->series_modes = snap->n_modes();
      diag->regions += snap->regions;
    }
  }
  const double norm = initial_l2_norm(ex.data);
  for (int level : req.levels) {
    if (level < 1 || level > 12) throw DomainError("build_table: level outside [1, 12]");
    const Mesh1D mesh(1 << level);
    const NodalVector u_h =
        discrete_solution(mesh, ex, req.method, projection, req.alpha, req.t, req.l1_steps, diag);
    ErrorNorms e;
    if (snap) {
      ErrorOptions opt;
      opt.recovered_gradient = req.recovered_gradient;
      e = series_errors(mesh, u_h, *snap, norm, opt);
    } else {
      e = fe_reference_errors(mesh, u_h, reference->mesh, reference->values, norm);
    }
    table.rows.push_back({mesh.h(), req.alpha, req.t, e.l2, e.h1, e.gh});
  }
  compute_ratios(table);
  return table;
}

}  // namespace fracfem
