#include "fracfem/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fracfem/errors.hpp"

namespace fracfem {

namespace {

constexpr double kPi = std::numbers::pi;

void check_same_mesh(const EigenSystem& eig, std::span<const double> v, const char* what) {
  if (v.size() != eig.size()) {
    std::ostringstream os;
    os << what << ": vector of size " << v.size() << " does not match eigensystem of size " << eig.size();
    throw DimensionError(os.str());
  }
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/// Modified Gram-Schmidt in the M inner product, in ascending eigenvalue order.
void reorthonormalize(std::vector<NodalVector>& modes, const TriDiagMatrix& mass) {
  std::vector<NodalVector> m_modes;
  m_modes.reserve(modes.size());
  for (auto& phi : modes) {
    for (std::size_t k = 0; k < m_modes.size(); ++k) {
      double c = 0.0;
      for (std::size_t i = 0; i < phi.size(); ++i) c += phi[i] * m_modes[k][i];
      for (std::size_t i = 0; i < phi.size(); ++i) phi[i] -= c * modes[k][i];
    }
    const double nrm = std::sqrt(mass.form(phi, phi));
    if (!(nrm > 0.0)) throw NumericalInvariantError("reorthonormalize: mode collapsed to zero");
    for (double& x : phi) x /= nrm;
    m_modes.push_back(mass.apply(phi));
  }
}

void fix_sign(NodalVector& phi) {
  const auto it = std::max_element(phi.begin(), phi.end(),
                                   [](double a, double b) { return std::abs(a) < std::abs(b); });
  // Prefer the first entry when it is not negligible, so analytic and numerical modes agree.
  const double ref = std::abs(phi.front()) > 1e-8 * std::abs(*it) ? phi.front() : *it;
  if (ref < 0.0)
    for (double& x : phi) x = -x;
}

template <class Kernel>
NodalVector apply_diagonal(const EigenSystem& eig, std::span<const double> v, Kernel&& kernel) {
  const std::vector<double> c = eigen_coefficients(eig, v);
  std::vector<double> scaled(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) scaled[j] = kernel(eig.lambdas[j]) * c[j];
  return synthesize(eig, scaled);
}

}  // namespace

EigenSystem analytic_lumped_eigensystem(const Mesh1D& mesh, const CoefficientField& k) {
  if (!k.is_constant() || k.value() != 1.0)
    throw DomainError("analytic_lumped_eigensystem: closed form requires k = 1");
  EigenSystem eig;
  eig.mesh = mesh;
  eig.inner_product = MassKind::lumped;
  eig.stiffness = assemble_stiffness(mesh, k);
  eig.mass = assemble_lumped_mass(mesh);
  const int n = mesh.n_interior();
  const double h = mesh.h();
  eig.lambdas.resize(n);
  eig.modes.assign(n, NodalVector(n));
  // sqrt(2) sin(j pi x_k) has squared lumped norm h * 2 * (n_cells / 2) = 1.
  for (int j = 1; j <= n; ++j) {
    const double s = std::sin(0.5 * kPi * j * h);
    eig.lambdas[j - 1] = 4.0 / (h * h) * s * s;
    for (int i = 0; i < n; ++i) eig.modes[j - 1][i] = std::sqrt(2.0) * sin_pi(static_cast<double>(j) * (i + 1) / mesh.n_cells());
  }
  return eig;
}

std::vector<double> consistent_eigenvalues(const Mesh1D& mesh) {
  const int n = mesh.n_interior();
  const double h = mesh.h();
  std::vector<double> lam(n);
  for (int j = 1; j <= n; ++j) {
    const double c = std::cos(kPi * j * h);
    // 1 - cos = 2 sin^2 avoids cancellation for small j h
    const double s = std::sin(0.5 * kPi * j * h);
    lam[j - 1] = 6.0 / (h * h) * (2.0 * s * s) / (2.0 + c);
  }
  return lam;
}

EigenSystem solve_eigensystem(const Mesh1D& mesh, const TriDiagMatrix& stiffness, const TriDiagMatrix& mass,
                              MassKind kind) {
  const auto n = static_cast<Eigen::Index>(mesh.n_interior());
  if (stiffness.size() != static_cast<std::size_t>(n) || mass.size() != static_cast<std::size_t>(n)) {
    std::ostringstream os;
    os << "solve_eigensystem: K (" << stiffness.size() << ") and M (" << mass.size()
       << ") must match the mesh (" << n << ")";
    throw DimensionError(os.str());
  }
  if (n > 4096) throw DomainError("solve_eigensystem: dimension above 4096");

  // Cholesky M = L L^T; L is lower bidiagonal with diagonal ld and subdiagonal ls.
  Eigen::VectorXd ld(n);
  Eigen::VectorXd ls = Eigen::VectorXd::Zero(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i < n; ++i) {
    double d = mass.diag[i];
    if (i > 0) {
      ls[i - 1] = mass.off[i - 1] / ld[i - 1];
      d -= ls[i - 1] * ls[i - 1];
    }
    if (!(d > 0.0)) throw NumericalInvariantError("solve_eigensystem: mass matrix is not SPD");
    ld[i] = std::sqrt(d);
  }
  for (Eigen::Index i = 0; i < n; ++i)
    if (!(stiffness.diag[i] > 0.0)) throw NumericalInvariantError("solve_eigensystem: stiffness matrix is not SPD");

  Eigen::VectorXd evals;
  Eigen::MatrixXd y;
  if (mass.is_diagonal()) {
    Eigen::VectorXd d(n);
    Eigen::VectorXd e(std::max<Eigen::Index>(n - 1, 0));
    for (Eigen::Index i = 0; i < n; ++i) d[i] = stiffness.diag[i] / (ld[i] * ld[i]);
    for (Eigen::Index i = 0; i + 1 < n; ++i) e[i] = stiffness.off[i] / (ld[i] * ld[i + 1]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw NumericalInvariantError("solve_eigensystem: eigensolver failed");
    evals = es.eigenvalues();
    y = es.eigenvectors();
  } else {
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      l(i, i) = ld[i];
      k(i, i) = stiffness.diag[i];
      if (i + 1 < n) {
        l(i + 1, i) = ls[i];
        k(i, i + 1) = k(i + 1, i) = stiffness.off[i];
      }
    }
    const auto lt = l.triangularView<Eigen::Lower>();
    Eigen::MatrixXd x = lt.solve(k);                                   // L^{-1} K
    Eigen::MatrixXd c = lt.solve(x.transpose()).transpose();          // L^{-1} K L^{-T}
    c = 0.5 * (c + c.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c);
    if (es.info() != Eigen::Success) throw NumericalInvariantError("solve_eigensystem: eigensolver failed");
    evals = es.eigenvalues();
    y = es.eigenvectors();
  }

  EigenSystem eig;
  eig.mesh = mesh;
  eig.inner_product = kind;
  eig.stiffness = stiffness;
  eig.mass = mass;
  eig.lambdas.resize(n);
  eig.modes.assign(n, NodalVector(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    eig.lambdas[j] = evals[j];
    // phi = L^{-T} y: back substitution with the upper bidiagonal L^T.
    NodalVector& phi = eig.modes[j];
    for (Eigen::Index i = n; i-- > 0;) {
      double r = y(i, j);
      if (i + 1 < n) r -= ls[i] * phi[i + 1];
      phi[i] = r / ld[i];
    }
  }
  if (!(eig.lambdas.front() > 0.0)) throw NumericalInvariantError("solve_eigensystem: nonpositive eigenvalue");
  reorthonormalize(eig.modes, eig.mass);
  for (auto& phi : eig.modes) fix_sign(phi);
  return eig;
}

EigenSystem build_eigensystem(const Mesh1D& mesh, const CoefficientField& k, MassKind kind) {
  return solve_eigensystem(mesh, assemble_stiffness(mesh, k), assemble_mass(mesh, kind), kind);
}

std::vector<double> eigen_coefficients(const EigenSystem& eig, std::span<const double> v) {
  check_same_mesh(eig, v, "eigen_coefficients");
  const NodalVector mv = eig.mass.apply(v);
  std::vector<double> c(eig.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < mv.size(); ++i) s += eig.modes[j][i] * mv[i];
    c[j] = s;
  }
  return c;
}

NodalVector synthesize(const EigenSystem& eig, std::span<const double> coeffs) {
  check_same_mesh(eig, coeffs, "synthesize");
  NodalVector u(eig.size(), 0.0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const double c = coeffs[j];
    if (c == 0.0) continue;
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += c * eig.modes[j][i];
  }
  return u;
}

NodalVector homogeneous_solve(const EigenSystem& eig, std::span<const double> v, double alpha, double t,
                              MlRegionStats* stats) {
  if (!(t >= 0.0)) throw DomainError("homogeneous_solve: t must be nonnegative");
  check_same_mesh(eig, v, "homogeneous_solve");
  if (t == 0.0) return NodalVector(v.begin(), v.end());
  const double ta = std::pow(t, alpha);
  return apply_diagonal(eig, v, [&](double lambda) {
    const MlValue e = mittag_leffler_eval({alpha, 1.0}, -lambda * ta);
    if (stats) stats->record(e.region);
    return e.value;
  });
}

NodalVector bar_operator_apply(const EigenSystem& eig, std::span<const double> g, double alpha, double t,
                               MlRegionStats* stats) {
  if (!(t > 0.0)) throw DomainError("bar_operator_apply: t must be positive");
  check_same_mesh(eig, g, "bar_operator_apply");
  const double ta = std::pow(t, alpha);
  const double scale = std::pow(t, alpha - 1.0);
  return apply_diagonal(eig, g, [&](double lambda) {
    const MlValue e = mittag_leffler_eval({alpha, alpha}, -lambda * ta);
    if (stats) stats->record(e.region);
    return scale * e.value;
  });
}

double discrete_norm(const EigenSystem& eig, std::span<const double> psi, double p) {
  const std::vector<double> c = eigen_coefficients(eig, psi);
  double s = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) s += std::pow(eig.lambdas[j], p) * c[j] * c[j];
  return std::sqrt(s);
}

double max_relative_residual(const EigenSystem& eig) {
  double worst = 0.0;
  for (std::size_t j = 0; j < eig.size(); ++j) {
    const NodalVector kphi = eig.stiffness.apply(eig.modes[j]);
    const NodalVector mphi = eig.mass.apply(eig.modes[j]);
    NodalVector r(kphi.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = kphi[i] - eig.lambdas[j] * mphi[i];
    worst = std::max(worst, norm2(r) / (eig.lambdas[j] * norm2(mphi)));
  }
  return worst;
}

double max_orthonormality_defect(const EigenSystem& eig) {
  double worst = 0.0;
  for (std::size_t j = 0; j < eig.size(); ++j) {
    const NodalVector mphi = eig.mass.apply(eig.modes[j]);
    for (std::size_t i = 0; i <= j; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < mphi.size(); ++k) s += eig.modes[i][k] * mphi[k];
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace fracfem
