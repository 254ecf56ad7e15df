#include "fracfem/fem_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fracfem/errors.hpp"
#include "fracfem/quadrature.hpp"

namespace fracfem {

namespace {

std::string describe_size(std::size_t got, std::size_t want) {
  std::ostringstream os;
  os << "size " << got << ", expected " << want;
  return os.str();
}

/// Sub-intervals of [a, b] cut at the breakpoints strictly inside it.
std::vector<double> split_points(double a, double b, std::span<const double> breakpoints) {
  std::vector<double> pts{a};
  for (double p : breakpoints)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

Mesh1D::Mesh1D(int n_cells) : n_cells_(n_cells), h_(1.0 / n_cells) {
  if (n_cells < 2) {
    std::ostringstream os;
    os << "Mesh1D: n_cells = " << n_cells << " must be at least 2";
    throw DomainError(os.str());
  }
}

TriDiagMatrix::TriDiagMatrix(std::vector<double> d, std::vector<double> o)
    : diag(std::move(d)), off(std::move(o)) {
  if (diag.empty() ? !off.empty() : off.size() + 1 != diag.size())
    throw DimensionError("TriDiagMatrix: off-diagonal " + describe_size(off.size(), diag.size() - 1));
}

bool TriDiagMatrix::is_diagonal() const {
  return std::all_of(off.begin(), off.end(), [](double v) { return v == 0.0; });
}

NodalVector TriDiagMatrix::apply(std::span<const double> x) const {
  const std::size_t n = size();
  if (x.size() != n) throw DimensionError("TriDiagMatrix::apply: " + describe_size(x.size(), n));
  NodalVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag[i] * x[i];
    if (i > 0) s += off[i - 1] * x[i - 1];
    if (i + 1 < n) s += off[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

double TriDiagMatrix::form(std::span<const double> x, std::span<const double> y) const {
  const NodalVector ay = apply(y);
  if (x.size() != ay.size()) throw DimensionError("TriDiagMatrix::form: " + describe_size(x.size(), ay.size()));
  double s = 0.0;
  for (std::size_t i = 0; i < ay.size(); ++i) s += x[i] * ay[i];
  return s;
}

TriDiagMatrix TriDiagMatrix::scaled(double s) const {
  TriDiagMatrix r = *this;
  for (double& v : r.diag) v *= s;
  for (double& v : r.off) v *= s;
  return r;
}

TriDiagMatrix TriDiagMatrix::plus(const TriDiagMatrix& other, double s) const {
  if (other.size() != size()) throw DimensionError("TriDiagMatrix::plus: " + describe_size(other.size(), size()));
  TriDiagMatrix r = *this;
  for (std::size_t i = 0; i < r.diag.size(); ++i) r.diag[i] += s * other.diag[i];
  for (std::size_t i = 0; i < r.off.size(); ++i) r.off[i] += s * other.off[i];
  return r;
}

TriDiagFactor::TriDiagFactor(const TriDiagMatrix& a) : d_(a.size()), l_(a.off.size()) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    double d = a.diag[i];
    if (i > 0) {
      l_[i - 1] = a.off[i - 1] / d_[i - 1];
      d -= l_[i - 1] * a.off[i - 1];
    }
    if (!(d > 0.0)) {
      std::ostringstream os;
      os << "TriDiagFactor: nonpositive pivot " << d << " at row " << i << "; matrix is not SPD";
      throw NumericalInvariantError(os.str());
    }
    d_[i] = d;
  }
}

NodalVector TriDiagFactor::solve(std::span<const double> b) const {
  const std::size_t n = d_.size();
  if (b.size() != n) throw DimensionError("TriDiagFactor::solve: " + describe_size(b.size(), n));
  NodalVector x(b.begin(), b.end());
  for (std::size_t i = 1; i < n; ++i) x[i] -= l_[i - 1] * x[i - 1];
  for (std::size_t i = 0; i < n; ++i) x[i] /= d_[i];
  for (std::size_t i = n; i-- > 1;) x[i - 1] -= l_[i - 1] * x[i];
  return x;
}

NodalVector solve(const TriDiagMatrix& a, std::span<const double> b) { return TriDiagFactor(a).solve(b); }

CoefficientField CoefficientField::constant(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream os;
    os << "CoefficientField: constant " << value << " must be positive";
    throw DomainError(os.str());
  }
  return {Kind::constant, value};
}

CoefficientField CoefficientField::sinusoidal() { return {Kind::sinusoidal, 3.0}; }

double CoefficientField::operator()(double x) const {
  if (kind_ == Kind::constant) return value_;
  return 3.0 + std::sin(2.0 * std::numbers::pi * x);
}

double CoefficientField::min_value() const { return kind_ == Kind::constant ? value_ : 2.0; }

const char* to_string(MassKind kind) { return kind == MassKind::consistent ? "consistent" : "lumped"; }

void validate_mesh_vector(const Mesh1D& mesh, std::span<const double> v, const char* what) {
  const auto n = static_cast<std::size_t>(mesh.n_interior());
  if (v.size() != n) throw DimensionError(std::string(what) + ": nodal vector " + describe_size(v.size(), n));
}

TriDiagMatrix assemble_mass(const Mesh1D& mesh) {
  const auto n = static_cast<std::size_t>(mesh.n_interior());
  const double h = mesh.h();
  return {std::vector<double>(n, 2.0 * h / 3.0), std::vector<double>(n - 1, h / 6.0)};
}

TriDiagMatrix assemble_lumped_mass(const Mesh1D& mesh) {
  const auto n = static_cast<std::size_t>(mesh.n_interior());
  return {std::vector<double>(n, mesh.h()), std::vector<double>(n - 1, 0.0)};
}

TriDiagMatrix assemble_mass(const Mesh1D& mesh, MassKind kind) {
  return kind == MassKind::consistent ? assemble_mass(mesh) : assemble_lumped_mass(mesh);
}

TriDiagMatrix assemble_stiffness(const Mesh1D& mesh, const CoefficientField& k) {
  const int n = mesh.n_interior();
  const double h = mesh.h();
  // Element integrals int_e k / h^2, 6-point Gauss for variable k.
  std::vector<double> ke(mesh.n_cells());
  if (k.is_constant()) {
    std::fill(ke.begin(), ke.end(), k.value() / h);
  } else {
    const QuadratureRule& g = gauss_legendre(6);
    for (int e = 0; e < mesh.n_cells(); ++e) {
      const double a = mesh.node(e);
      const double b = mesh.node(e + 1);
      double s = 0.0;
      for (std::size_t q = 0; q < g.size(); ++q) s += g.weights[q] * k(0.5 * (a + b) + 0.5 * (b - a) * g.nodes[q]);
      ke[e] = 0.5 * (b - a) * s / (h * h);
    }
  }
  TriDiagMatrix m{std::vector<double>(n), std::vector<double>(n - 1)};
  for (int i = 0; i < n; ++i) m.diag[i] = ke[i] + ke[i + 1];
  for (int i = 0; i + 1 < n; ++i) m.off[i] = -ke[i + 1];
  return m;
}

NodalVector load_vector(const Mesh1D& mesh, const std::function<double(double)>& f,
                        std::span<const double> breakpoints, int order) {
  const int n = mesh.n_interior();
  const double h = mesh.h();
  const QuadratureRule& g = gauss_legendre(order);
  NodalVector b(n, 0.0);
  for (int e = 0; e < mesh.n_cells(); ++e) {
    const double xl = mesh.node(e);
    const double xr = mesh.node(e + 1);
    double left = 0.0;   // int_e f * (xr - x) / h, feeds node e
    double right = 0.0;  // int_e f * (x - xl) / h, feeds node e + 1
    const auto pts = split_points(xl, xr, breakpoints);
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
      const double a = pts[s];
      const double c = pts[s + 1];
      const double half = 0.5 * (c - a);
      const double mid = 0.5 * (a + c);
      for (std::size_t q = 0; q < g.size(); ++q) {
        const double x = mid + half * g.nodes[q];
        const double w = half * g.weights[q] * f(x);
        left += w * (xr - x) / h;
        right += w * (x - xl) / h;
      }
    }
    if (e >= 1) b[e - 1] += left;
    if (e + 1 <= n) b[e] += right;
  }
  return b;
}

NodalVector energy_load_vector(const Mesh1D& mesh, const CoefficientField& k,
                               const std::function<double(double)>& df,
                               std::span<const double> breakpoints, int order) {
  const int n = mesh.n_interior();
  const double h = mesh.h();
  const QuadratureRule& g = gauss_legendre(order);
  NodalVector b(n, 0.0);
  for (int e = 0; e < mesh.n_cells(); ++e) {
    const double xl = mesh.node(e);
    const double xr = mesh.node(e + 1);
    double integral = 0.0;  // int_e k f'
    const auto pts = split_points(xl, xr, breakpoints);
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
      const double half = 0.5 * (pts[s + 1] - pts[s]);
      const double mid = 0.5 * (pts[s] + pts[s + 1]);
      for (std::size_t q = 0; q < g.size(); ++q) {
        const double x = mid + half * g.nodes[q];
        integral += half * g.weights[q] * k(x) * df(x);
      }
    }
    // phi_e' = -1/h and phi_{e+1}' = +1/h on element e
    if (e >= 1) b[e - 1] -= integral / h;
    if (e + 1 <= n) b[e] += integral / h;
  }
  return b;
}

NodalVector l2_project(const Mesh1D& mesh, std::span<const double> load) {
  validate_mesh_vector(mesh, load, "l2_project");
  return solve(assemble_mass(mesh), load);
}

NodalVector ritz_project(const Mesh1D& mesh, const CoefficientField& k, std::span<const double> energy_load) {
  validate_mesh_vector(mesh, energy_load, "ritz_project");
  return solve(assemble_stiffness(mesh, k), energy_load);
}

NodalVector dirac_load(const Mesh1D& mesh, double x0, MassKind mass) {
  const double pos = x0 * mesh.n_cells();
  const double idx = std::round(pos);
  if (!(std::abs(pos - idx) <= 1e-9) || idx < 1.0 || idx > mesh.n_interior()) {
    std::ostringstream os;
    os << "dirac_load: x0 = " << x0 << " is not an interior node of a mesh with " << mesh.n_cells()
       << " cells";
    throw DomainError(os.str());
  }
  NodalVector e(mesh.n_interior(), 0.0);
  e[static_cast<std::size_t>(idx) - 1] = 1.0;
  return solve(assemble_mass(mesh, mass), e);
}

NodalVector quadrature_error_operator(const Mesh1D& mesh, std::span<const double> chi) {
  validate_mesh_vector(mesh, chi, "quadrature_error_operator");
  const NodalVector lumped = assemble_lumped_mass(mesh).apply(chi);
  const NodalVector consistent = assemble_mass(mesh).apply(chi);
  NodalVector b(chi.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = lumped[i] - consistent[i];
  return solve(assemble_stiffness(mesh, CoefficientField::constant(1.0)), b);
}

namespace {

int locate_element(const Mesh1D& mesh, double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << what << ": x = " << x << " outside [0, 1]";
    throw DomainError(os.str());
  }
  const int e = static_cast<int>(std::ceil(x * mesh.n_cells())) - 1;
  return std::clamp(e, 0, mesh.n_cells() - 1);
}

double nodal(std::span<const double> u, int k, int n_cells) {
  return (k <= 0 || k >= n_cells) ? 0.0 : u[k - 1];
}

}  // namespace

double eval_fe(const Mesh1D& mesh, std::span<const double> u, double x) {
  validate_mesh_vector(mesh, u, "eval_fe");
  const int e = locate_element(mesh, x, "eval_fe");
  const double xl = mesh.node(e);
  const double s = (x - xl) * mesh.n_cells();
  return (1.0 - s) * nodal(u, e, mesh.n_cells()) + s * nodal(u, e + 1, mesh.n_cells());
}

double eval_fe_deriv(const Mesh1D& mesh, std::span<const double> u, double x) {
  validate_mesh_vector(mesh, u, "eval_fe_deriv");
  const int e = locate_element(mesh, x, "eval_fe_deriv");
  return (nodal(u, e + 1, mesh.n_cells()) - nodal(u, e, mesh.n_cells())) * mesh.n_cells();
}

std::vector<double> element_slopes(const Mesh1D& mesh, std::span<const double> u) {
  validate_mesh_vector(mesh, u, "element_slopes");
  std::vector<double> s(mesh.n_cells());
  for (int e = 0; e < mesh.n_cells(); ++e)
    s[e] = (nodal(u, e + 1, mesh.n_cells()) - nodal(u, e, mesh.n_cells())) * mesh.n_cells();
  return s;
}

}  // namespace fracfem
