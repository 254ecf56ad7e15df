#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fracfem {

/// Uniform partition of (0, 1) into n_cells elements. Only interior nodes carry unknowns.
class Mesh1D {
public:
  explicit Mesh1D(int n_cells);

  int n_cells() const { return n_cells_; }
  int n_interior() const { return n_cells_ - 1; }
  double h() const { return h_; }

  /// x_k = k / n_cells for k = 0..n_cells (0 and n_cells are the boundary).
  double node(int k) const { return static_cast<double>(k) / n_cells_; }

  /// Coordinate of interior unknown i (0-based), i.e. node(i + 1).
  double interior_node(int i) const { return node(i + 1); }

  bool operator==(const Mesh1D& other) const { return n_cells_ == other.n_cells_; }

private:
  int n_cells_;
  double h_;
};

/// Interior nodal coefficients of a function in X_h; boundary values are zero.
using NodalVector = std::vector<double>;

/// Symmetric tridiagonal matrix.
struct TriDiagMatrix {
  std::vector<double> diag;
  std::vector<double> off;  ///< off[i] couples i and i + 1

  TriDiagMatrix() = default;
  TriDiagMatrix(std::vector<double> d, std::vector<double> o);

  std::size_t size() const { return diag.size(); }
  bool is_diagonal() const;

  NodalVector apply(std::span<const double> x) const;
  /// x^T A y
  double form(std::span<const double> x, std::span<const double> y) const;

  TriDiagMatrix scaled(double s) const;
  /// this + s * other
  TriDiagMatrix plus(const TriDiagMatrix& other, double s) const;
};

/// LDL^T factorization of an SPD tridiagonal matrix (Thomas algorithm, no pivoting).
class TriDiagFactor {
public:
  /// Throws NumericalInvariantError if a pivot is not positive.
  explicit TriDiagFactor(const TriDiagMatrix& a);

  NodalVector solve(std::span<const double> b) const;
  std::size_t size() const { return d_.size(); }

private:
  std::vector<double> d_;
  std::vector<double> l_;
};

NodalVector solve(const TriDiagMatrix& a, std::span<const double> b);

/// k(x) in the bilinear form a(u, v) = int k u' v'.
class CoefficientField {
public:
  enum class Kind { constant, sinusoidal };

  static CoefficientField constant(double value);
  /// k(x) = 3 + sin(2 pi x)
  static CoefficientField sinusoidal();

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ == Kind::constant; }
  double value() const { return value_; }
  double operator()(double x) const;
  double min_value() const;

private:
  CoefficientField(Kind kind, double value) : kind_(kind), value_(value) {}
  Kind kind_;
  double value_;
};

enum class MassKind { consistent, lumped };

const char* to_string(MassKind kind);

void validate_mesh_vector(const Mesh1D& mesh, std::span<const double> v, const char* what);

TriDiagMatrix assemble_mass(const Mesh1D& mesh);
TriDiagMatrix assemble_lumped_mass(const Mesh1D& mesh);
TriDiagMatrix assemble_mass(const Mesh1D& mesh, MassKind kind);
TriDiagMatrix assemble_stiffness(const Mesh1D& mesh, const CoefficientField& k);

/// b_i = int_0^1 f phi_i, element-wise Gauss with the elements split at the given breakpoints,
/// so piecewise polynomial data of degree < 2 * order - 1 is integrated exactly.
NodalVector load_vector(const Mesh1D& mesh, const std::function<double(double)>& f,
                        std::span<const double> breakpoints = {}, int order = 8);

/// a_i = int_0^1 k f' phi_i' for f' supplied as `df`.
NodalVector energy_load_vector(const Mesh1D& mesh, const CoefficientField& k,
                               const std::function<double(double)>& df,
                               std::span<const double> breakpoints = {}, int order = 8);

/// P_h: solves M c = b.
NodalVector l2_project(const Mesh1D& mesh, std::span<const double> load);

/// R_h: solves K c = a.
NodalVector ritz_project(const Mesh1D& mesh, const CoefficientField& k,
                         std::span<const double> energy_load);

/// Discrete delta at the node x0: M_* c = e_L. x0 must be an interior node.
NodalVector dirac_load(const Mesh1D& mesh, double x0, MassKind mass);

/// Q_h chi: K q = (M_lumped - M) chi with K the k = 1 stiffness.
NodalVector quadrature_error_operator(const Mesh1D& mesh, std::span<const double> chi);

/// Piecewise-linear evaluation; zero at the boundary.
double eval_fe(const Mesh1D& mesh, std::span<const double> u, double x);
/// Element slope; at interior nodes the left element is used.
double eval_fe_deriv(const Mesh1D& mesh, std::span<const double> u, double x);

/// Slopes of the n_cells elements.
std::vector<double> element_slopes(const Mesh1D& mesh, std::span<const double> u);

}  // namespace fracfem
