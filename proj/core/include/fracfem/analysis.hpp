#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracfem/exact_solutions.hpp"
#include "fracfem/fem_core.hpp"
#include "fracfem/special_functions.hpp"

namespace fracfem {

struct ErrorNorms {
  double l2 = 0.0;
  double h1 = 0.0;
  std::optional<double> gh;
};

struct ErrorOptions {
  int gauss_order = 5;
  bool recovered_gradient = false;
};

/// ||u - u_h||, ||(u - u_h)'|| and optionally the midpoint recovered-gradient error, all divided by `norm`.
///
/// Modes n <= n_cells / 2 are integrated with Gauss per element. The remaining modes enter through
/// ||u_H||^2 - 2 (u_H, u_h), using closed-form (sin n pi x, phi_i), plus the asymptotic remainder
/// beyond the truncation when the snapshot carries one.
ErrorNorms series_errors(const Mesh1D& mesh, std::span<const double> u_h, const SeriesSnapshot& exact,
                         double norm, const ErrorOptions& opt = {});

double l2_error(const Mesh1D& mesh, std::span<const double> u_h, const FourierSeriesSolution& sol, double t);
double h1_error(const Mesh1D& mesh, std::span<const double> u_h, const FourierSeriesSolution& sol, double t);
double recovered_gradient_error(const Mesh1D& mesh, std::span<const double> u_h, const FourierSeriesSolution& sol,
                                double t);

/// Errors against a finite element function on a nested finer mesh; exact for piecewise linears.
ErrorNorms fe_reference_errors(const Mesh1D& mesh, std::span<const double> u_h, const Mesh1D& fine,
                               std::span<const double> u_ref, double norm);

struct ErrorRecord {
  double h = 0.0;
  double alpha = 0.0;
  double t = 0.0;
  double l2_error = 0.0;
  double h1_error = 0.0;
  std::optional<double> gh_error;
};

struct ConvergenceTable {
  std::string example;
  std::string method;
  std::string projection;
  double alpha = 0.0;
  double t = 0.0;
  bool normalized = true;
  std::vector<ErrorRecord> rows;  ///< h halving from row to row
  std::vector<double> l2_ratios;
  std::vector<double> h1_ratios;
  std::vector<double> gh_ratios;

  /// Geometric mean of the consecutive ratios; NaN with fewer than two rows.
  double l2_ratio() const;
  double h1_ratio() const;
  double gh_ratio() const;
};

/// e_i / e_{i+1}
std::vector<double> error_ratios(std::span<const double> errors);
/// log2(e_i / e_{i+1})
std::vector<double> observed_rate(std::span<const double> errors);
double mean_ratio(std::span<const double> ratios);

/// Fills the ratio columns from the rows.
void compute_ratios(ConvergenceTable& table);

enum class Method { galerkin, lumped, l1 };
enum class Projection { ritz, l2, interpolation, dirac };

const char* to_string(Method m);
const char* to_string(Projection p);
Method method_from_string(std::string_view s);
Projection projection_from_string(std::string_view s);

/// Examples a, b, c1, c2, c3, d (constant k = 1) and e (v = 1, k = 3 + sin 2 pi x).
struct Example {
  std::string name;
  InitialDataKind data;
  CoefficientField k;

  bool has_series() const { return k.is_constant(); }
  Projection default_projection() const;
};

Example example_from_string(std::string_view name);

/// Finite element solution on a mesh, used as the "exact" solution for example e.
struct FineReference {
  Mesh1D mesh{2};
  NodalVector values;
};

struct TableRequest {
  std::string example = "a";
  Method method = Method::lumped;
  double alpha = 0.5;
  double t = 1.0;
  std::vector<int> levels{3, 4, 5, 6, 7};  ///< h = 2^{-k}
  std::optional<Projection> projection;
  int l1_steps = 1000;  ///< time steps to t for Method::l1
  bool recovered_gradient = false;
  double tail_tol = 1e-10;
};

struct TableDiagnostics {
  double max_eigen_residual = 0.0;
  double max_orthonormality_defect = 0.0;
  /// Galerkin only: max_j |lambda_j - lambda_bar_j| / lambda_j against the lumped closed form.
  double max_eigenvalue_gap = 0.0;
  long series_modes = 0;
  MlRegionStats regions;
};

/// Semidiscrete (or L1) solution at time t on one mesh.
NodalVector discrete_solution(const Mesh1D& mesh, const Example& ex, Method method, Projection projection,
                              double alpha, double t, int l1_steps = 1000, TableDiagnostics* diag = nullptr);

/// Initial discrete data v_h. The delta uses P_h (consistent mass) for every method.
NodalVector initial_projection(const Mesh1D& mesh, const Example& ex, Projection projection);

/// One error row per level. Example e needs `reference`.
ConvergenceTable build_table(const TableRequest& req, const FineReference* reference = nullptr,
                             TableDiagnostics* diag = nullptr);

}  // namespace fracfem
