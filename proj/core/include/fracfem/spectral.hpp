#pragma once

#include <span>
#include <vector>

#include "fracfem/fem_core.hpp"
#include "fracfem/special_functions.hpp"

namespace fracfem {

/// Generalized eigenpairs K phi = lambda M_* phi, modes orthonormal in the M_* inner product.
struct EigenSystem {
  Mesh1D mesh{2};
  MassKind inner_product = MassKind::lumped;
  TriDiagMatrix stiffness;
  TriDiagMatrix mass;
  std::vector<double> lambdas;     ///< ascending
  std::vector<NodalVector> modes;  ///< modes[j] pairs with lambdas[j]

  std::size_t size() const { return lambdas.size(); }
};

/// Closed-form eigensystem of (K, M_lumped) for k = 1:
/// lambda_j = (4/h^2) sin^2(j pi h / 2), phi_j(x_k) = sqrt(2) sin(j pi x_k).
EigenSystem analytic_lumped_eigensystem(const Mesh1D& mesh,
                                        const CoefficientField& k = CoefficientField::constant(1.0));

/// Closed-form generalized eigenvalues of (K, M) for k = 1:
/// lambda_j = (6/h^2) (1 - cos j pi h) / (2 + cos j pi h).
std::vector<double> consistent_eigenvalues(const Mesh1D& mesh);

/// Dense generalized eigensolve for arbitrary SPD tridiagonal K and M_*.
EigenSystem solve_eigensystem(const Mesh1D& mesh, const TriDiagMatrix& stiffness,
                              const TriDiagMatrix& mass, MassKind kind);

/// Convenience: assemble K and M_* for the field and solve.
EigenSystem build_eigensystem(const Mesh1D& mesh, const CoefficientField& k, MassKind kind);

/// (v, phi_j)_* for every mode.
std::vector<double> eigen_coefficients(const EigenSystem& eig, std::span<const double> v);

/// sum_j coeffs[j] phi_j
NodalVector synthesize(const EigenSystem& eig, std::span<const double> coeffs);

/// E_h(t) v (consistent) or F_h(t) v (lumped): sum_j E_{alpha,1}(-lambda_j t^alpha) (v, phi_j)_* phi_j.
NodalVector homogeneous_solve(const EigenSystem& eig, std::span<const double> v, double alpha, double t,
                              MlRegionStats* stats = nullptr);

/// Duhamel kernel at a single time: sum_j t^{alpha-1} E_{alpha,alpha}(-lambda_j t^alpha) (g, phi_j)_* phi_j.
NodalVector bar_operator_apply(const EigenSystem& eig, std::span<const double> g, double alpha, double t,
                               MlRegionStats* stats = nullptr);

/// |||psi|||_p = (sum_j lambda_j^p (psi, phi_j)_*^2)^{1/2}
double discrete_norm(const EigenSystem& eig, std::span<const double> psi, double p);

/// max_j ||K phi_j - lambda_j M phi_j|| / (lambda_j ||M phi_j||)
double max_relative_residual(const EigenSystem& eig);

/// max_{i,j} |phi_i^T M phi_j - delta_ij|
double max_orthonormality_defect(const EigenSystem& eig);

}  // namespace fracfem
