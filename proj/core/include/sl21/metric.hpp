#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "sl21/jet.hpp"
#include "sl21/types.hpp"

namespace sl21 {

// An invariant Riemannian metric as an explicit coefficient field.  The
// evaluator works on coordinate jets so the same closed forms feed point
// evaluation, pullbacks, the Laplace-Beltrami assembly, and curvature.
struct MetricField {
  Chart chart = Chart::HC;
  int dim = 4;
  std::string name;
  // row-major dim x dim table of coefficient jets
  std::function<std::vector<RJet>(std::span<const RJet>)> coeffs;
};

MetricField metric_ds2();                                   // on H x C
MetricField metric_ds_tilde();                              // on SP_2 x R^(1,2)
MetricField metric_ds_alpha_beta(double alpha, double beta);
MetricField metric_ds0();                                   // on the group, (x,y,theta) block
MetricField metric_hyperbolic_2d();                         // control: (dx^2+dy^2)/y^2
MetricField metric_ds2_perturbed();                         // control: ds^2 + dv^2, not invariant

Eigen::MatrixXd metric_eval(const MetricField& m, std::span<const double> point);
Eigen::MatrixXd metric_inverse(const MetricField& m, std::span<const double> point);

// Pivoted LDL^T positive-definiteness check (pivot tolerance relative to the
// largest diagonal entry).
bool is_positive_definite(const Eigen::MatrixXd& a, double pivot_tol = 1e-12);

// max-abs entry of J^T m(phi_a p) J - m(p), J from order-1 jets of the chart
// action.  For the G1 chart `a` acts by left translation of its matrix part.
double pullback_residual(const MetricField& m, const GroupElement& a,
                         std::span<const double> point);

// Laplace-Beltrami assembly (1/sqrt g) d_i (sqrt g g^{ij} d_j f) from
// jet-valued coefficients; f consumed at order 2.
std::complex<double> laplace_from_metric(const MetricField& m, const SmoothMap& f,
                                         std::span<const double> point);

struct CurvatureReport {
  std::vector<double> point;
  double scalar_curvature = 0;
  double christoffel_max = 0;
};

// Christoffel symbols from order-1 metric jets, Riemann/Ricci from order-2,
// contracted with the inverse metric.
CurvatureReport scalar_curvature(const MetricField& m, std::span<const double> point);

// max-abs entry of J^T ds2(T q) J - ds_tilde(q): T is an exact isometry.
double isometry_residual_T(const PointPV& q);

// Matrix-trace form (1/2) tr(Y^-1 dY Y^-1 dY) + dV Y^-1 t(dV) evaluated on a
// tangent vector (dx, dy, dv1, dv2) through the dY differentials of the
// det-1 parametrization.
double matrix_metric_form(const PointPV& q, const Eigen::Vector4d& tangent);

// |matrix form - coordinate quadratic form| on the same tangent vector.
double matrix_form_residual(const PointPV& q, const Eigen::Vector4d& tangent);

}  // namespace sl21
