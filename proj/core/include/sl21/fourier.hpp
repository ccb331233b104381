#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sl21/jet.hpp"
#include "sl21/types.hpp"

namespace sl21 {

// Residual of the lattice periodicity relations
//   f(tau + n, z) = f(tau, z)              (n in {-1, 1})
//   f(tau, z + n1 tau + n2) = f(tau, z)    (n1, n2 in {-1, 1})
// Full checks all six shifts; XUOnly checks only the plain x and u shifts
// (the precondition of Fourier extraction).
enum class PeriodicityMode { Full, XUOnly };
double periodicity_residual(const SmoothMap& f, const PointHC& p,
                            PeriodicityMode mode = PeriodicityMode::Full);

// c_{n,r}(y, v) = int_0^1 int_0^1 f e^(-2 pi i (n x + r u)) dx du on an
// N x N trapezoid grid (spectrally accurate for smooth periodic f).
struct FourierTable {
  int n_max = 0, r_max = 0, grid_n = 0;
  double y = 1, v = 0;
  Eigen::MatrixXcd c;  // (2*n_max+1) x (2*r_max+1)
  double grid_power = 0;
  double parseval_residual = 0;  // |sum |c|^2 - grid power| (zero for band-limited f)

  std::complex<double> at(int n, int r) const { return c(n + n_max, r + r_max); }
};
FourierTable fourier_coefficients(const SmoothMap& f, int n_max, int r_max, double y, double v,
                                  int grid_n = 0);

// Synthesis of a band-limited function from a coefficient table (test aid for
// the round-trip property).
SmoothMap synthesize(const FourierTable& table);

// y^2 F_yy + (y + v^2) F_vv + 2 y v F_yv - {(a y + b v)^2 + b^2 y + lambda} F
// with a = 2 pi n, b = 2 pi r; F is a SmoothMap in the two variables (y, v).
std::complex<double> pde_residual_6_4(const SmoothMap& F, int n, int r,
                                      std::complex<double> lambda, double y, double v);

// Extracts c_{n,r}(y, v) of an eigenfunction on tensor Chebyshev grids,
// differentiates spectrally, and reports the maximum PDE residual per y-grid
// refinement level together with the decay ratios.
struct ConsistencyReport {
  std::vector<int> y_grids;
  std::vector<double> residuals;
  std::vector<double> ratios;  // residuals[i] / residuals[i+1]
};
ConsistencyReport consistency_check(const SmoothMap& f, std::complex<double> lambda, int n, int r,
                                    double y_lo, double y_hi, double v_lo, double v_hi,
                                    std::span<const int> y_grids, int v_grid, int fourier_grid = 0);

}  // namespace sl21
