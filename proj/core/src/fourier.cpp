#include "sl21/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sl21/operators.hpp"

namespace sl21 {

namespace {

using C = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

C eval_hc(const SmoothMap& f, double x, double y, double u, double v) {
  const std::array<double, 4> co{x, y, u, v};
  std::vector<CJet> jets;
  jets.reserve(4);
  for (double c : co) jets.push_back(CJet::constant(co, 0, C(c)));
  return f(jets).value();
}

C single_coefficient(const SmoothMap& f, int n, int r, double y, double v, int N) {
  C acc(0);
  for (int j = 0; j < N; ++j) {
    const double x = static_cast<double>(j) / N;
    for (int k = 0; k < N; ++k) {
      const double u = static_cast<double>(k) / N;
      acc += eval_hc(f, x, y, u, v) * std::polar(1.0, -kTwoPi * (n * x + r * u));
    }
  }
  return acc / static_cast<double>(N * N);
}

// Chebyshev-Lobatto nodes on [lo, hi] (descending in the standard cos order)
// and the first-derivative collocation matrix.
void chebyshev(int m, double lo, double hi, Eigen::VectorXd& nodes, Eigen::MatrixXd& D) {
  nodes.resize(m);
  D = Eigen::MatrixXd::Zero(m, m);
  if (m == 1) {
    nodes(0) = 0.5 * (lo + hi);
    return;
  }
  Eigen::VectorXd x(m);
  for (int k = 0; k < m; ++k) x(k) = std::cos(std::numbers::pi * k / (m - 1));
  auto cw = [m](int i) { return (i == 0 || i == m - 1) ? 2.0 : 1.0; };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const double sgn = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      D(i, j) = (cw(i) / cw(j)) * sgn / (x(i) - x(j));
    }
    D(i, i) = -D.row(i).sum();
  }
  // map [-1,1] -> [lo,hi]
  for (int k = 0; k < m; ++k) nodes(k) = 0.5 * ((hi + lo) + (hi - lo) * x(k));
  D *= 2.0 / (hi - lo);
}

}  // namespace

double periodicity_residual(const SmoothMap& f, const PointHC& p, PeriodicityMode mode) {
  const C base = eval_hc(f, p.x, p.y, p.u, p.v);
  double res = 0;
  for (int n : {-1, 1}) res = std::max(res, std::abs(eval_hc(f, p.x + n, p.y, p.u, p.v) - base));
  if (mode == PeriodicityMode::XUOnly) {
    for (int n2 : {-1, 1})
      res = std::max(res, std::abs(eval_hc(f, p.x, p.y, p.u + n2, p.v) - base));
    return res;
  }
  for (int n1 : {-1, 1}) {
    for (int n2 : {-1, 1}) {
      res = std::max(
          res, std::abs(eval_hc(f, p.x, p.y, p.u + n1 * p.x + n2, p.v + n1 * p.y) - base));
    }
  }
  return res;
}

FourierTable fourier_coefficients(const SmoothMap& f, int n_max, int r_max, double y, double v,
                                  int grid_n) {
  if (n_max < 0 || r_max < 0) throw std::invalid_argument("fourier_coefficients: negative band");
  FourierTable t;
  t.n_max = n_max;
  t.r_max = r_max;
  t.grid_n = grid_n > 0 ? grid_n : 4 * std::max(n_max, r_max) + 8;
  t.y = y;
  t.v = v;

  for (double x0 : {0.13, 0.71}) {
    const double res =
        periodicity_residual(f, PointHC(x0, y, 0.37 + x0, v), PeriodicityMode::XUOnly);
    if (res > 1e-9)
      throw std::invalid_argument("fourier_coefficients: f is not 1-periodic in x and u");
  }

  const int N = t.grid_n;
  Eigen::MatrixXcd samples(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k)
      samples(j, k) = eval_hc(f, static_cast<double>(j) / N, y, static_cast<double>(k) / N, v);

  t.grid_power = samples.cwiseAbs2().sum() / (static_cast<double>(N) * N);
  t.c.resize(2 * n_max + 1, 2 * r_max + 1);
  for (int n = -n_max; n <= n_max; ++n) {
    for (int r = -r_max; r <= r_max; ++r) {
      C acc(0);
      for (int j = 0; j < N; ++j) {
        for (int k = 0; k < N; ++k) {
          acc += samples(j, k) *
                 std::polar(1.0, -kTwoPi * (n * static_cast<double>(j) / N +
                                            r * static_cast<double>(k) / N));
        }
      }
      t.c(n + n_max, r + r_max) = acc / (static_cast<double>(N) * N);
    }
  }
  t.parseval_residual = std::abs(t.c.cwiseAbs2().sum() - t.grid_power);
  return t;
}

SmoothMap synthesize(const FourierTable& table) {
  const Eigen::MatrixXcd c = table.c;
  const int n_max = table.n_max, r_max = table.r_max;
  return [c, n_max, r_max](std::span<const CJet> p) {
    CJet acc = p[0].constant_like(C(0));
    for (int n = -n_max; n <= n_max; ++n) {
      for (int r = -r_max; r <= r_max; ++r) {
        const C coeff = c(n + n_max, r + r_max);
        if (coeff == C(0)) continue;
        acc += coeff * exp(C(0, kTwoPi) * (C(n) * p[0] + C(r) * p[2]));
      }
    }
    return acc;
  };
}

std::complex<double> pde_residual_6_4(const SmoothMap& F, int n, int r, C lambda, double y,
                                      double v) {
  if (!(y > 0)) throw std::domain_error("pde_residual_6_4: y must be positive");
  const double a = kTwoPi * n, b = kTwoPi * r;
  const std::array<double, 2> co{y, v};
  const auto seeds = seed_coords(co, 2);
  const CJet G = F(seeds);
  const C Fyy = G.partial({2, 0});
  const C Fvv = G.partial({0, 2});
  const C Fyv = G.partial({1, 1});
  const C F0 = G.value();
  const double ayv = a * y + b * v;
  return y * y * Fyy + (y + v * v) * Fvv + 2.0 * y * v * Fyv -
         (C(ayv * ayv + b * b * y) + lambda) * F0;
}

ConsistencyReport consistency_check(const SmoothMap& f, C lambda, int n, int r, double y_lo,
                                    double y_hi, double v_lo, double v_hi,
                                    std::span<const int> y_grids, int v_grid, int fourier_grid) {
  if (v_grid != 1 && v_grid < 3)
    throw std::invalid_argument("consistency_check: v_grid must be 1 (frozen) or >= 3");
  const double a = kTwoPi * n, b = kTwoPi * r;
  ConsistencyReport rep;

  for (int my : y_grids) {
    if (my < 3) throw std::invalid_argument("consistency_check: y grid too small");
    Eigen::VectorXd ynodes;
    Eigen::MatrixXd Dy;
    chebyshev(my, y_lo, y_hi, ynodes, Dy);
    Eigen::VectorXd vnodes;
    Eigen::MatrixXd Dv;
    chebyshev(v_grid, v_lo, v_hi, vnodes, Dv);

    Eigen::MatrixXcd F(my, v_grid);
    for (int i = 0; i < my; ++i)
      for (int j = 0; j < v_grid; ++j)
        F(i, j) = single_coefficient(f, n, r, ynodes(i), vnodes(j),
                                     fourier_grid > 0 ? fourier_grid : 4 * std::max(std::abs(n), std::abs(r)) + 8);

    Eigen::MatrixXcd Fy = Dy * F, Fyy = Dy * Fy;
    Eigen::MatrixXcd Fv, Fvv, Fyv;
    if (v_grid == 1) {
      // frozen-v mode: assumes (and spot-checks) a v-independent coefficient
      const double probe_v = v_lo + 0.37 * (v_hi - v_lo);
      const C probe = single_coefficient(f, n, r, ynodes(my / 2), probe_v,
                                         fourier_grid > 0 ? fourier_grid : 8);
      if (std::abs(probe - F(my / 2, 0)) > 1e-9 * (1.0 + std::abs(probe)))
        throw std::invalid_argument("consistency_check: coefficient depends on v; use v_grid >= 3");
      Fv = Fvv = Fyv = Eigen::MatrixXcd::Zero(my, 1);
    } else {
      Fv = F * Dv.transpose();
      Fvv = Fv * Dv.transpose();
      Fyv = Fy * Dv.transpose();
    }

    double worst = 0;
    for (int i = 0; i < my; ++i) {
      for (int j = 0; j < v_grid; ++j) {
        const double y = ynodes(i), v = vnodes(j);
        const double ayv = a * y + b * v;
        const C res = y * y * Fyy(i, j) + (y + v * v) * Fvv(i, j) + 2.0 * y * v * Fyv(i, j) -
                      (C(ayv * ayv + b * b * y) + lambda) * F(i, j);
        worst = std::max(worst, std::abs(res) / (1.0 + std::abs(F(i, j))));
      }
    }
    rep.y_grids.push_back(my);
    rep.residuals.push_back(worst);
  }
  for (std::size_t i = 0; i + 1 < rep.residuals.size(); ++i)
    rep.ratios.push_back(rep.residuals[i] / std::max(rep.residuals[i + 1], 1e-300));
  return rep;
}

}  // namespace sl21
