#include "sl21/metric.hpp"

#include <cmath>

#include "sl21/charts.hpp"
#include "sl21/group.hpp"

namespace sl21 {

namespace {

using C = std::complex<double>;

// Gauss-Jordan inverse of a small matrix of jets, pivoting by |value|.
template <class S>
std::vector<Jet<S>> jet_mat_inverse(std::vector<Jet<S>> a, int n) {
  std::vector<Jet<S>> inv(static_cast<std::size_t>(n) * n, a[0].constant_like(S(0)));
  for (int i = 0; i < n; ++i) inv[i * n + i] = a[0].constant_like(S(1));
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col].value()) > std::abs(a[piv * n + col].value())) piv = r;
    }
    if (std::abs(a[piv * n + col].value()) == 0.0)
      throw std::domain_error("jet matrix inverse: singular value part");
    if (piv != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a[piv * n + c], a[col * n + c]);
        std::swap(inv[piv * n + c], inv[col * n + c]);
      }
    }
    const Jet<S> d = reciprocal(a[col * n + col]);
    for (int c = 0; c < n; ++c) {
      a[col * n + c] = a[col * n + c] * d;
      inv[col * n + c] = inv[col * n + c] * d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Jet<S> f = a[r * n + col];
      if (f.value() == S(0)) {
        bool zero = true;
        for (int pos = 0; pos < f.table_size(); ++pos)
          if (f.coeff(pos) != S(0)) zero = false;
        if (zero) continue;
      }
      for (int c = 0; c < n; ++c) {
        a[r * n + c] = a[r * n + c] - f * a[col * n + c];
        inv[r * n + c] = inv[r * n + c] - f * inv[col * n + c];
      }
    }
  }
  return inv;
}

template <class S>
Jet<S> jet_mat_det(std::vector<Jet<S>> a, int n) {
  Jet<S> det = a[0].constant_like(S(1));
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col].value()) > std::abs(a[piv * n + col].value())) piv = r;
    }
    if (std::abs(a[piv * n + col].value()) == 0.0) return a[0].constant_like(S(0));
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      det = -det;
    }
    det = det * a[col * n + col];
    const Jet<S> d = reciprocal(a[col * n + col]);
    for (int r = col + 1; r < n; ++r) {
      const Jet<S> f = a[r * n + col] * d;
      for (int c = col; c < n; ++c) a[r * n + c] = a[r * n + c] - f * a[col * n + c];
    }
  }
  return det;
}

std::vector<RJet> eval_coeff_jets(const MetricField& m, std::span<const double> point, int order) {
  if (static_cast<int>(point.size()) != m.dim)
    throw std::invalid_argument("metric " + m.name + ": point dimension mismatch");
  std::vector<RJet> seeds;
  seeds.reserve(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    seeds.push_back(order == 0 ? RJet::constant(point, 0, point[i])
                               : RJet::seed(point, static_cast<int>(i), order));
  }
  return m.coeffs(seeds);
}

}  // namespace

MetricField metric_ds2() {
  MetricField m;
  m.chart = Chart::HC;
  m.dim = 4;
  m.name = "ds2";
  m.coeffs = [](std::span<const RJet> p) {
    const RJet& y = p[1];
    const RJet& v = p[3];
    const RJet zero = y.constant_like(0.0);
    const RJet yinv = reciprocal(y);
    const RJet yinv2 = yinv * yinv;
    const RJet a = (y + v * v) * yinv2 * yinv;  // (y+v^2)/y^3
    const RJet b = -(v * yinv2);                // -v/y^2
    return std::vector<RJet>{a,    zero, b,    zero,  //
                             zero, a,    zero, b,     //
                             b,    zero, yinv, zero,  //
                             zero, b,    zero, yinv};
  };
  return m;
}

MetricField metric_ds_tilde() {
  MetricField m;
  m.chart = Chart::PV;
  m.dim = 4;
  m.name = "ds_tilde";
  m.coeffs = [](std::span<const RJet> p) {
    const RJet& x = p[0];
    const RJet& y = p[1];
    const RJet zero = y.constant_like(0.0);
    const RJet yinv = reciprocal(y);
    const RJet yinv2 = yinv * yinv;
    const RJet q = (x * x + y * y) * yinv;
    const RJet xy = x * yinv;
    return std::vector<RJet>{yinv2, zero,  zero, zero,  //
                             zero,  yinv2, zero, zero,  //
                             zero,  zero,  q,    xy,    //
                             zero,  zero,  xy,   yinv};
  };
  return m;
}

MetricField metric_ds_alpha_beta(double alpha, double beta) {
  if (!(alpha > 0) || !(beta > 0))
    throw std::invalid_argument("metric_ds_alpha_beta: parameters must be positive");
  MetricField m;
  m.chart = Chart::HC;
  m.dim = 4;
  m.name = "ds_ab(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
  m.coeffs = [alpha, beta](std::span<const RJet> p) {
    const RJet& y = p[1];
    const RJet& v = p[3];
    const RJet zero = y.constant_like(0.0);
    const RJet yinv = reciprocal(y);
    const RJet yinv2 = yinv * yinv;
    const RJet yinv3 = yinv2 * yinv;
    const RJet a = alpha * yinv2 + beta * (v * v) * yinv3;
    const RJet b = -(beta * v * yinv2);
    const RJet c = beta * yinv;
    return std::vector<RJet>{a,    zero, b,    zero,  //
                             zero, a,    zero, b,     //
                             b,    zero, c,    zero,  //
                             zero, b,    zero, c};
  };
  return m;
}

MetricField metric_ds0() {
  MetricField m;
  m.chart = Chart::G1;
  m.dim = 3;
  m.name = "ds0";
  // (dx^2 + dy^2)/y^2 + (dtheta + dx/(2y))^2 in coordinates (x, y, theta)
  m.coeffs = [](std::span<const RJet> p) {
    const RJet& y = p[1];
    const RJet zero = y.constant_like(0.0);
    const RJet one = y.constant_like(1.0);
    const RJet yinv = reciprocal(y);
    const RJet yinv2 = yinv * yinv;
    const RJet gxx = yinv2 + 0.25 * yinv2;
    const RJet gxt = 0.5 * yinv;
    return std::vector<RJet>{gxx,  zero,  gxt,  //
                             zero, yinv2, zero, //
                             gxt,  zero,  one};
  };
  return m;
}

MetricField metric_hyperbolic_2d() {
  MetricField m;
  m.chart = Chart::HC;
  m.dim = 2;
  m.name = "hyperbolic2";
  m.coeffs = [](std::span<const RJet> p) {
    const RJet& y = p[1];
    const RJet zero = y.constant_like(0.0);
    const RJet yinv2 = reciprocal(y * y);
    return std::vector<RJet>{yinv2, zero, zero, yinv2};
  };
  return m;
}

MetricField metric_ds2_perturbed() {
  MetricField m = metric_ds2();
  m.name = "ds2+dv2";
  auto base = m.coeffs;
  m.coeffs = [base](std::span<const RJet> p) {
    auto g = base(p);
    g[15] += 1.0;
    return g;
  };
  return m;
}

Eigen::MatrixXd metric_eval(const MetricField& m, std::span<const double> point) {
  const auto g = eval_coeff_jets(m, point, 0);
  Eigen::MatrixXd out(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) out(i, j) = g[static_cast<std::size_t>(i) * m.dim + j].value();
  const double scale = out.cwiseAbs().maxCoeff();
  if ((out - out.transpose()).cwiseAbs().maxCoeff() > 1e-14 * std::max(1.0, scale))
    throw std::logic_error("metric " + m.name + ": asymmetric coefficients");
  if (!is_positive_definite(out))
    throw std::domain_error("metric " + m.name + ": not positive definite at this point");
  return out;
}

Eigen::MatrixXd metric_inverse(const MetricField& m, std::span<const double> point) {
  return metric_eval(m, point).inverse();
}

bool is_positive_definite(const Eigen::MatrixXd& a, double pivot_tol) {
  Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
  if (ldlt.info() != Eigen::Success) return false;
  const Eigen::VectorXd d = ldlt.vectorD();
  const double dmax = d.cwiseAbs().maxCoeff();
  return d.minCoeff() > pivot_tol * std::max(1.0, dmax);
}

double pullback_residual(const MetricField& m, const GroupElement& a,
                         std::span<const double> point) {
  const int n = m.dim;
  std::vector<CJet> image;
  {
    const auto seeds = seed_coords(point, 1);
    if (m.chart == Chart::HC && n == 4) {
      const auto im = act_hc_jets(a, seeds);
      image.assign(im.begin(), im.end());
    } else if (m.chart == Chart::PV) {
      const auto im = act_pv_jets(a, seeds);
      image.assign(im.begin(), im.end());
    } else if (m.chart == Chart::G1 && n == 3) {
      // left translation by the matrix part; alpha does not act on (x,y,theta)
      std::vector<CJet> five(seeds.begin(), seeds.end());
      five.push_back(seeds[0].constant_like(C(0)));
      five.push_back(seeds[0].constant_like(C(0)));
      const auto im = left_translate_jets(a.g, five);
      image.assign(im.begin(), im.begin() + 3);
    } else {
      throw std::invalid_argument("pullback_residual: no action on this chart");
    }
  }
  Eigen::MatrixXd J(n, n);
  std::vector<double> q(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    q[static_cast<std::size_t>(i)] = image[static_cast<std::size_t>(i)].value().real();
    for (int j = 0; j < n; ++j) {
      std::array<int, kMaxJetVars> mi{};
      mi[j] = 1;
      J(i, j) = image[static_cast<std::size_t>(i)]
                    .partial(std::span<const int>(mi.data(), static_cast<std::size_t>(n)))
                    .real();
    }
  }
  const Eigen::MatrixXd Mq = metric_eval(m, q);
  const Eigen::MatrixXd Mp = metric_eval(m, point);
  return (J.transpose() * Mq * J - Mp).cwiseAbs().maxCoeff();
}

std::complex<double> laplace_from_metric(const MetricField& m, const SmoothMap& f,
                                         std::span<const double> point) {
  const int n = m.dim;
  const auto gj = eval_coeff_jets(m, point, 1);
  std::vector<CJet> g(gj.size(), CJet());
  for (std::size_t i = 0; i < gj.size(); ++i) g[i] = complexify(gj[i]);
  const CJet det = jet_mat_det(g, n);
  const CJet s = sqrt(det);
  const auto ginv = jet_mat_inverse(g, n);

  const auto seeds = seed_coords(point, 2);
  const CJet F = f(seeds);
  std::vector<CJet> dF;
  dF.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) dF.push_back(F.derivative(j));

  C div(0.0);
  for (int i = 0; i < n; ++i) {
    CJet w = s.constant_like(C(0));
    for (int j = 0; j < n; ++j) w += ginv[static_cast<std::size_t>(i) * n + j] * dF[j];
    w = s * w;
    div += w.derivative(i).value();
  }
  return div / s.value();
}

CurvatureReport scalar_curvature(const MetricField& m, std::span<const double> point) {
  const int n = m.dim;
  const auto g2 = eval_coeff_jets(m, point, 2);
  const auto ginv = jet_mat_inverse(g2, n);  // order-2 inverse; truncations below

  auto at = [n](const std::vector<RJet>& t, int i, int j) -> const RJet& {
    return t[static_cast<std::size_t>(i) * n + j];
  };

  // Christoffel symbols as order-1 jets
  std::vector<RJet> gamma(static_cast<std::size_t>(n) * n * n, g2[0].truncated(1).constant_like(0.0));
  auto gam = [n, &gamma](int r, int i, int j) -> RJet& {
    return gamma[(static_cast<std::size_t>(r) * n + i) * n + j];
  };
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        RJet sum = g2[0].truncated(1).constant_like(0.0);
        for (int l = 0; l < n; ++l) {
          const RJet t =
              at(g2, l, j).derivative(i) + at(g2, l, i).derivative(j) - at(g2, i, j).derivative(l);
          sum += ginv[static_cast<std::size_t>(r) * n + l].truncated(1) * t;
        }
        gam(r, i, j) = 0.5 * sum;
        gam(r, j, i) = gam(r, i, j);
      }
    }
  }

  double christoffel_max = 0;
  for (const RJet& cj : gamma) christoffel_max = std::max(christoffel_max, std::abs(cj.value()));

  // Ricci_{s,nu} = R^r_{s r nu}
  Eigen::MatrixXd ric(n, n);
  for (int sdx = 0; sdx < n; ++sdx) {
    for (int nu = 0; nu < n; ++nu) {
      double sum = 0;
      for (int r = 0; r < n; ++r) {
        double val = gam(r, nu, sdx).derivative(r).value() - gam(r, r, sdx).derivative(nu).value();
        for (int l = 0; l < n; ++l) {
          val += gam(r, r, l).value() * gam(l, nu, sdx).value() -
                 gam(r, nu, l).value() * gam(l, r, sdx).value();
        }
        sum += val;
      }
      ric(sdx, nu) = sum;
    }
  }

  double scal = 0;
  for (int sdx = 0; sdx < n; ++sdx)
    for (int nu = 0; nu < n; ++nu)
      scal += ginv[static_cast<std::size_t>(sdx) * n + nu].value() * ric(sdx, nu);

  CurvatureReport rep;
  rep.point.assign(point.begin(), point.end());
  rep.scalar_curvature = scal;
  rep.christoffel_max = christoffel_max;
  return rep;
}

double isometry_residual_T(const PointPV& q) {
  const auto qc = coords(q);
  const auto seeds = seed_coords(qc, 1);
  const auto im = map_T_jets(seeds);
  Eigen::Matrix4d J;
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) {
    p[static_cast<std::size_t>(i)] = im[static_cast<std::size_t>(i)].value().real();
    for (int j = 0; j < 4; ++j) {
      std::array<int, 4> mi{};
      mi[static_cast<std::size_t>(j)] = 1;
      J(i, j) = im[static_cast<std::size_t>(i)].partial(std::span<const int>(mi.data(), 4)).real();
    }
  }
  const Eigen::MatrixXd Mhc = metric_eval(metric_ds2(), p);
  const Eigen::MatrixXd Mpv = metric_eval(metric_ds_tilde(), qc);
  return (J.transpose() * Mhc * J - Mpv).cwiseAbs().maxCoeff();
}

double matrix_metric_form(const PointPV& q, const Eigen::Vector4d& t) {
  const double dx = t(0), dy = t(1), dv1 = t(2), dv2 = t(3);
  Mat2 dYdx, dYdy;
  dYdx << 0, -1 / q.y, -1 / q.y, 2 * q.x / q.y;
  dYdy << -1 / (q.y * q.y), q.x / (q.y * q.y), q.x / (q.y * q.y), 1 - q.x * q.x / (q.y * q.y);
  const Mat2 dY = dx * dYdx + dy * dYdy;
  const Mat2 Yinv = q.Y().inverse();
  const Mat2 A = Yinv * dY;
  RowVec2 dV;
  dV << dv1, dv2;
  const double quad = (dV * Yinv * dV.transpose())(0);
  return 0.5 * (A * A).trace() + quad;
}

double matrix_form_residual(const PointPV& q, const Eigen::Vector4d& t) {
  const auto qc = coords(q);
  const Eigen::MatrixXd M = metric_eval(metric_ds_tilde(), qc);
  const double coord_form = t.transpose() * M * t;
  return std::abs(matrix_metric_form(q, t) - coord_form);
}

}  // namespace sl21
