#include "sl21/group.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace sl21 {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  Mat2 hinv;  // explicit adjugate: det b.g = 1
  hinv << b.g(1, 1), -b.g(0, 1), -b.g(1, 0), b.g(0, 0);
  return GroupElement(a.g * b.g, a.alpha * hinv.transpose() + b.alpha);
}

GroupElement inverse(const GroupElement& a) {
  Mat2 ginv;
  ginv << a.g(1, 1), -a.g(0, 1), -a.g(1, 0), a.g(0, 0);
  return GroupElement(ginv, -a.alpha * a.g.transpose());
}

PointHC act_hc(const GroupElement& el, const PointHC& p) {
  using C = std::complex<double>;
  const double a = el.g(0, 0), b = el.g(0, 1), c = el.g(1, 0), d = el.g(1, 1);
  const C tau(p.x, p.y), z(p.u, p.v);
  const C den = -b * tau + a;
  // den = 0 would need tau real; impossible on the chart (internal assertion)
  if (std::abs(den) < 1e-14) throw std::domain_error("act_hc: degenerate denominator");
  const C tau2 = (d * tau - c) / den;
  const C z2 = (z + el.alpha(0) * tau + el.alpha(1)) / den;
  return PointHC(tau2.real(), tau2.imag(), z2.real(), z2.imag());
}

PointPV act_pv(const GroupElement& el, const PointPV& q) {
  const Mat2 Y2 = el.g * q.Y() * el.g.transpose();
  const RowVec2 V2 = (q.V() + el.alpha) * el.g.transpose();
  const double y2 = 1.0 / Y2(0, 0);
  const double x2 = -Y2(0, 1) * y2;
  return PointPV(x2, y2, V2(0), V2(1));
}

PointHC map_T(const PointPV& q) {
  return PointHC(q.x, q.y, q.v1 * q.x + q.v2, q.v1 * q.y);
}

PointPV map_T_inv(const PointHC& p) {
  const double v1 = p.v / p.y;
  return PointPV(p.x, p.y, v1, p.u - p.x * v1);
}

GroupElement section_gY(const PointPV& q) {
  const double r = std::sqrt(q.y);
  Mat2 gY;
  gY << 1.0 / r, 0.0, -q.x / r, r;
  return GroupElement(gY, q.V() * gY.inverse().transpose());
}

GroupElement section_of_point(const PointHC& p) { return section_gY(map_T_inv(p)); }

LieElement lie_bracket(const LieElement& a, const LieElement& b) {
  const Mat2 X1 = a.X(), X2 = b.X();
  const Mat2 Xc = X1 * X2 - X2 * X1;
  const RowVec2 Zc = b.Z * X1.transpose() - a.Z * X2.transpose();
  return LieElement(Xc(0, 0), Xc(0, 1), Xc(1, 0), Zc(0), Zc(1));
}

GroupElement exp_lie(const LieElement& u) {
  // M = [[-t(X), 0],[Z, 0]]; exp M = [[t(g)^-1, 0],[alpha, 1]].
  Eigen::Matrix3d M = Eigen::Matrix3d::Zero();
  const Mat2 Xt = u.X().transpose();
  M.topLeftCorner<2, 2>() = -Xt;
  M(2, 0) = u.Z(0);
  M(2, 1) = u.Z(1);

  // scaling and squaring with a truncated series at the bottom
  const double norm = M.cwiseAbs().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  Eigen::Matrix3d A = M / std::pow(2.0, squarings);
  Eigen::Matrix3d E = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d term = Eigen::Matrix3d::Identity();
  for (int k = 1; k <= 20; ++k) {
    term = (term * A) / static_cast<double>(k);
    E += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) E = E * E;

  const Mat2 gt_inv = E.topLeftCorner<2, 2>();
  RowVec2 alpha;
  alpha << E(2, 0), E(2, 1);
  const Mat2 g = gt_inv.inverse().transpose();
  return GroupElement(g, alpha);
}

double killing_form(const LieElement& a, const LieElement& b) {
  return 5.0 * (a.X() * b.X()).trace();
}

LieElement adjoint(const GroupElement& el, const LieElement& u) {
  Mat2 ginv;
  ginv << el.g(1, 1), -el.g(0, 1), -el.g(1, 0), el.g(0, 0);
  const Mat2 X2 = el.g * u.X() * ginv;
  const RowVec2 Z2 = (u.Z - el.alpha * u.X().transpose()) * el.g.transpose();
  // trace is preserved exactly up to rounding; re-project onto tr = 0
  return LieElement(X2(0, 0), X2(0, 1), X2(1, 0), Z2(0), Z2(1));
}

GCoord iwasawa(const GroupElement& el) {
  const double a = el.g(0, 0), b = el.g(0, 1), c = el.g(1, 0), d = el.g(1, 1);
  const double y = 1.0 / (c * c + d * d);
  const double x = (a * c + b * d) * y;
  double theta = std::atan2(-c, d);
  if (theta < 0) theta += kTwoPi;
  if (theta >= kTwoPi) theta = 0;  // ties at 2*pi wrap to 0
  return GCoord(x, y, theta, el.alpha(0), el.alpha(1));
}

GroupElement compose_iwasawa(const GCoord& co) {
  const double r = std::sqrt(co.y);
  Mat2 n, a;
  n << 1, co.x, 0, 1;
  a << r, 0, 0, 1 / r;
  RowVec2 al;
  al << co.alpha1, co.alpha2;
  return GroupElement(n * a * rotation(co.theta), al);
}

LieElement basis_W(int k) {
  switch (k) {
    case 1: return LieElement(0, 1, 0, 0, 0);
    case 2: return LieElement(0, 0, 1, 0, 0);
    case 3: return LieElement(1, 0, 0, 0, 0);
    case 4: return LieElement(0, 0, 0, 1, 0);
    case 5: return LieElement(0, 0, 0, 0, 1);
    default: throw std::invalid_argument("basis_W: k must be in 1..5");
  }
}

Mat2 rotation(double theta) {
  Mat2 k;
  k << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return k;
}

GroupElement rotation_element(double theta) {
  return GroupElement(rotation(theta), RowVec2::Zero());
}

std::vector<GroupElement> gamma_generators() {
  Mat2 S, T;
  S << 0, -1, 1, 0;
  T << 1, 1, 0, 1;
  RowVec2 e1, e2;
  e1 << 1, 0;
  e2 << 0, 1;
  return {GroupElement(S, RowVec2::Zero()), GroupElement(T, RowVec2::Zero()),
          GroupElement(Mat2::Identity(), e1), GroupElement(Mat2::Identity(), e2)};
}

RootSpaceResult root_space_check(const LieElement& H, const LieElement& u, double tol) {
  if (std::abs(H.x12) > 0 || std::abs(H.x21) > 0 || H.Z.norm() > 0)
    throw std::invalid_argument("root_space_check: H must lie on the Cartan line R*W3");
  const Eigen::Matrix<double, 5, 1> bu = lie_bracket(H, u).coords();
  const Eigen::Matrix<double, 5, 1> cu = u.coords();
  const double nu = cu.norm();
  if (nu == 0) throw std::invalid_argument("root_space_check: u = 0");
  RootSpaceResult r;
  r.eigenvalue = bu.dot(cu) / (nu * nu);
  r.residual = (bu - r.eigenvalue * cu).norm() / nu;
  r.is_eigenvector = r.residual <= tol;
  return r;
}

InvariantPolynomials invariant_polynomials(const LieElement& u) {
  if (std::abs(u.x12 - u.x21) > kDetTol)
    throw std::invalid_argument("invariant_polynomials: u must lie in p (X symmetric)");
  const double a = u.x11, b = u.x12, z1 = u.Z(0), z2 = u.Z(1);
  InvariantPolynomials out;
  out.P = 0.25 * (a * a + b * b);
  out.xi = z1 * z1 + z2 * z2;
  out.P1 = 0.5 * (z2 * z2 - z1 * z1) * a - z1 * z2 * b;
  out.P2 = 0.5 * (z2 * z2 - z1 * z1) * b + z1 * z2 * a;
  return out;
}

Eigen::Matrix<double, 5, 5> ad_matrix(const LieElement& u) {
  Eigen::Matrix<double, 5, 5> m;
  for (int k = 1; k <= 5; ++k) m.col(k - 1) = lie_bracket(u, basis_W(k)).coords();
  return m;
}

double killing_form_trace_oracle(const LieElement& a, const LieElement& b) {
  return (ad_matrix(a) * ad_matrix(b)).trace();
}

}  // namespace sl21
