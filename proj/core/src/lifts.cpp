#include "sl21/lifts.hpp"

#include "sl21/group.hpp"
#include "sl21/operators.hpp"

namespace sl21 {

namespace {

const PointHC kOrigin(0.0, 1.0, 0.0, 0.0);

// Square root of a det-1 positive symmetric Y with g t(g) = Y, through the
// (x, y) parametrization of Y.
Mat2 sqrt_of_Y(const Mat2& Y) {
  const double y = 1.0 / Y(0, 0);
  const double x = -Y(0, 1) * y;
  const double r = std::sqrt(y);
  Mat2 g;
  g << 1.0 / r, 0.0, -x / r, r;
  return g;
}

}  // namespace

std::complex<double> phi_lift(const SmoothMap& f, const GroupElement& g) {
  return eval(f, act_hc(g, kOrigin));
}

std::complex<double> h_lift(const SmoothMap& f, const Mat2& Y, const RowVec2& V, double k_angle) {
  const Mat2 g = sqrt_of_Y(Y) * rotation(k_angle);
  const GroupElement rep(g, V * g.inverse().transpose());
  return eval(f, act_hc(rep, kOrigin));
}

LiftResiduals lift_residuals(const SmoothMap& f, const GroupElement& g, double a1, double a2) {
  LiftResiduals out;

  // (right-K invariance) phi_f(g k) = phi_f(g)
  const GroupElement gk = multiply(g, rotation_element(a1));
  out.right_k_invariance = std::abs(phi_lift(f, gk) - phi_lift(f, g));

  // (round trip through the group) f_{phi_f}(p) = phi_f(any representative of p)
  const PointHC p = act_hc(g, kOrigin);
  const GroupElement rep = multiply(section_of_point(p), rotation_element(a2));
  out.roundtrip_hc = std::abs(phi_lift(f, rep) - eval(f, p));

  // (square-root independence) h_f(Y, V) with g_Y versus g_Y k
  const Mat2 Y = g.g * g.g.transpose();
  const RowVec2 V = g.alpha * g.g.transpose();
  out.sqrt_independence = std::abs(h_lift(f, Y, V, 0.0) - h_lift(f, Y, V, a2));

  // (round trip through the matrix chart) f_{h_f}(p) = h_f(g t(g), alpha t(g))
  out.roundtrip_pv = std::abs(h_lift(f, Y, V, a1) - eval(f, p));

  return out;
}

}  // namespace sl21
