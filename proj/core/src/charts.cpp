#include "sl21/charts.hpp"

#include <cmath>
#include <numbers>

namespace sl21 {

namespace {
using C = std::complex<double>;
constexpr C kI(0.0, 1.0);
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

std::array<CJet, 4> act_hc_jets(const GroupElement& el, std::span<const CJet> p) {
  const double a = el.g(0, 0), b = el.g(0, 1), c = el.g(1, 0), d = el.g(1, 1);
  const CJet tau = p[0] + kI * p[1];
  const CJet z = p[2] + kI * p[3];
  const CJet den = C(a) - C(b) * tau;
  if (std::abs(den.value()) < 1e-14) throw std::domain_error("act_hc_jets: degenerate denominator");
  const CJet tau2 = (C(d) * tau - C(c)) / den;
  const CJet z2 = (z + C(el.alpha(0)) * tau + C(el.alpha(1))) / den;
  return {real_part(tau2), imag_part(tau2), real_part(z2), imag_part(z2)};
}

std::array<CJet, 4> act_pv_jets(const GroupElement& el, std::span<const CJet> q) {
  const CJet& x = q[0];
  const CJet& y = q[1];
  const CJet yinv = reciprocal(y);
  // Y from the det-1 parametrization
  const CJet Y11 = yinv;
  const CJet Y12 = -(x * yinv);
  const CJet Y22 = x * x * yinv + y;
  const double g11 = el.g(0, 0), g12 = el.g(0, 1), g21 = el.g(1, 0), g22 = el.g(1, 1);
  // g Y t(g)
  const CJet A11 = C(g11) * Y11 + C(g12) * Y12;
  const CJet A12 = C(g11) * Y12 + C(g12) * Y22;
  const CJet B11 = A11 * C(g11) + A12 * C(g12);
  const CJet B12 = A11 * C(g21) + A12 * C(g22);
  const CJet y2 = reciprocal(B11);
  const CJet x2 = -(B12 * y2);
  const CJet w1 = q[2] + C(el.alpha(0));
  const CJet w2 = q[3] + C(el.alpha(1));
  const CJet v1 = w1 * C(g11) + w2 * C(g12);
  const CJet v2 = w1 * C(g21) + w2 * C(g22);
  return {x2, y2, v1, v2};
}

std::array<CJet, 4> map_T_jets(std::span<const CJet> q) {
  return {q[0], q[1], q[2] * q[0] + q[3], q[2] * q[1]};
}

std::array<CJet, 5> left_translate_jets(const Mat2& h, std::span<const CJet> co) {
  const CJet& x = co[0];
  const CJet& y = co[1];
  const CJet& th = co[2];
  const CJet r = sqrt(y);
  const CJet rinv = reciprocal(r);
  const CJet ct = cos(th), st = sin(th);
  // entries of n(x) a(y) k(theta)
  const CJet a = r * ct - x * rinv * st;
  const CJet b = r * st + x * rinv * ct;
  const CJet c = -(rinv * st);
  const CJet d = rinv * ct;
  // M = h * g
  const CJet Ma = C(h(0, 0)) * a + C(h(0, 1)) * c;
  const CJet Mb = C(h(0, 0)) * b + C(h(0, 1)) * d;
  const CJet Mc = C(h(1, 0)) * a + C(h(1, 1)) * c;
  const CJet Md = C(h(1, 0)) * b + C(h(1, 1)) * d;
  const CJet y2 = reciprocal(Mc * Mc + Md * Md);
  const CJet x2 = (Ma * Mc + Mb * Md) * y2;
  CJet th2 = atan2_jet(-Mc, Md);
  if (th2.value().real() < 0) th2.coeff(0) += kTwoPi;
  return {x2, y2, th2, co[3], co[4]};
}

std::array<CJet, 5> right_rotate_jets(double theta0, std::span<const CJet> co) {
  CJet th2 = co[2] + C(theta0);
  const double wrapped = std::fmod(th2.value().real(), kTwoPi);
  th2.coeff(0) = C(wrapped < 0 ? wrapped + kTwoPi : wrapped);
  // alpha' = alpha * k(theta0)
  const double ct = std::cos(theta0), st = std::sin(theta0);
  const CJet a1 = co[3] * C(ct) - co[4] * C(st);
  const CJet a2 = co[3] * C(st) + co[4] * C(ct);
  return {co[0], co[1], th2, a1, a2};
}

std::array<double, 4> coords(const PointHC& p) { return {p.x, p.y, p.u, p.v}; }
std::array<double, 4> coords(const PointPV& q) { return {q.x, q.y, q.v1, q.v2}; }
std::array<double, 5> coords(const GCoord& c) { return {c.x, c.y, c.theta, c.alpha1, c.alpha2}; }

SmoothMap pullback_hc(const GroupElement& a, SmoothMap f) {
  return [a, f = std::move(f)](std::span<const CJet> p) {
    const auto q = act_hc_jets(a, p);
    return f(std::span<const CJet>(q.data(), q.size()));
  };
}

SmoothMap pullback_pv(const GroupElement& a, SmoothMap f) {
  return [a, f = std::move(f)](std::span<const CJet> p) {
    const auto q = act_pv_jets(a, p);
    return f(std::span<const CJet>(q.data(), q.size()));
  };
}

SmoothMap pullback_left_g1(const Mat2& h, SmoothMap f) {
  return [h, f = std::move(f)](std::span<const CJet> p) {
    const auto q = left_translate_jets(h, p);
    return f(std::span<const CJet>(q.data(), q.size()));
  };
}

SmoothMap pullback_right_k_g1(double theta0, SmoothMap f) {
  return [theta0, f = std::move(f)](std::span<const CJet> p) {
    const auto q = right_rotate_jets(theta0, p);
    return f(std::span<const CJet>(q.data(), q.size()));
  };
}

}  // namespace sl21
