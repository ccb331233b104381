#include "sl21/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sl21/group.hpp"

namespace sl21 {

namespace {

using C = std::complex<double>;
constexpr C kI(0.0, 1.0);

CJet djet(const CJet& F, std::initializer_list<int> vars, int ord) {
  CJet r = F;
  for (int v : vars) r = r.derivative(v);
  return r.truncated(ord);
}

std::vector<CJet> chart_jets(std::span<const double> coords, int order) {
  std::vector<CJet> out;
  out.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    out.push_back(order == 0 ? CJet::constant(coords, 0, C(coords[i]))
                             : CJet::seed(coords, static_cast<int>(i), order));
  }
  return out;
}

// First-order field with coefficient jets built by `coeffs`.
CJet first_order_field(const CJet& F, std::span<const CJet> xi, std::span<const CJet> coeffs,
                       int ord) {
  CJet r = xi[0].constant_like(C(0));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    r += coeffs[j] * djet(F, {static_cast<int>(j)}, ord);
  }
  return r;
}

std::vector<CJet> left_field_coeffs(int k, std::span<const CJet> xi) {
  const CJet& y = xi[1];
  const CJet& th = xi[2];
  const CJet& a1 = xi[3];
  const CJet& a2 = xi[4];
  const CJet zero = y.constant_like(C(0));
  const CJet one = y.constant_like(C(1));
  switch (k) {
    case 1:
      return {y * cos(C(2) * th), y * sin(C(2) * th), sin(th) * sin(th), -a2, zero};
    case 2:
      return {y * cos(C(2) * th), y * sin(C(2) * th), -(cos(th) * cos(th)), zero, -a1};
    case 3:
      return {C(-2) * y * sin(C(2) * th), C(2) * y * cos(C(2) * th), sin(C(2) * th), -a1, a2};
    case 4:
      return {zero, zero, zero, one, zero};
    case 5:
      return {zero, zero, zero, zero, one};
    default:
      throw std::invalid_argument("left field index out of range");
  }
}

std::vector<CJet> right_field_coeffs(int k, std::span<const CJet> xi) {
  const CJet& x = xi[0];
  const CJet& y = xi[1];
  const CJet& th = xi[2];
  const CJet zero = y.constant_like(C(0));
  const CJet one = y.constant_like(C(1));
  switch (k) {
    case 1:
      return {one, zero, zero, zero, zero};
    case 2:
      return {y * y - x * x, C(-2) * x * y, -y, zero, zero};
    case 3:
      return {C(2) * x, C(2) * y, zero, zero, zero};
    case 4: {
      const CJet ry = pow(y, C(-0.5));
      return {zero, zero, zero, ry * cos(th), ry * sin(th)};
    }
    case 5: {
      const CJet ry = pow(y, C(-0.5));
      return {zero, zero, zero, -(ry * (x * cos(th) + y * sin(th))),
              ry * (y * cos(th) - x * sin(th))};
    }
    default:
      throw std::invalid_argument("right field index out of range");
  }
}

std::vector<CJet> action_field_coeffs(int k, std::span<const CJet> xi) {
  const CJet& x = xi[0];
  const CJet& y = xi[1];
  const CJet& u = xi[2];
  const CJet& v = xi[3];
  const CJet zero = y.constant_like(C(0));
  const CJet one = y.constant_like(C(1));
  switch (k) {
    case 1:
      return {x * x - y * y, C(2) * x * y, x * u - y * v, y * u + x * v};
    case 2:
      return {-one, zero, zero, zero};
    case 3:
      return {C(-2) * x, C(-2) * y, -u, -v};
    case 4:
      return {zero, zero, x, y};
    case 5:
      return {zero, zero, one, zero};
    default:
      throw std::invalid_argument("action field index out of range");
  }
}

}  // namespace

Chart OperatorId::chart() const {
  switch (kind) {
    case Kind::DeltaTilde: return Chart::PV;
    case Kind::Delta0:
    case Kind::L:
    case Kind::R: return Chart::G1;
    default: return Chart::HC;
  }
}

int OperatorId::order() const {
  switch (kind) {
    case Kind::D1:
    case Kind::D2:
    case Kind::BracketDPsi: return 3;
    case Kind::PartialV:
    case Kind::L:
    case Kind::R:
    case Kind::ActionField: return 1;
    default: return 2;
  }
}

std::string OperatorId::name() const {
  switch (kind) {
    case Kind::D: return "D";
    case Kind::Psi: return "Psi";
    case Kind::D1: return "D1";
    case Kind::D2: return "D2";
    case Kind::Delta: return "Delta";
    case Kind::DeltaAlphaBeta:
      return "DeltaAB(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
    case Kind::DeltaTilde: return "DeltaTilde";
    case Kind::Delta0: return "Delta0";
    case Kind::BracketDPsi: return "bracketRHS";
    case Kind::PartialV: return "dv";
    case Kind::L: return "L" + std::to_string(k);
    case Kind::R: return "R" + std::to_string(k);
    case Kind::ActionField: return "A" + std::to_string(k);
  }
  return "?";
}

OperatorId OperatorId::parse(const std::string& text) {
  if (text == "D") return op_D();
  if (text == "Psi") return op_Psi();
  if (text == "D1") return op_D1();
  if (text == "D2") return op_D2();
  if (text == "Delta") return op_Delta();
  if (text == "DeltaTilde") return op_Delta_tilde();
  if (text == "Delta0") return op_Delta0();
  if (text == "DeltaAB") return op_Delta_ab(1.0, 1.0);
  if (text == "bracketRHS") return op_bracket_rhs();
  if (text == "dv") return op_partial_v();
  if (text.size() == 2 && (text[0] == 'L' || text[0] == 'R' || text[0] == 'A') &&
      text[1] >= '1' && text[1] <= '5') {
    const int k = text[1] - '0';
    if (text[0] == 'L') return op_L(k);
    if (text[0] == 'R') return op_R(k);
    return op_action_field(k);
  }
  throw std::invalid_argument("unknown operator '" + text + "'");
}

OperatorId op_Delta_ab(double alpha, double beta) {
  if (!(alpha > 0) || !(beta > 0))
    throw std::invalid_argument("DeltaAlphaBeta: alpha, beta must be positive");
  OperatorId id{OperatorId::Kind::DeltaAlphaBeta};
  id.alpha = alpha;
  id.beta = beta;
  return id;
}

OperatorId op_L(int k) {
  BasisIndex check(k);
  OperatorId id{OperatorId::Kind::L};
  id.k = k;
  return id;
}

OperatorId op_R(int k) {
  BasisIndex check(k);
  OperatorId id{OperatorId::Kind::R};
  id.k = k;
  return id;
}

OperatorId op_action_field(int k) {
  BasisIndex check(k);
  OperatorId id{OperatorId::Kind::ActionField};
  id.k = k;
  return id;
}

CJet apply_jet(const OperatorId& op, const CJet& F, std::span<const CJet> xi) {
  const int ord = xi[0].order();
  if (F.order() < ord + op.order())
    throw std::invalid_argument("apply_jet: jet of f has insufficient order");

  switch (op.kind) {
    case OperatorId::Kind::D: {
      const CJet& y = xi[1];
      const CJet& v = xi[3];
      return y * y * (djet(F, {0, 0}, ord) + djet(F, {1, 1}, ord)) +
             v * v * (djet(F, {2, 2}, ord) + djet(F, {3, 3}, ord)) +
             C(2) * y * v * (djet(F, {0, 2}, ord) + djet(F, {1, 3}, ord));
    }
    case OperatorId::Kind::Psi: {
      const CJet& y = xi[1];
      return y * (djet(F, {2, 2}, ord) + djet(F, {3, 3}, ord));
    }
    case OperatorId::Kind::Delta: {
      const CJet& y = xi[1];
      const CJet& v = xi[3];
      return y * y * (djet(F, {0, 0}, ord) + djet(F, {1, 1}, ord)) +
             (y + v * v) * (djet(F, {2, 2}, ord) + djet(F, {3, 3}, ord)) +
             C(2) * y * v * (djet(F, {0, 2}, ord) + djet(F, {1, 3}, ord));
    }
    case OperatorId::Kind::DeltaAlphaBeta: {
      const CJet& y = xi[1];
      const CJet& v = xi[3];
      const C ia(1.0 / op.alpha), ib(1.0 / op.beta);
      return ia * (y * y * (djet(F, {0, 0}, ord) + djet(F, {1, 1}, ord)) +
                   v * v * (djet(F, {2, 2}, ord) + djet(F, {3, 3}, ord)) +
                   C(2) * y * v * (djet(F, {0, 2}, ord) + djet(F, {1, 3}, ord))) +
             ib * y * (djet(F, {2, 2}, ord) + djet(F, {3, 3}, ord));
    }
    case OperatorId::Kind::D1: {
      const CJet& y = xi[1];
      const CJet& v = xi[3];
      return C(2) * y * y * djet(F, {0, 2, 3}, ord) -
             y * y * (djet(F, {1, 2, 2}, ord) - djet(F, {1, 3, 3}, ord)) +
             v * y * (djet(F, {2, 2, 3}, ord) + djet(F, {3, 3, 3}, ord)) +
             y * (djet(F, {2, 2}, ord) + djet(F, {3, 3}, ord));
    }
    case OperatorId::Kind::D2: {
      const CJet& y = xi[1];
      const CJet& v = xi[3];
      return y * y * (djet(F, {0, 3, 3}, ord) - djet(F, {0, 2, 2}, ord)) -
             C(2) * y * y * djet(F, {1, 2, 3}, ord) -
             v * y * (djet(F, {2, 2, 2}, ord) + djet(F, {2, 3, 3}, ord));
    }
    case OperatorId::Kind::BracketDPsi: {
      const CJet& y = xi[1];
      const CJet& v = xi[3];
      return C(2) * y * y * (djet(F, {1, 2, 2}, ord) - djet(F, {1, 3, 3}, ord)) -
             C(4) * y * y * djet(F, {0, 2, 3}, ord) -
             C(2) * (v * y * (djet(F, {2, 2, 3}, ord) + djet(F, {3, 3, 3}, ord)) +
                     y * (djet(F, {2, 2}, ord) + djet(F, {3, 3}, ord)));
    }
    case OperatorId::Kind::PartialV:
      return djet(F, {3}, ord);
    case OperatorId::Kind::DeltaTilde: {
      const CJet& x = xi[0];
      const CJet& y = xi[1];
      return y * y * (djet(F, {0, 0}, ord) + djet(F, {1, 1}, ord)) +
             reciprocal(y) * (djet(F, {2, 2}, ord) - C(2) * x * djet(F, {2, 3}, ord) +
                              (x * x + y * y) * djet(F, {3, 3}, ord));
    }
    case OperatorId::Kind::Delta0: {
      const CJet& y = xi[1];
      return y * y * (djet(F, {0, 0}, ord) + djet(F, {1, 1}, ord)) - y * djet(F, {0, 2}, ord) +
             C(1.25) * djet(F, {2, 2}, ord);
    }
    case OperatorId::Kind::L: {
      const auto coeffs = left_field_coeffs(op.k, xi);
      return first_order_field(F, xi, coeffs, ord);
    }
    case OperatorId::Kind::R: {
      const auto coeffs = right_field_coeffs(op.k, xi);
      return first_order_field(F, xi, coeffs, ord);
    }
    case OperatorId::Kind::ActionField: {
      const auto coeffs = action_field_coeffs(op.k, xi);
      return first_order_field(F, xi, coeffs, ord);
    }
  }
  throw std::logic_error("apply_jet: unhandled operator");
}

namespace {

std::complex<double> apply_impl(const OperatorId& op, const SmoothMap& f,
                                std::span<const double> co) {
  const auto seeds = seed_coords(co, op.order());
  const CJet F = f(seeds);
  const auto xi = chart_jets(co, 0);
  return apply_jet(op, F, xi).value();
}

void require_chart(const OperatorId& op, Chart c) {
  if (op.chart() != c) throw std::invalid_argument("operator " + op.name() + ": wrong chart");
}

}  // namespace

std::complex<double> eval(const SmoothMap& f, const PointHC& p) {
  const auto co = coords(p);
  return f(chart_jets(co, 0)).value();
}
std::complex<double> eval(const SmoothMap& f, const PointPV& q) {
  const auto co = coords(q);
  return f(chart_jets(co, 0)).value();
}
std::complex<double> eval(const SmoothMap& f, const GCoord& c) {
  const auto co = coords(c);
  return f(chart_jets(co, 0)).value();
}

std::complex<double> apply(const OperatorId& op, const SmoothMap& f, const PointHC& p) {
  require_chart(op, Chart::HC);
  return apply_impl(op, f, coords(p));
}
std::complex<double> apply(const OperatorId& op, const SmoothMap& f, const PointPV& q) {
  require_chart(op, Chart::PV);
  return apply_impl(op, f, coords(q));
}
std::complex<double> apply(const OperatorId& op, const SmoothMap& f, const GCoord& c) {
  require_chart(op, Chart::G1);
  return apply_impl(op, f, coords(c));
}

SmoothMap wrap_operator(const OperatorId& op, SmoothMap f) {
  return [op, f = std::move(f)](std::span<const CJet> in) -> CJet {
    const int m = in[0].order();
    const int total = m + op.order();
    if (total > kMaxJetOrder)
      throw std::invalid_argument("wrap_operator: composed order exceeds the jet cap");
    std::vector<double> q(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) q[i] = in[i].value().real();
    const auto seeds = seed_coords(q, total);
    const CJet F = f(seeds);
    const auto xi = chart_jets(q, m);
    const CJet G = apply_jet(op, F, xi);
    return compose(G, in);
  };
}

CommutatorCheck commutator_check(const SmoothMap& f, const PointHC& p) {
  CommutatorCheck r;
  const SmoothMap psi_f = wrap_operator(op_Psi(), f);
  const SmoothMap d_f = wrap_operator(op_D(), f);
  r.lhs = apply(op_D(), psi_f, p) - apply(op_Psi(), d_f, p);
  r.rhs = apply(op_bracket_rhs(), f, p);
  return r;
}

namespace {

// One-parameter subgroups (h(t), beta(t)) = exp(t W_k) as 1-variable jets.
struct CurveElement {
  CJet h11, h12, h21, h22, b1, b2;
};

CurveElement exp_basis_curve(int k, const CJet& t) {
  const CJet one = t.constant_like(C(1));
  const CJet zero = t.constant_like(C(0));
  CurveElement e{one, zero, zero, one, zero, zero};
  switch (k) {
    case 1: e.h12 = t; break;
    case 2: e.h21 = t; break;
    case 3:
      e.h11 = exp(t);
      e.h22 = exp(-t);
      break;
    case 4: e.b1 = t; break;
    case 5: e.b2 = t; break;
    default: throw std::invalid_argument("exp_basis_curve: k out of range");
  }
  return e;
}

// NAK coordinates of a jet-valued matrix [[a,b],[c,d]].
std::array<CJet, 3> iwasawa_jets(const CJet& a, const CJet& b, const CJet& c, const CJet& d) {
  const CJet y = reciprocal(c * c + d * d);
  const CJet x = (a * c + b * d) * y;
  CJet th = atan2_jet(-c, d);
  if (th.value().real() < 0) th.coeff(0) += C(2.0 * std::numbers::pi);
  return {x, y, th};
}

}  // namespace

std::complex<double> left_field_oracle(int k, const SmoothMap& f, const GCoord& c) {
  const GroupElement g = compose_iwasawa(c);
  const std::array<double, 1> tbase{0.0};
  const CJet t = CJet::seed(tbase, 0, 1);
  const CurveElement e = exp_basis_curve(k, t);
  // matrix part: g.g * h(t)
  const CJet Ma = C(g.g(0, 0)) * e.h11 + C(g.g(0, 1)) * e.h21;
  const CJet Mb = C(g.g(0, 0)) * e.h12 + C(g.g(0, 1)) * e.h22;
  const CJet Mc = C(g.g(1, 0)) * e.h11 + C(g.g(1, 1)) * e.h21;
  const CJet Md = C(g.g(1, 0)) * e.h12 + C(g.g(1, 1)) * e.h22;
  // alpha part: alpha * t(h)^-1 + beta, with t(h)^-1 = [[h22,-h21],[-h12,h11]]
  const CJet A1 = C(g.alpha(0)) * e.h22 - C(g.alpha(1)) * e.h12 + e.b1;
  const CJet A2 = -(C(g.alpha(0)) * e.h21) + C(g.alpha(1)) * e.h11 + e.b2;
  const auto nak = iwasawa_jets(Ma, Mb, Mc, Md);
  const std::array<CJet, 5> co{nak[0], nak[1], nak[2], A1, A2};
  std::array<int, 1> mi{1};
  return f(std::span<const CJet>(co.data(), co.size())).partial(std::span<const int>(mi));
}

std::complex<double> right_field_oracle(int k, const SmoothMap& f, const GCoord& c) {
  const GroupElement g = compose_iwasawa(c);
  const std::array<double, 1> tbase{0.0};
  const CJet t = CJet::seed(tbase, 0, 1);
  const CurveElement e = exp_basis_curve(k, t);
  // matrix part: h(t) * g.g
  const CJet Ma = e.h11 * C(g.g(0, 0)) + e.h12 * C(g.g(1, 0));
  const CJet Mb = e.h11 * C(g.g(0, 1)) + e.h12 * C(g.g(1, 1));
  const CJet Mc = e.h21 * C(g.g(0, 0)) + e.h22 * C(g.g(1, 0));
  const CJet Md = e.h21 * C(g.g(0, 1)) + e.h22 * C(g.g(1, 1));
  // alpha part: beta(t) * t(g)^-1 + alpha
  const Mat2 gti = g.g.inverse().transpose();
  const CJet A1 = e.b1 * C(gti(0, 0)) + e.b2 * C(gti(1, 0)) + C(g.alpha(0));
  const CJet A2 = e.b1 * C(gti(0, 1)) + e.b2 * C(gti(1, 1)) + C(g.alpha(1));
  const auto nak = iwasawa_jets(Ma, Mb, Mc, Md);
  const std::array<CJet, 5> co{nak[0], nak[1], nak[2], A1, A2};
  std::array<int, 1> mi{1};
  return f(std::span<const CJet>(co.data(), co.size())).partial(std::span<const int>(mi));
}

std::complex<double> action_field_oracle(int k, const SmoothMap& f, const PointHC& p) {
  const std::array<double, 1> tbase{0.0};
  const CJet t = CJet::seed(tbase, 0, 1);
  const CurveElement e = exp_basis_curve(k, t);
  const CJet tau = t.constant_like(C(p.x, p.y));
  const CJet z = t.constant_like(C(p.u, p.v));
  const CJet den = e.h11 - e.h12 * tau;
  const CJet tau2 = (e.h22 * tau - e.h21) / den;
  const CJet z2 = (z + e.b1 * tau + e.b2) / den;
  const std::array<CJet, 4> co{real_part(tau2), imag_part(tau2), real_part(z2), imag_part(z2)};
  std::array<int, 1> mi{1};
  return f(std::span<const CJet>(co.data(), co.size())).partial(std::span<const int>(mi));
}

namespace {
double normalized_diff(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}
}  // namespace

double invariance_residual(const OperatorId& op, const SmoothMap& f, const GroupElement& a,
                           const PointHC& p) {
  const C lhs = apply(op, pullback_hc(a, f), p);
  const C rhs = apply(op, f, act_hc(a, p));
  return normalized_diff(lhs, rhs);
}

double invariance_residual(const OperatorId& op, const SmoothMap& f, const GroupElement& a,
                           const PointPV& q) {
  const C lhs = apply(op, pullback_pv(a, f), q);
  const C rhs = apply(op, f, act_pv(a, q));
  return normalized_diff(lhs, rhs);
}

double invariance_residual_g1(const OperatorId& op, const SmoothMap& f, const Mat2& h,
                              double theta0, const GCoord& c) {
  SmoothMap moved = f;
  GCoord image = c;
  if (theta0 != 0.0) {
    moved = pullback_right_k_g1(theta0, std::move(moved));
    const GroupElement r = multiply(compose_iwasawa(image), rotation_element(theta0));
    image = iwasawa(r);
  }
  moved = pullback_left_g1(h, std::move(moved));
  const GroupElement lh =
      multiply(GroupElement(h, RowVec2::Zero()), compose_iwasawa(image));
  image = iwasawa(lh);
  const C lhs = apply(op, moved, c);
  const C rhs = apply(op, f, image);
  return normalized_diff(lhs, rhs);
}

EigenReport eigen_check(const OperatorId& op, const SmoothMap& f, std::complex<double> lambda,
                        std::span<const PointHC> points) {
  EigenReport rep;
  rep.lambda = lambda;
  rep.samples = static_cast<int>(points.size());
  for (const PointHC& p : points) {
    const C lf = lambda * eval(f, p);
    const C of = apply(op, f, p);
    rep.max_residual = std::max(rep.max_residual, std::abs(of - lf) / (1.0 + std::abs(lf)));
  }
  return rep;
}

}  // namespace sl21
