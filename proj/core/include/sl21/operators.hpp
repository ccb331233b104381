#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sl21/charts.hpp"
#include "sl21/jet.hpp"
#include "sl21/types.hpp"

namespace sl21 {

// Identifiers for every differential operator the library evaluates.
struct OperatorId {
  enum class Kind {
    D,               // y^2(dxx+dyy) + v^2(duu+dvv) + 2yv(dxu+dyv)
    Psi,             // y(duu+dvv)
    D1,              // third order
    D2,              // third order
    Delta,           // D + Psi (Laplace-Beltrami of ds^2)
    DeltaAlphaBeta,  // (1/alpha) D + (1/beta) Psi
    DeltaTilde,      // Laplace-Beltrami of the matrix chart metric
    Delta0,          // y^2(dxx+dyy) - y dx dtheta + (5/4) dtheta^2 on the group
    BracketDPsi,     // closed form of D Psi - Psi D
    PartialV,        // d/dv: deliberately non-invariant control
    L,               // left-invariant field L_k on the group
    R,               // right-invariant field R_k on the group
    ActionField      // infinitesimal action generator of W_k on H x C
  };

  Kind kind = Kind::Delta;
  double alpha = 1.0, beta = 1.0;  // DeltaAlphaBeta parameters, > 0
  int k = 0;                       // basis index for L / R / ActionField

  Chart chart() const;
  int order() const;  // jet order the operator consumes
  std::string name() const;
  static OperatorId parse(const std::string& text);
};

inline OperatorId op_D() { return {OperatorId::Kind::D}; }
inline OperatorId op_Psi() { return {OperatorId::Kind::Psi}; }
inline OperatorId op_D1() { return {OperatorId::Kind::D1}; }
inline OperatorId op_D2() { return {OperatorId::Kind::D2}; }
inline OperatorId op_Delta() { return {OperatorId::Kind::Delta}; }
OperatorId op_Delta_ab(double alpha, double beta);
inline OperatorId op_Delta_tilde() { return {OperatorId::Kind::DeltaTilde}; }
inline OperatorId op_Delta0() { return {OperatorId::Kind::Delta0}; }
inline OperatorId op_bracket_rhs() { return {OperatorId::Kind::BracketDPsi}; }
inline OperatorId op_partial_v() { return {OperatorId::Kind::PartialV}; }
OperatorId op_L(int k);
OperatorId op_R(int k);
OperatorId op_action_field(int k);

// Plain evaluation (order-0 jets).
std::complex<double> eval(const SmoothMap& f, const PointHC& p);
std::complex<double> eval(const SmoothMap& f, const PointPV& q);
std::complex<double> eval(const SmoothMap& f, const GCoord& c);

// Apply an operator at a point of its chart.
std::complex<double> apply(const OperatorId& op, const SmoothMap& f, const PointHC& p);
std::complex<double> apply(const OperatorId& op, const SmoothMap& f, const PointPV& q);
std::complex<double> apply(const OperatorId& op, const SmoothMap& f, const GCoord& c);

// Jet of (op f) at the base of `xi` (chart coordinate jets of the output
// order); F is the jet of f there, of order xi.order() + op.order().
CJet apply_jet(const OperatorId& op, const CJet& F, std::span<const CJet> xi);

// (op f) wrapped as a SmoothMap: evaluating it on coordinate jets of order m
// differentiates f to order m + op.order() and transports the result.  This
// is what makes operator composition (e.g. D applied to Psi f) work without
// symbolic algebra.
SmoothMap wrap_operator(const OperatorId& op, SmoothMap f);

// Both sides of the commutator identity at p: lhs = (D Psi - Psi D) f by
// nested jet transport on an order-4 jet, rhs = the closed third-order form.
struct CommutatorCheck {
  std::complex<double> lhs, rhs;
};
CommutatorCheck commutator_check(const SmoothMap& f, const PointHC& p);

// Curve-derivative oracles: d/dt|_0 of f along the one-parameter motion,
// computed with 1-variable jets straight through the group arithmetic and
// the NAK extraction -- fully independent of the closed-form coefficients.
std::complex<double> left_field_oracle(int k, const SmoothMap& f, const GCoord& c);
std::complex<double> right_field_oracle(int k, const SmoothMap& f, const GCoord& c);
std::complex<double> action_field_oracle(int k, const SmoothMap& f, const PointHC& p);

// Normalized invariance residual |op(f . phi_a)(p) - (op f)(phi_a p)| with
// mixed absolute/relative scaling.
double invariance_residual(const OperatorId& op, const SmoothMap& f, const GroupElement& a,
                           const PointHC& p);
double invariance_residual(const OperatorId& op, const SmoothMap& f, const GroupElement& a,
                           const PointPV& q);
// Left translation (and right rotation when theta0 != 0) on the group chart.
double invariance_residual_g1(const OperatorId& op, const SmoothMap& f, const Mat2& h,
                              double theta0, const GCoord& c);

struct EigenReport {
  std::complex<double> lambda;
  double max_residual = 0;
  int samples = 0;
};

// residual = max_p |op f(p) - lambda f(p)| / (1 + |lambda f(p)|)
EigenReport eigen_check(const OperatorId& op, const SmoothMap& f, std::complex<double> lambda,
                        std::span<const PointHC> points);

}  // namespace sl21
