#pragma once

#include <optional>
#include <vector>

#include "sl21/types.hpp"

namespace sl21 {

// --- group operations -------------------------------------------------------

// (g,a)*(h,b) = (gh, a t(h)^-1 + b)
GroupElement multiply(const GroupElement& a, const GroupElement& b);
// (g,a)^-1 = (g^-1, -a t(g))
GroupElement inverse(const GroupElement& a);

// (g,a) o (tau, z) = ((d tau - c)(-b tau + a)^-1, (z + a1 tau + a2)(-b tau + a)^-1)
PointHC act_hc(const GroupElement& a, const PointHC& p);
// (g,a) . (Y, V) = (g Y t(g), (V + a) t(g)), re-expressed in (x, y, v1, v2)
PointPV act_pv(const GroupElement& a, const PointPV& q);

// T(Y, V) = (x + iy, v1 (x + iy) + v2) and its inverse leg
PointHC map_T(const PointPV& q);
PointPV map_T_inv(const PointHC& p);

// Section of the quotient: (g_Y, a_{Y,V}) with g_Y t(g_Y) = Y and
// (g_Y, a_{Y,V}) o (i, 0) = T(Y, V).
GroupElement section_gY(const PointPV& q);

// Element with (g, alpha) o (i, 0) = p (built through the section).
GroupElement section_of_point(const PointHC& p);

// --- Lie algebra -------------------------------------------------------------

// [(X1,Z1),(X2,Z2)] = ([X1,X2], Z2 t(X1) - Z1 t(X2))
LieElement lie_bracket(const LieElement& a, const LieElement& b);

// exp through the faithful 3x3 embedding (g,a) -> [[t(g)^-1, 0],[a, 1]],
// with scaling-and-squaring on [[-t(X), 0],[Z, 0]].
GroupElement exp_lie(const LieElement& u);

// B((X1,Z1),(X2,Z2)) = 5 tr(X1 X2)
double killing_form(const LieElement& a, const LieElement& b);

// Ad((g,a))(X,Z) = (g X g^-1, (Z - a t(X)) t(g))
LieElement adjoint(const GroupElement& a, const LieElement& u);

// NAK coordinates; recomposing n(x) a(y) k(theta) with alpha reproduces the input.
GCoord iwasawa(const GroupElement& a);
GroupElement compose_iwasawa(const GCoord& c);

// Basis W1..W5 and friends.
LieElement basis_W(int k);
Mat2 rotation(double theta);              // k(theta) in K = SO(2)
GroupElement rotation_element(double theta);

// Generators of SL(2,Z) x| Z^(1,2): S, T, and the two lattice translations.
std::vector<GroupElement> gamma_generators();

// Eigenvalue report for [H, u] = lambda u with H in the Cartan line R W3.
struct RootSpaceResult {
  double eigenvalue = 0;       // best least-squares eigenvalue
  double residual = 0;         // |[H,u] - eigenvalue*u| / |u|
  bool is_eigenvector = false; // residual below tolerance
};
RootSpaceResult root_space_check(const LieElement& H, const LieElement& u, double tol = 1e-9);

// K-invariant generators of Pol(p)^K evaluated on u = (X, Z) with X = (a b; b -a):
// P = (a^2 + b^2)/4, xi = z1^2 + z2^2,
// P1 = (z2^2 - z1^2) a / 2 - z1 z2 b, P2 = (z2^2 - z1^2) b / 2 + z1 z2 a.
struct InvariantPolynomials {
  double P, xi, P1, P2;
};
InvariantPolynomials invariant_polynomials(const LieElement& u);

// 5x5 matrix of ad(u) in the W basis (columns: ad(u) W_k).
Eigen::Matrix<double, 5, 5> ad_matrix(const LieElement& u);

// Trace-form oracle B(u, w) = tr(ad u . ad w), computed from structure
// constants; equals the closed form with no extra factor.
double killing_form_trace_oracle(const LieElement& a, const LieElement& b);

}  // namespace sl21
