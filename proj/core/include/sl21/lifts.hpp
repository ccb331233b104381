#pragma once

#include <complex>

#include "sl21/jet.hpp"
#include "sl21/types.hpp"

namespace sl21 {

// Lifts between functions on H x C, on the group, and on SP_2 x R^(1,2):
//   phi_f(g, a)  = f((g, a) o (i, 0))
//   h_f(Y, V)    = f((g, V t(g)^-1) o (i, 0)) for any g with Y = g t(g)
// and the reconstruction maps f_phi, f_h.

std::complex<double> phi_lift(const SmoothMap& f, const GroupElement& g);

// h_f evaluated with the square root g_Y * k(k_angle) of Y.
std::complex<double> h_lift(const SmoothMap& f, const Mat2& Y, const RowVec2& V, double k_angle);

struct LiftResiduals {
  double right_k_invariance = 0;   // phi_f(g k) = phi_f(g)
  double roundtrip_hc = 0;         // f_{phi_f} = f
  double sqrt_independence = 0;    // h_f independent of the square root of Y
  double roundtrip_pv = 0;         // f_{h_f} = f
};

// All four lift identities at one sample: `g` is a generic group element,
// whose image g o (i,0) is the H x C sample point; a1, a2 pick the K-twists.
LiftResiduals lift_residuals(const SmoothMap& f, const GroupElement& g, double a1, double a2);

}  // namespace sl21
