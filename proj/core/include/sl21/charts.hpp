#pragma once

#include <array>

#include "sl21/jet.hpp"
#include "sl21/types.hpp"

namespace sl21 {

// Jet transports of the chart maps.  Each takes the coordinate jets of a
// point and returns the coordinate jets of its image, so composing a
// SmoothMap with an action is just f(pushforward(jets)).

// (x,y,u,v) -> action of (g, alpha) on H x C
std::array<CJet, 4> act_hc_jets(const GroupElement& a, std::span<const CJet> p);

// (x,y,v1,v2) -> action of (g, alpha) on SP_2 x R^(1,2)
std::array<CJet, 4> act_pv_jets(const GroupElement& a, std::span<const CJet> q);

// (x,y,v1,v2) -> (x,y,u,v) through T(Y,V) = (x+iy, v1(x+iy)+v2)
std::array<CJet, 4> map_T_jets(std::span<const CJet> q);

// NAK coordinates of h * g(x,y,theta); alpha coordinates are untouched by
// left translation.
std::array<CJet, 5> left_translate_jets(const Mat2& h, std::span<const CJet> c);

// Right translation by (k(theta0), 0): theta shift and alpha rotation.
std::array<CJet, 5> right_rotate_jets(double theta0, std::span<const CJet> c);

// Chart coordinates as a flat vector (for seeding).
std::array<double, 4> coords(const PointHC& p);
std::array<double, 4> coords(const PointPV& q);
std::array<double, 5> coords(const GCoord& c);

// f composed with the H x C action of `a`, as a SmoothMap.
SmoothMap pullback_hc(const GroupElement& a, SmoothMap f);
SmoothMap pullback_pv(const GroupElement& a, SmoothMap f);
SmoothMap pullback_left_g1(const Mat2& h, SmoothMap f);
SmoothMap pullback_right_k_g1(double theta0, SmoothMap f);

}  // namespace sl21
