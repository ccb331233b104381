#pragma once

#include <array>
#include <complex>

#include "sl21/jet.hpp"

namespace sl21 {

// K_s(z) = (1/2) integral_0^inf exp(-(z/2)(t + 1/t)) t^(s-1) dt, Re z > 0.
// Evaluated after t = e^w as (1/2) integral_R exp(-z cosh w + s w) dw: the
// integrand decays doubly exponentially, so the trapezoid rule converges
// geometrically; the step is halved until the result stabilizes.
struct BesselResult {
  std::complex<double> value;
  double error_estimate = 0;  // |change under the last step halving|
  bool converged = false;
};

BesselResult bessel_K_full(std::complex<double> s, std::complex<double> z);
std::complex<double> bessel_K(std::complex<double> s, std::complex<double> z);

// d^m/dz^m K_s(z) by differentiating under the integral sign
// (each z-derivative inserts a factor -cosh w).
std::complex<double> bessel_K_dz(std::complex<double> s, std::complex<double> z, int order);

// K_s composed with a jet-valued argument (value on the positive real axis);
// all derivative moments come from a single quadrature pass.
CJet bessel_K_jet(std::complex<double> s, const CJet& z);

inline constexpr double kBesselParamWindow = 50.0;  // |Re s|, |Im s| supported

}  // namespace sl21
