#pragma once

// Test-side K-Bessel oracle, independent of the library's quadrature: the
// defining integral folded onto (0, 1] and integrated by adaptive Simpson.
//   K_s(z) = (1/2) int_0^1 exp(-(z/2)(t + 1/t)) (t^(s-1) + t^(-s-1)) dt

#include <cmath>
#include <complex>

namespace sl21_test {

inline std::complex<double> folded_integrand(std::complex<double> s, std::complex<double> z,
                                             double t) {
  using C = std::complex<double>;
  return std::exp(-0.5 * z * (t + 1.0 / t)) *
         (std::pow(C(t), s - 1.0) + std::pow(C(t), -s - 1.0));
}

inline std::complex<double> simpson_rec(std::complex<double> s, std::complex<double> z, double a,
                                        double b, std::complex<double> fa, std::complex<double> fm,
                                        std::complex<double> fb, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const std::complex<double> flm = folded_integrand(s, z, lm), frm = folded_integrand(s, z, rm);
  const std::complex<double> left = (fa + 4.0 * flm + fm) * ((m - a) / 6.0);
  const std::complex<double> right = (fm + 4.0 * frm + fb) * ((b - m) / 6.0);
  const std::complex<double> whole = (fa + 4.0 * fm + fb) * ((b - a) / 6.0);
  if (depth > 0 && std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  if (depth <= 0) return left + right;
  return simpson_rec(s, z, a, m, fa, flm, fm, tol / 2, depth - 1) +
         simpson_rec(s, z, m, b, fm, frm, fb, tol / 2, depth - 1);
}

inline std::complex<double> bessel_oracle(std::complex<double> s, std::complex<double> z) {
  double t_min = 0.5;
  while (t_min > 1e-12 &&
         0.5 * z.real() / t_min - (std::abs(s.real()) + 1) * std::abs(std::log(t_min)) < 70.0)
    t_min *= 0.5;
  const auto fa = folded_integrand(s, z, t_min);
  const auto fb = folded_integrand(s, z, 1.0);
  const auto fm = folded_integrand(s, z, 0.5 * (t_min + 1.0));
  return 0.5 * simpson_rec(s, z, t_min, 1.0, fa, fm, fb, 1e-14, 40);
}

}  // namespace sl21_test
