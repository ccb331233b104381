#include "sl21/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sl21 {

namespace {

using C = std::complex<double>;

void check_domain(C s, C z) {
  if (!(z.real() > 0)) throw std::domain_error("bessel_K: Re z must be positive");
  if (std::abs(s.real()) > kBesselParamWindow || std::abs(s.imag()) > kBesselParamWindow)
    throw std::domain_error("bessel_K: order outside the supported window");
}

// Half-width W with exp(-Re z (cosh W - 1) + |Re s| W) < 1e-20: truncating
// there keeps the dropped tail far below the target accuracy.
double truncation_width(C s, C z) {
  const double a = z.real();
  const double b = std::abs(s.real());
  double w = 1.0;
  while (a * (std::cosh(w) - 1.0) - b * w < 46.0 && w < 30.0) w += 0.25;
  return w;
}

struct Moments {
  std::array<C, kMaxJetOrder + 1> m{};  // (1/2) int (-cosh w)^k exp(-z cosh w + s w) dw
  double error_estimate = 0;
  bool converged = false;
};

Moments moments(C s, C z, int max_order) {
  check_domain(s, z);
  const double W = truncation_width(s, z);
  Moments out;
  std::array<C, kMaxJetOrder + 1> prev{};
  int n = 64;
  for (int pass = 0; pass < 8; ++pass, n *= 2) {
    const double h = 2.0 * W / n;
    std::array<C, kMaxJetOrder + 1> acc{};
    for (int i = 0; i <= n; ++i) {
      const double w = -W + i * h;
      const double weight = (i == 0 || i == n) ? 0.5 : 1.0;
      const double ch = std::cosh(w);
      const C e = std::exp(-z * ch + s * w);
      C p = e * weight;
      for (int k = 0; k <= max_order; ++k) {
        acc[k] += p;
        p *= -ch;
      }
    }
    for (int k = 0; k <= max_order; ++k) acc[k] *= 0.5 * h;
    if (pass > 0) {
      double change = 0, scale = 0;
      for (int k = 0; k <= max_order; ++k) {
        change = std::max(change, std::abs(acc[k] - prev[k]));
        scale = std::max(scale, std::abs(acc[k]));
      }
      out.error_estimate = change;
      if (change <= 1e-13 * (scale + 1e-300)) {
        out.m = acc;
        out.converged = true;
        return out;
      }
    }
    prev = acc;
  }
  out.m = prev;
  out.converged = false;
  return out;
}

}  // namespace

BesselResult bessel_K_full(C s, C z) {
  const Moments mo = moments(s, z, 0);
  return {mo.m[0], mo.error_estimate, mo.converged};
}

C bessel_K(C s, C z) { return bessel_K_full(s, z).value; }

C bessel_K_dz(C s, C z, int order) {
  if (order < 0 || order > kMaxJetOrder) throw std::invalid_argument("bessel_K_dz: bad order");
  return moments(s, z, order).m[static_cast<std::size_t>(order)];
}

CJet bessel_K_jet(C s, const CJet& z) {
  const C z0 = z.value();
  const Moments mo = moments(s, z0, z.order());
  std::vector<C> taylor(static_cast<std::size_t>(z.order()) + 1);
  double fact = 1;
  for (int k = 0; k <= z.order(); ++k) {
    if (k > 0) fact *= k;
    taylor[static_cast<std::size_t>(k)] = mo.m[static_cast<std::size_t>(k)] / fact;
  }
  return compose_series(z, taylor);
}

}  // namespace sl21
