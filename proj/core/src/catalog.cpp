#include "sl21/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sl21/bessel.hpp"

namespace sl21 {

namespace {
using C = std::complex<double>;
constexpr C kI(0.0, 1.0);
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

CatalogEntry catalog_entry(const std::string& id, C s, double a) {
  CatalogEntry e;
  e.id = id;
  if (id == "whittaker") {
    if (a == 0.0) throw std::invalid_argument("catalog: whittaker entry needs a != 0");
    const C nu = s - 0.5;
    const double freq = kTwoPi * std::abs(a);
    e.eigenvalue = s * (s - 1.0);
    e.f = [nu, freq, a](std::span<const CJet> p) {
      const CJet& x = p[0];
      const CJet& y = p[1];
      return sqrt(y) * bessel_K_jet(nu, C(freq) * y) * exp(kI * C(kTwoPi * a) * x);
    };
    return e;
  }
  if (id == "y^s" || id == "y^s*x" || id == "y^s*u") {
    e.eigenvalue = s * (s - 1.0);
    const int extra = (id == "y^s") ? -1 : (id == "y^s*x") ? 0 : 2;
    e.f = [s, extra](std::span<const CJet> p) {
      CJet r = pow(p[1], s);
      if (extra >= 0) r = r * p[static_cast<std::size_t>(extra)];
      return r;
    };
    return e;
  }
  if (id == "y^s*v" || id == "y^s*u*v" || id == "y^s*x*v") {
    e.eigenvalue = s * (s + 1.0);
    const int extra = (id == "y^s*v") ? -1 : (id == "y^s*u*v") ? 2 : 0;
    e.f = [s, extra](std::span<const CJet> p) {
      CJet r = pow(p[1], s) * p[3];
      if (extra >= 0) r = r * p[static_cast<std::size_t>(extra)];
      return r;
    };
    return e;
  }
  e.eigenvalue = C(0.0);
  if (id == "x") e.f = [](std::span<const CJet> p) { return p[0]; };
  else if (id == "y") e.f = [](std::span<const CJet> p) { return p[1]; };
  else if (id == "u") e.f = [](std::span<const CJet> p) { return p[2]; };
  else if (id == "v") e.f = [](std::span<const CJet> p) { return p[3]; };
  else if (id == "x*v") e.f = [](std::span<const CJet> p) { return p[0] * p[3]; };
  else if (id == "u*v") e.f = [](std::span<const CJet> p) { return p[2] * p[3]; };
  else throw std::invalid_argument("catalog: unknown entry '" + id + "'");
  return e;
}

std::vector<std::string> catalog_ids() {
  return {"whittaker", "y^s", "y^s*x", "y^s*u", "y^s*v", "y^s*u*v",
          "y^s*x*v",   "x",   "y",     "u",     "v",     "x*v",    "u*v"};
}

}  // namespace sl21
