#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sl21/jet.hpp"

namespace sl21 {

// Known Delta-eigenfunctions on H x C with their eigenvalues:
//   whittaker        y^(1/2) K_{s-1/2}(2 pi |a| y) e^(2 pi i a x)   -> s(s-1)
//   y^s, y^s*x, y^s*u                                              -> s(s-1)
//   y^s*v, y^s*u*v, y^s*x*v                                        -> s(s+1)
//   x, y, u, v, x*v, u*v                                           -> 0
struct CatalogEntry {
  std::string id;
  SmoothMap f;
  std::complex<double> eigenvalue;
};

// `a` is the frequency parameter of the whittaker entry (a != 0); integer
// a = n matches the Fourier-side normalization a = 2 pi n / (2 pi).
CatalogEntry catalog_entry(const std::string& id, std::complex<double> s, double a = 1.0);

std::vector<std::string> catalog_ids();

}  // namespace sl21
