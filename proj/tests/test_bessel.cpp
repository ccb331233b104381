#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "sl21/bessel.hpp"
#include "sl21/rng.hpp"

using namespace sl21;
using C = std::complex<double>;

namespace {

// Independent oracle: adaptive Simpson on the defining integral folded onto
// (0, 1],  K_s(z) = (1/2) int_0^1 exp(-(z/2)(t + 1/t)) (t^(s-1) + t^(-s-1)) dt.
// Different formula route and different quadrature family than the library.
C folded_integrand(C s, C z, double t) {
  return std::exp(-0.5 * z * (t + 1.0 / t)) *
         (std::pow(C(t), s - 1.0) + std::pow(C(t), -s - 1.0));
}

C simpson_rec(C s, C z, double a, double b, C fa, C fm, C fb, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const C flm = folded_integrand(s, z, lm), frm = folded_integrand(s, z, rm);
  const C left = (fa + 4.0 * flm + fm) * ((m - a) / 6.0);
  const C right = (fm + 4.0 * frm + fb) * ((b - m) / 6.0);
  const C whole = (fa + 4.0 * fm + fb) * ((b - a) / 6.0);
  if (depth > 0 && std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  if (depth <= 0) return left + right;
  return simpson_rec(s, z, a, m, fa, flm, fm, tol / 2, depth - 1) +
         simpson_rec(s, z, m, b, fm, frm, fb, tol / 2, depth - 1);
}

C bessel_oracle(C s, C z) {
  double t_min = 0.5;
  // truncate where the exponential factor alone is below 1e-30
  while (t_min > 1e-12 && 0.5 * z.real() / t_min - (std::abs(s.real()) + 1) * std::abs(std::log(t_min)) < 70.0)
    t_min *= 0.5;
  const C fa = folded_integrand(s, z, t_min);
  const C fb = folded_integrand(s, z, 1.0);
  const C fm = folded_integrand(s, z, 0.5 * (t_min + 1.0));
  return 0.5 * simpson_rec(s, z, t_min, 1.0, fa, fm, fb, 1e-14, 40);
}

}  // namespace

TEST_SUITE("bessel") {
  TEST_CASE("half-integer closed form") {
    // K_{1/2}(z) = sqrt(pi/(2z)) e^-z; at z = 1 this is 0.46106850444789456
    for (const double z : {0.5, 1.0, 2.0, 5.0}) {
      const double want = std::sqrt(std::numbers::pi / (2 * z)) * std::exp(-z);
      CHECK(std::abs(bessel_K(C(0.5), C(z)) - C(want)) <= 1e-10 * want);
    }
    CHECK(bessel_K(C(0.5), C(1.0)).real() == doctest::Approx(0.46106850444789456).epsilon(1e-12));
  }

  TEST_CASE("reference values from an independent high-precision evaluation") {
    // frozen from an arbitrary-precision evaluation of the same integral
    CHECK(bessel_K(C(0.0), C(2.0)).real() ==
          doctest::Approx(0.11389387274953343565).epsilon(1e-11));
    CHECK(bessel_K(C(1.2), C(0.7)).real() ==
          doctest::Approx(1.27660166675284921).epsilon(1e-11));
    const C w = bessel_K(C(0.5, 2.0), C(1.5));
    CHECK(w.real() == doctest::Approx(0.063375520664900424).epsilon(1e-10));
    CHECK(w.imag() == doctest::Approx(0.043041229729663755).epsilon(1e-10));
  }

  TEST_CASE("agreement with the folded-Simpson oracle") {
    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
      const C s(rng.uniform(-4, 4), rng.uniform(-4, 4));
      const C z(rng.uniform(0.4, 8), rng.uniform(-2, 2));
      const C lib = bessel_K(s, z);
      const C orc = bessel_oracle(s, z);
      CHECK(std::abs(lib - orc) <= 1e-10 * (std::abs(lib) + 1e-30));
    }
  }

  TEST_CASE("symmetry in the order") {
    Rng rng(43);
    for (int i = 0; i < 30; ++i) {
      const C s(rng.uniform(-5, 5), rng.uniform(-5, 5));
      const C z(rng.uniform(0.3, 7), rng.uniform(-2, 2));
      const C a = bessel_K(s, z), b = bessel_K(-s, z);
      CHECK(std::abs(a - b) <= 1e-12 * (1 + std::abs(a)));
    }
  }

  TEST_CASE("positive and strictly decreasing on the real axis") {
    double prev = bessel_K(C(0.9), C(0.3)).real();
    CHECK(prev > 0);
    for (double z = 0.5; z < 8.0; z += 0.25) {
      const double cur = bessel_K(C(0.9), C(z)).real();
      CHECK(cur > 0);
      CHECK(cur < prev);
      prev = cur;
    }
  }

  TEST_CASE("derivatives under the integral sign") {
    // closed form: d/dz K_{1/2}(z) at z = 1 is -sqrt(pi/2) e^-1 (3/2)
    const double want = -std::sqrt(std::numbers::pi / 2) * std::exp(-1.0) * 1.5;
    CHECK(bessel_K_dz(C(0.5), C(1.0), 1).real() == doctest::Approx(want).epsilon(1e-10));
    // symmetry passes to derivatives
    CHECK(std::abs(bessel_K_dz(C(1.3), C(2.0), 1) - bessel_K_dz(C(-1.3), C(2.0), 1)) < 1e-12);
    // order 2 against central differences of the function itself
    Rng rng(47);
    for (int i = 0; i < 10; ++i) {
      const C s(rng.uniform(-2, 2), rng.uniform(-1, 1));
      const double z = rng.uniform(0.8, 4);
      const double h = 1e-4 * z;
      const C fd2 = (bessel_K(s, C(z + h)) - 2.0 * bessel_K(s, C(z)) + bessel_K(s, C(z - h))) /
                    (h * h);
      CHECK(std::abs(bessel_K_dz(s, C(z), 2) - fd2) <= 1e-6 * (1 + std::abs(fd2)));
    }
  }

  TEST_CASE("jet evaluation is consistent with the moment derivatives") {
    const std::array<double, 1> base{1.7};
    const CJet z = CJet::seed(base, 0, 2);
    const C s(0.8, 0.5);
    const CJet k = bessel_K_jet(s, z);
    CHECK(std::abs(k.value() - bessel_K(s, C(1.7))) < 1e-14);
    CHECK(std::abs(k.partial({1}) - bessel_K_dz(s, C(1.7), 1)) < 1e-13);
    CHECK(std::abs(k.partial({2}) - bessel_K_dz(s, C(1.7), 2)) < 1e-13);
  }

  TEST_CASE("error estimate is honest") {
    // halving the step changes the result by less than the reported estimate
    Rng rng(53);
    for (int i = 0; i < 10; ++i) {
      const C s(rng.uniform(-3, 3), rng.uniform(-3, 3));
      const C z(rng.uniform(0.5, 6), rng.uniform(-1, 1));
      const BesselResult r = bessel_K_full(s, z);
      CHECK(r.converged);
      CHECK(r.error_estimate <= 1e-12 * (1 + std::abs(r.value)));
    }
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS((void)bessel_K(C(0.5), C(-1.0)), std::domain_error);
    CHECK_THROWS_AS((void)bessel_K(C(0.5), C(0.0)), std::domain_error);
    CHECK_THROWS_AS((void)bessel_K(C(60.0), C(1.0)), std::domain_error);
    CHECK_THROWS_AS((void)bessel_K_dz(C(0.5), C(1.0), 7), std::invalid_argument);
  }
}
