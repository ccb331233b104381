#include <doctest.h>

#include <cmath>

#include "sl21/charts.hpp"
#include "sl21/group.hpp"
#include "sl21/metric.hpp"
#include "sl21/operators.hpp"
#include "sl21/rng.hpp"

using namespace sl21;
using C = std::complex<double>;

namespace {

GroupElement random_el(Rng& rng) {
  for (;;) {
    Mat2 g;
    g << rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2);
    const double det = g.determinant();
    if (det > 0.1) {
      RowVec2 a;
      a << rng.uniform(-2, 2), rng.uniform(-2, 2);
      return GroupElement(g / std::sqrt(det), a);
    }
  }
}

}  // namespace

TEST_SUITE("metric") {
  TEST_CASE("coefficients at the origin and the stated determinant") {
    const MetricField ds2 = metric_ds2();
    const std::array<double, 4> origin{0, 1, 0, 0};
    CHECK((metric_eval(ds2, origin) - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <
          1e-15);
    // det(g_ij) = y^-6: at y = 2 the determinant is 2^-6 = 0.015625
    const std::array<double, 4> p{0.7, 2.0, -1.3, 0.4};
    CHECK(metric_eval(ds2, p).determinant() == doctest::Approx(0.015625).epsilon(1e-12));
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
      const std::array<double, 4> q{rng.uniform(-5, 5), rng.uniform(0.2, 5), rng.uniform(-5, 5),
                                    rng.uniform(-5, 5)};
      CHECK(std::abs(metric_eval(ds2, q).determinant() * std::pow(q[1], 6) - 1.0) < 1e-12);
      CHECK(is_positive_definite(metric_eval(ds2, q)));
    }
  }

  TEST_CASE("displayed inverse entries") {
    const MetricField ds2 = metric_ds2();
    const std::array<double, 4> origin{0, 1, 0, 0};
    CHECK((metric_inverse(ds2, origin) - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <
          1e-14);
    const std::array<double, 4> p{0.0, 2.0, 0.0, 3.0};  // (y, v) = (2, 3)
    const Eigen::MatrixXd gi = metric_inverse(ds2, p);
    CHECK(gi(0, 2) == doctest::Approx(6.0).epsilon(1e-12));   // y v
    CHECK(gi(2, 2) == doctest::Approx(11.0).epsilon(1e-12));  // y + v^2
    const Eigen::MatrixXd prod = metric_eval(ds2, p) * gi;
    CHECK((prod - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("matrix-chart metric block") {
    const MetricField dst = metric_ds_tilde();
    const std::array<double, 4> p{0, 1, 0.6, -0.2};
    const Eigen::MatrixXd g = metric_eval(dst, p);
    CHECK(g(2, 2) == doctest::Approx(1.0));
    CHECK(g(3, 3) == doctest::Approx(1.0));
    CHECK(g(2, 3) == doctest::Approx(0.0));
  }

  TEST_CASE("positive-definiteness detection") {
    Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(3, 3);
    bad(2, 2) = -0.5;
    CHECK_FALSE(is_positive_definite(bad));
    CHECK(is_positive_definite(Eigen::MatrixXd::Identity(3, 3)));
  }

  TEST_CASE("pullback invariance and sensitivity") {
    Rng rng(5);
    const MetricField ds2 = metric_ds2();
    // identity pulls back to an exact zero residual
    const std::array<double, 4> p0{0.4, 1.3, -0.6, 0.8};
    CHECK(pullback_residual(ds2, GroupElement::identity(), p0) < 1e-14);
    double worst = 0, control = 0;
    const MetricField bad = metric_ds2_perturbed();
    for (int i = 0; i < 60; ++i) {
      const GroupElement a = random_el(rng);
      const std::array<double, 4> p{rng.uniform(-2, 2), rng.uniform(0.4, 3), rng.uniform(-2, 2),
                                    rng.uniform(-2, 2)};
      const PointHC hp(p[0], p[1], p[2], p[3]);
      const PointHC im = act_hc(a, hp);
      if (im.y < 0.05 || std::abs(im.x) > 40 || std::abs(im.u) > 40 || std::abs(im.v) > 40)
        continue;
      worst = std::max(worst, pullback_residual(ds2, a, p));
      control = std::max(control, pullback_residual(bad, a, p));
    }
    CHECK(worst <= 1e-9);
    CHECK(control > 1e-3);
  }

  TEST_CASE("laplace-beltrami assembly matches the closed forms") {
    Rng rng(7);
    const MetricField ds2 = metric_ds2();
    // f = y^s reproduces s(s-1) y^s through the assembly route
    const C s(1.6, 0.0);
    const SmoothMap ys = [s](std::span<const CJet> q) { return pow(q[1], s); };
    for (int i = 0; i < 20; ++i) {
      const std::array<double, 4> p{rng.uniform(-2, 2), rng.uniform(0.4, 3), rng.uniform(-2, 2),
                                    rng.uniform(-2, 2)};
      const C got = laplace_from_metric(ds2, ys, p);
      const C want = s * (s - 1.0) * std::pow(p[1], 1.6);
      CHECK(std::abs(got - want) <= 1e-8 * (1 + std::abs(want)));
    }
    // constant on the matrix chart
    const MetricField dst = metric_ds_tilde();
    const SmoothMap one = [](std::span<const CJet> q) { return q[0].constant_like(C(1)); };
    const std::array<double, 4> q0{0.3, 1.4, 0.2, -0.7};
    CHECK(std::abs(laplace_from_metric(dst, one, q0)) < 1e-12);
    // the two-parameter family agrees with (1/a) D + (1/b) Psi
    const SmoothMap f = [](std::span<const CJet> q) {
      return exp(-q[1] - q[3] * q[3]) * cos(q[0] + q[2]);
    };
    for (const double al : {0.5, 2.0}) {
      for (const double be : {0.5, 1.0}) {
        const MetricField m = metric_ds_alpha_beta(al, be);
        for (int i = 0; i < 10; ++i) {
          const std::array<double, 4> p{rng.uniform(-2, 2), rng.uniform(0.4, 3),
                                        rng.uniform(-2, 2), rng.uniform(-2, 2)};
          const PointHC hp(p[0], p[1], p[2], p[3]);
          const C lhs = laplace_from_metric(m, f, p);
          const C rhs = C(1 / al) * apply(op_D(), f, hp) + C(1 / be) * apply(op_Psi(), f, hp);
          CHECK(std::abs(lhs - rhs) <= 1e-8 * (1 + std::abs(rhs)));
        }
      }
    }
  }

  TEST_CASE("scalar curvature") {
    const MetricField ds2 = metric_ds2();
    const std::array<double, 4> origin{0, 1, 0, 0};
    CHECK(scalar_curvature(ds2, origin).scalar_curvature == doctest::Approx(-3.0).epsilon(1e-9));
    const std::array<double, 4> p{1.3, 0.4, -2.0, 5.0};
    CHECK(scalar_curvature(ds2, p).scalar_curvature == doctest::Approx(-3.0).epsilon(1e-8));
    const MetricField h2 = metric_hyperbolic_2d();
    const std::array<double, 2> q{0.7, 1.9};
    CHECK(scalar_curvature(h2, q).scalar_curvature == doctest::Approx(-2.0).epsilon(1e-10));
  }

  TEST_CASE("T is an isometry") {
    CHECK(isometry_residual_T(PointPV(0, 1, 0, 0)) < 1e-15);
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
      const PointPV q(rng.uniform(-3, 3), rng.uniform(0.25, 4), rng.uniform(-3, 3),
                      rng.uniform(-3, 3));
      CHECK(isometry_residual_T(q) <= 1e-10);
    }
  }

  TEST_CASE("matrix trace form") {
    // at Y = E2: dV = (1,0), dY = 0 gives 1
    const PointPV e2(0, 1, 0, 0);
    CHECK(matrix_metric_form(e2, Eigen::Vector4d(0, 0, 1, 0)) == doctest::Approx(1.0));
    // dY = diag(eps, -eps) arises from dy = -eps at (x,y) = (0,1); the form
    // value is (1/2) tr(diag(eps,-eps)^2) = eps^2
    const double eps = 0.35;
    CHECK(matrix_metric_form(e2, Eigen::Vector4d(0, -eps, 0, 0)) ==
          doctest::Approx(eps * eps).epsilon(1e-12));
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
      const PointPV q(rng.uniform(-2, 2), rng.uniform(0.3, 3), rng.uniform(-2, 2),
                      rng.uniform(-2, 2));
      const Eigen::Vector4d t(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                              rng.uniform(-1, 1));
      CHECK(matrix_form_residual(q, t) <= 1e-10);
    }
  }

  TEST_CASE("chart violations are reported") {
    const MetricField ds2 = metric_ds2();
    const std::array<double, 4> bad{0, -1, 0, 0};
    CHECK_THROWS(metric_eval(ds2, bad));
    const std::array<double, 3> wrong_dim{0, 1, 0};
    CHECK_THROWS_AS(metric_eval(ds2, wrong_dim), std::invalid_argument);
  }
}
