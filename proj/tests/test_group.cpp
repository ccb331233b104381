#include <doctest.h>

#include <cmath>

#include "sl21/group.hpp"
#include "sl21/rng.hpp"

using namespace sl21;

namespace {

Mat2 m2(double a, double b, double c, double d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

RowVec2 rv(double a, double b) {
  RowVec2 r;
  r << a, b;
  return r;
}

double gdiff(const GroupElement& a, const GroupElement& b) {
  return std::max((a.g - b.g).cwiseAbs().maxCoeff(), (a.alpha - b.alpha).cwiseAbs().maxCoeff());
}

GroupElement random_el(Rng& rng) {
  for (;;) {
    Mat2 g;
    g << rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2);
    const double det = g.determinant();
    if (det > 0.1) return GroupElement(g / std::sqrt(det), rv(rng.uniform(-2, 2), rng.uniform(-2, 2)));
  }
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("construction enforces det and trace invariants") {
    CHECK_THROWS_AS(GroupElement(m2(2, 0, 0, 1), rv(0, 0)), std::invalid_argument);
    CHECK_NOTHROW(GroupElement(m2(2, 0, 0, 0.5), rv(1, 2)));
    CHECK_THROWS_AS(LieElement::from_matrix(m2(1, 0, 0, 1), rv(0, 0)), std::invalid_argument);
    const LieElement u = LieElement::from_matrix(m2(0.3, 1, 2, -0.3), rv(1, 2));
    CHECK(u.X().trace() == 0.0);  // exact by construction
    CHECK_THROWS_AS(PointHC(0, -1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(PointPV(0, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(GCoord(0, 1, 6.30, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BasisIndex(6), std::invalid_argument);
  }

  TEST_CASE("multiply: identity, subgroup, and the worked product") {
    Rng rng(7);
    const GroupElement b = random_el(rng);
    CHECK(gdiff(multiply(GroupElement::identity(), b), b) == 0.0);

    // alpha stays zero on the SL(2,R) subgroup
    const GroupElement g1(m2(1, 2, 0.5, 2), rv(0, 0));
    const GroupElement g2(m2(0, -1, 1, 0), rv(0, 0));
    CHECK(multiply(g1, g2).alpha.cwiseAbs().maxCoeff() == 0.0);

    // g=(1 1;0 1), a=(1,0); h=(1 0;1 1), b=(0,1) -> ((2 1;1 1), (1,0))
    const GroupElement lhs(m2(1, 1, 0, 1), rv(1, 0));
    const GroupElement rhs(m2(1, 0, 1, 1), rv(0, 1));
    const GroupElement prod = multiply(lhs, rhs);
    CHECK(gdiff(prod, GroupElement(m2(2, 1, 1, 1), rv(1, 0))) < 1e-15);
  }

  TEST_CASE("inverse") {
    CHECK(gdiff(inverse(GroupElement::identity()), GroupElement::identity()) == 0.0);
    // pure translation
    CHECK(gdiff(inverse(GroupElement(Mat2::Identity(), rv(3, 5))),
                GroupElement(Mat2::Identity(), rv(-3, -5))) == 0.0);
    // ((1 1;0 1),(1,0))^-1: solving (g,a)*x = e gives ((1 -1;0 1), (-1,0))
    const GroupElement a(m2(1, 1, 0, 1), rv(1, 0));
    const GroupElement ainv = inverse(a);
    CHECK(gdiff(ainv, GroupElement(m2(1, -1, 0, 1), rv(-1, 0))) < 1e-15);
    CHECK(gdiff(multiply(a, ainv), GroupElement::identity()) < 1e-15);
    CHECK(gdiff(multiply(ainv, a), GroupElement::identity()) < 1e-15);

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      const GroupElement b = random_el(rng);
      CHECK(gdiff(multiply(b, inverse(b)), GroupElement::identity()) < 1e-12);
    }
  }

  TEST_CASE("act_hc: stabilizer, translations, and the inversion example") {
    // K fixes the origin (i, 0)
    for (double th : {0.3, 1.7, 4.4}) {
      const PointHC p = act_hc(rotation_element(th), PointHC(0, 1, 0, 0));
      CHECK(std::abs(p.x) < 1e-15);
      CHECK(std::abs(p.y - 1) < 1e-15);
      CHECK(std::abs(p.u) < 1e-15);
      CHECK(std::abs(p.v) < 1e-15);
    }
    // (E, (a1,a2)) sends (tau, z) to (tau, z + a1 tau + a2)
    const PointHC q = act_hc(GroupElement(Mat2::Identity(), rv(2, -1)), PointHC(0.5, 2, 1, 1));
    CHECK(q.x == 0.5);
    CHECK(q.y == 2);
    CHECK(std::abs(q.u - (1 + 2 * 0.5 - 1)) < 1e-15);
    CHECK(std::abs(q.v - (1 + 2 * 2)) < 1e-15);
    // g=(0 1;-1 0) on (2i, z0): direct substitution gives (i/2, i z0 / 2)
    const std::complex<double> z0(0.7, -0.4);
    const PointHC r = act_hc(GroupElement(m2(0, 1, -1, 0), rv(0, 0)),
                             PointHC(0, 2, z0.real(), z0.imag()));
    const std::complex<double> zi = std::complex<double>(0, 1) * z0 / 2.0;
    CHECK(std::abs(r.x) < 1e-15);
    CHECK(std::abs(r.y - 0.5) < 1e-15);
    CHECK(std::abs(r.u - zi.real()) < 1e-15);
    CHECK(std::abs(r.v - zi.imag()) < 1e-15);
  }

  TEST_CASE("act_pv: identity, translation, and the diagonal example") {
    const PointPV q(0.3, 1.4, -0.2, 0.9);
    CHECK(std::abs(act_pv(GroupElement::identity(), q).x - q.x) < 1e-15);
    const PointPV t = act_pv(GroupElement(Mat2::Identity(), rv(1, 2)), q);
    CHECK(std::abs(t.v1 - (q.v1 + 1)) < 1e-15);
    CHECK(std::abs(t.v2 - (q.v2 + 2)) < 1e-15);
    // g = diag(2, 1/2) on Y = E2, V = (1,1): Y' = diag(4, 1/4), V' = (2, 1/2)
    const PointPV e2(0, 1, 1, 1);
    const PointPV im = act_pv(GroupElement(m2(2, 0, 0, 0.5), rv(0, 0)), e2);
    CHECK(std::abs(im.x) < 1e-15);
    CHECK(std::abs(im.y - 0.25) < 1e-15);  // Y' = diag(4, 1/4) has 1/y' = 4
    CHECK(std::abs(im.v1 - 2.0) < 1e-15);
    CHECK(std::abs(im.v2 - 0.5) < 1e-15);
    CHECK(std::abs(im.Y().determinant() - 1.0) < 1e-14);
  }

  TEST_CASE("map_T and its inverse") {
    const PointHC origin = map_T(PointPV(0, 1, 0, 0));
    CHECK(origin.x == 0);
    CHECK(origin.y == 1);
    CHECK(origin.u == 0);
    CHECK(origin.v == 0);
    // (x,y,v1,v2) = (1,2,3,4) -> tau = 1+2i, z = 3(1+2i)+4 = 7+6i
    const PointHC p = map_T(PointPV(1, 2, 3, 4));
    CHECK(p.x == 1);
    CHECK(p.y == 2);
    CHECK(p.u == 7);
    CHECK(p.v == 6);
    // inverse leg: v1 = v/y, v2 = u - x v / y
    const PointPV q = map_T_inv(PointHC(0.7, 1.6, -0.9, 1.1));
    CHECK(std::abs(q.v1 - 1.1 / 1.6) < 1e-15);
    CHECK(std::abs(q.v2 - (-0.9 - 0.7 * 1.1 / 1.6)) < 1e-15);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
      const PointPV w(rng.uniform(-3, 3), rng.uniform(0.2, 4), rng.uniform(-3, 3),
                      rng.uniform(-3, 3));
      const PointPV back = map_T_inv(map_T(w));
      CHECK(std::abs(back.x - w.x) < 1e-12);
      CHECK(std::abs(back.y - w.y) < 1e-12);
      CHECK(std::abs(back.v1 - w.v1) < 1e-12);
      CHECK(std::abs(back.v2 - w.v2) < 1e-12);
    }
  }

  TEST_CASE("section through g_Y") {
    CHECK(gdiff(section_gY(PointPV(0, 1, 0, 0)), GroupElement::identity()) == 0.0);
    const GroupElement s = section_gY(PointPV(0, 4, 0, 0));
    CHECK(gdiff(s, GroupElement(m2(0.5, 0, 0, 2), rv(0, 0))) < 1e-15);
    // alpha_{Y,V} = V t(g_Y)^-1 and the section hits T(Y,V) from the origin
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
      const PointPV q(rng.uniform(-2, 2), rng.uniform(0.3, 3), rng.uniform(-2, 2),
                      rng.uniform(-2, 2));
      const GroupElement sec = section_gY(q);
      CHECK((sec.g * sec.g.transpose() - q.Y()).cwiseAbs().maxCoeff() < 1e-12);
      const RowVec2 alpha = q.V() * sec.g.inverse().transpose();
      CHECK((sec.alpha - alpha).cwiseAbs().maxCoeff() < 1e-13);
      const PointHC hit = act_hc(sec, PointHC(0, 1, 0, 0));
      const PointHC want = map_T(q);
      CHECK(std::abs(hit.x - want.x) < 1e-12);
      CHECK(std::abs(hit.y - want.y) < 1e-12);
      CHECK(std::abs(hit.u - want.u) < 1e-12);
      CHECK(std::abs(hit.v - want.v) < 1e-12);
    }
  }

  TEST_CASE("bracket relations") {
    auto is = [](const LieElement& got, const LieElement& want) {
      return (got.coords() - want.coords()).cwiseAbs().maxCoeff() == 0.0;
    };
    CHECK(is(lie_bracket(basis_W(1), basis_W(2)), basis_W(3)));
    CHECK(is(lie_bracket(basis_W(2), basis_W(4)), basis_W(5)));
    CHECK(is(lie_bracket(basis_W(3), basis_W(1)), basis_W(1) * 2.0));
    const LieElement u(0.4, -1, 2, 0.3, 1.2);
    CHECK(lie_bracket(u, u).coords().cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("exp_lie closed forms and a Cayley-Hamilton oracle") {
    CHECK(gdiff(exp_lie(basis_W(4) * 0.8), GroupElement(Mat2::Identity(), rv(0.8, 0))) < 1e-15);
    CHECK(gdiff(exp_lie(basis_W(3) * 0.6),
                GroupElement(m2(std::exp(0.6), 0, 0, std::exp(-0.6)), rv(0, 0))) < 1e-13);

    // independent oracle: for M = [[-t(X),0],[Z,0]], M restricted to the 2x2
    // block satisfies B^2 = -det(B) I, so exp B = c0 I + c1 B and the alpha
    // row is Z (c1 I + c2 B) with c_k the analytic cosh/sinhc coefficients.
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
      const LieElement u(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                         rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
      const Mat2 B = -u.X().transpose();
      const double mu2 = -B.determinant();
      double c0, c1, c2;  // cosh(mu), sinh(mu)/mu, (cosh(mu)-1)/mu^2
      if (std::abs(mu2) < 1e-8) {
        c0 = 1 + mu2 / 2 + mu2 * mu2 / 24;
        c1 = 1 + mu2 / 6 + mu2 * mu2 / 120;
        c2 = 0.5 + mu2 / 24 + mu2 * mu2 / 720;
      } else if (mu2 > 0) {
        const double mu = std::sqrt(mu2);
        c0 = std::cosh(mu);
        c1 = std::sinh(mu) / mu;
        c2 = (std::cosh(mu) - 1) / mu2;
      } else {
        const double om = std::sqrt(-mu2);
        c0 = std::cos(om);
        c1 = std::sin(om) / om;
        c2 = (std::cos(om) - 1) / mu2;
      }
      const Mat2 E = c0 * Mat2::Identity() + c1 * B;
      const RowVec2 alpha = u.Z * (c1 * Mat2::Identity() + c2 * B);
      const GroupElement want(E.inverse().transpose(), alpha);
      CHECK(gdiff(exp_lie(u), want) < 1e-11);
    }
  }

  TEST_CASE("killing form values and properties") {
    CHECK(killing_form(basis_W(4), basis_W(5)) == 0.0);
    CHECK(killing_form(basis_W(3), basis_W(3)) == doctest::Approx(10.0));
    CHECK(killing_form(basis_W(1), basis_W(2)) == doctest::Approx(5.0));
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
      const LieElement u(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                         rng.uniform(-2, 2), rng.uniform(-2, 2));
      const LieElement w(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                         rng.uniform(-2, 2), rng.uniform(-2, 2));
      CHECK(killing_form(u, w) == doctest::Approx(killing_form(w, u)).epsilon(1e-13));
      CHECK(std::abs(killing_form(u, w) - killing_form_trace_oracle(u, w)) < 1e-12);
    }
  }

  TEST_CASE("adjoint representation") {
    Rng rng(29);
    const LieElement u(0.7, -0.2, 1.1, 0.4, -0.8);
    // Ad(identity) is the identity map
    CHECK((adjoint(GroupElement::identity(), u).coords() - u.coords()).cwiseAbs().maxCoeff() ==
          0.0);
    // Ad((E, a))(X, Z) = (X, Z - a t(X))
    const RowVec2 a = rv(1.5, -2.0);
    const LieElement tr = adjoint(GroupElement(Mat2::Identity(), a), u);
    CHECK((tr.X() - u.X()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((tr.Z - (u.Z - a * u.X().transpose())).cwiseAbs().maxCoeff() < 1e-15);
    // on p with k in K: Ad(k)(X,Z) = (k X t(k), Z t(k))
    for (int i = 0; i < 50; ++i) {
      const double c1 = rng.uniform(-2, 2), c2 = rng.uniform(-2, 2);
      const LieElement w(c1, c2, c2, rng.uniform(-2, 2), rng.uniform(-2, 2));
      const double th = rng.uniform(0, 6.28);
      const Mat2 k = rotation(th);
      const LieElement got = adjoint(rotation_element(th), w);
      const Mat2 wantX = k * w.X() * k.transpose();
      const RowVec2 wantZ = w.Z * k.transpose();
      CHECK((got.X() - wantX).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((got.Z - wantZ).cwiseAbs().maxCoeff() < 1e-14);
    }
    // Ad is a bracket homomorphism and preserves the Killing form
    for (int i = 0; i < 100; ++i) {
      const GroupElement g = random_el(rng);
      const LieElement p(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                         rng.uniform(-2, 2), rng.uniform(-2, 2));
      const LieElement q(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                         rng.uniform(-2, 2), rng.uniform(-2, 2));
      const auto lhs = adjoint(g, lie_bracket(p, q)).coords();
      const auto rhs = lie_bracket(adjoint(g, p), adjoint(g, q)).coords();
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(std::abs(killing_form(adjoint(g, p), adjoint(g, q)) - killing_form(p, q)) < 1e-10);
    }
  }

  TEST_CASE("iwasawa decomposition") {
    const GCoord id = iwasawa(GroupElement::identity());
    CHECK(id.x == 0);
    CHECK(id.y == 1);
    CHECK(id.theta == 0);
    const GCoord ex = iwasawa(GroupElement(m2(2, 1, 0, 0.5), rv(0, 0)));
    CHECK(std::abs(ex.x - 2) < 1e-15);
    CHECK(std::abs(ex.y - 4) < 1e-15);
    CHECK(std::abs(ex.theta) < 1e-15);
    for (double th : {0.2, 3.3, 6.1}) {
      const GCoord kc = iwasawa(rotation_element(th));
      CHECK(std::abs(kc.theta - th) < 1e-12);
      CHECK(std::abs(kc.y - 1) < 1e-13);
    }
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
      const GroupElement g = random_el(rng);
      const GCoord c = iwasawa(g);
      CHECK(c.y > 0);
      CHECK(c.theta >= 0);
      CHECK(c.theta < 2 * 3.14159265358979323846 + 1e-15);
      CHECK(gdiff(compose_iwasawa(c), g) < 1e-12);
    }
  }

  TEST_CASE("root space checks") {
    const int want[] = {2, -2, 0, 1, -1};
    for (int k = 1; k <= 5; ++k) {
      const auto r = root_space_check(basis_W(3), basis_W(k));
      CHECK(r.is_eigenvector);
      CHECK(r.eigenvalue == doctest::Approx(want[k - 1]));
    }
    const auto mixed = root_space_check(basis_W(3), basis_W(1) + basis_W(4));
    CHECK_FALSE(mixed.is_eigenvector);
    CHECK(mixed.residual > 0.1);
    CHECK_THROWS_AS(root_space_check(basis_W(1), basis_W(4)), std::invalid_argument);
  }

  TEST_CASE("invariant polynomials") {
    const auto a = invariant_polynomials(LieElement(1, 0, 0, 0, 0));
    CHECK(a.P == doctest::Approx(0.25));
    CHECK(a.xi == 0.0);
    CHECK(a.P1 == 0.0);
    CHECK(a.P2 == 0.0);
    const auto b = invariant_polynomials(LieElement(0, 0, 0, 1, 0));
    CHECK(b.P == 0.0);
    CHECK(b.xi == doctest::Approx(1.0));
    // rejects elements outside p
    CHECK_THROWS_AS(invariant_polynomials(LieElement(0, 1, 0, 0, 0)), std::invalid_argument);
    // worked cubic values: X = (a b; b -a), Z = (z1, z2)
    const auto c = invariant_polynomials(LieElement(0.5, -1.2, -1.2, 0.3, 0.7));
    CHECK(c.P1 == doctest::Approx(0.5 * (0.49 - 0.09) * 0.5 - 0.3 * 0.7 * (-1.2)));
    CHECK(c.P2 == doctest::Approx(0.5 * (0.49 - 0.09) * (-1.2) + 0.3 * 0.7 * 0.5));
  }

  TEST_CASE("gamma generators") {
    const auto gens = gamma_generators();
    REQUIRE(gens.size() == 4);
    for (const auto& g : gens) CHECK(std::abs(g.g.determinant() - 1.0) < 1e-15);
    // S^2 = -E acts trivially on H x C through the quotient by +-E
    const GroupElement S2 = multiply(gens[0], gens[0]);
    CHECK((S2.g + Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  }
}
