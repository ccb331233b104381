#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>

#include "sl21/jet.hpp"

using namespace sl21;
using C = std::complex<double>;

namespace {

// Tensorized central-difference oracle with two Richardson levels.  Test-side
// twin of the library's own FD cross-check; independent of the jet path.
template <class F>
C fd_once(F&& f, std::span<const double> p, std::span<const int> mi, double h) {
  static const std::vector<std::vector<std::pair<int, double>>> st = {
      {{0, 1.0}},
      {{-1, -0.5}, {1, 0.5}},
      {{-1, 1.0}, {0, -2.0}, {1, 1.0}},
      {{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}},
      {{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}}};
  std::vector<std::size_t> idx(mi.size(), 0);
  C acc(0);
  for (;;) {
    double w = 1;
    std::vector<double> q(p.begin(), p.end());
    for (std::size_t v = 0; v < mi.size(); ++v) {
      const auto& [off, c] = st[static_cast<std::size_t>(mi[v])][idx[v]];
      w *= c;
      q[v] += off * h;
    }
    acc += w * f(q);
    std::size_t v = 0;
    for (; v < mi.size(); ++v) {
      if (++idx[v] < st[static_cast<std::size_t>(mi[v])].size()) break;
      idx[v] = 0;
    }
    if (v == mi.size()) break;
  }
  int total = 0;
  for (int m : mi) total += m;
  return acc / std::pow(h, total);
}

template <class F>
C fd_oracle(F&& f, std::span<const double> p, std::span<const int> mi) {
  int total = 0;
  for (int m : mi) total += m;
  if (total == 0) return f(std::vector<double>(p.begin(), p.end()));
  const double h = total <= 2 ? 5e-3 : 5e-2;
  const C a0 = fd_once(f, p, mi, h), a1 = fd_once(f, p, mi, h / 2), a2 = fd_once(f, p, mi, h / 4);
  const C b0 = (4.0 * a1 - a0) / 3.0, b1 = (4.0 * a2 - a1) / 3.0;
  return (16.0 * b1 - b0) / 15.0;
}

}  // namespace

TEST_SUITE("jet") {
  TEST_CASE("seed basics") {
    const std::array<double, 2> base{0.0, 1.0};
    const CJet x = CJet::seed(base, 0, 2);
    CHECK(x.value() == C(0.0));
    CHECK(x.partial({1, 0}) == C(1.0));
    CHECK(x.partial({0, 1}) == C(0.0));
    CHECK(x.partial({2, 0}) == C(0.0));

    // (x + dx)^2 has a unit coefficient on dx^2
    const CJet sq = x * x;
    CHECK(sq.partial({2, 0}) == C(2.0));

    CHECK_THROWS_AS(CJet::seed(base, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(CJet::seed(base, 0, 0), std::invalid_argument);
  }

  TEST_CASE("derivative extraction of x^3 at 2") {
    const std::array<double, 1> base{2.0};
    const CJet x = CJet::seed(base, 0, 3);
    const CJet f = x * x * x;
    CHECK(f.value() == C(8.0));
    CHECK(std::abs(f.partial({1}) - C(12.0)) < 1e-14);
    CHECK(std::abs(f.partial({2}) - C(12.0)) < 1e-14);
    CHECK(std::abs(f.partial({3}) - C(6.0)) < 1e-14);
    std::array<int, 1> over{4};
    CHECK_THROWS_AS((void)f.partial(std::span<const int>(over.data(), 1)), std::out_of_range);
  }

  TEST_CASE("multiplication identities") {
    const std::array<double, 2> base{0.7, -0.2};
    const CJet x = CJet::seed(base, 0, 4);
    const CJet one = x.constant_like(C(1));
    const CJet a = sin(x) * exp(x);
    const CJet a1 = a * one;
    for (int pos = 0; pos < a.table_size(); ++pos) CHECK(a1.coeff(pos) == a.coeff(pos));

    // (1 + dx)(1 - dx) = 1 - dx^2 exactly in truncated arithmetic
    CJet onep = one, onem = one;
    onep += (x - C(0.7));
    onem -= (x - C(0.7));
    const CJet prod = onep * onem;
    CHECK(prod.value() == C(1.0));
    CHECK(prod.partial({1, 0}) == C(0.0));
    CHECK(prod.partial({2, 0}) == C(-2.0));
    CHECK(prod.partial({3, 0}) == C(0.0));
    CHECK(prod.partial({4, 0}) == C(0.0));
  }

  TEST_CASE("product of sin and cos matches the jet of sin*cos") {
    // analytic oracle: sin x cos x = sin(2x)/2
    const std::array<double, 1> base{0.7};
    const CJet x = CJet::seed(base, 0, 4);
    const CJet prod = sin(x) * cos(x);
    const double t = 2 * 0.7;
    const double d[5] = {0.5 * std::sin(t), std::cos(t), -2 * std::sin(t), -4 * std::cos(t),
                         8 * std::sin(t)};
    for (int k = 0; k <= 4; ++k) {
      std::array<int, 1> mi{k};
      CHECK(std::abs(prod.partial(std::span<const int>(mi.data(), 1)) - C(d[k])) < 1e-13);
    }
  }

  TEST_CASE("elementary functions") {
    const std::array<double, 1> zero{0.0};
    CHECK(exp(CJet::constant(zero, 3, C(0.0))).value() == C(1.0));

    // power(a, 3) at value 2, order 2: value 8, first coefficient 12, second 6
    const std::array<double, 1> two{2.0};
    const CJet a = CJet::seed(two, 0, 2);
    const CJet p = pow(a, C(3.0));
    CHECK(std::abs(p.value() - C(8.0)) < 1e-13);
    CHECK(std::abs(p.coeff(1) - C(12.0)) < 1e-13);
    CHECK(std::abs(p.coeff(2) - C(6.0)) < 1e-13);

    // log(exp(b)) is the identity jet
    const std::array<double, 1> pt{0.4};
    const CJet x = CJet::seed(pt, 0, 4);
    const CJet b = C(0.9) * x + C(0.3);
    const CJet le = log(exp(b));
    for (int pos = 0; pos < b.table_size(); ++pos)
      CHECK(std::abs(le.coeff(pos) - b.coeff(pos)) < 1e-13);

    const CJet r = sqrt(x);
    const CJet r2 = r * r;
    for (int pos = 0; pos < x.table_size(); ++pos)
      CHECK(std::abs(r2.coeff(pos) - x.coeff(pos)) < 1e-12);

    CHECK_THROWS_AS((void)log(CJet::constant(pt, 2, C(0.0))), std::domain_error);
    CHECK_THROWS_AS((void)pow(RJet::constant(pt, 2, -1.0), 0.5), std::domain_error);
  }

  TEST_CASE("extract_partial on polynomials") {
    const std::array<double, 2> base{1.0, 1.0};
    const CJet x = CJet::seed(base, 0, 3);
    const CJet y = CJet::seed(base, 1, 3);
    const CJet f = x * x * y;
    CHECK(std::abs(f.value() - C(1.0)) < 1e-15);
    CHECK(std::abs(f.partial({2, 1}) - C(2.0)) < 1e-15);
    const CJet g = x * y;
    CHECK(std::abs(g.partial({1, 1}) - C(1.0)) < 1e-15);
  }

  TEST_CASE("division and reciprocal") {
    const std::array<double, 1> pt{1.7};
    const CJet x = CJet::seed(pt, 0, 4);
    const CJet q = (x * x + C(1.0)) / (x + C(2.0));
    const double xv = 1.7;
    const double want0 = (xv * xv + 1) / (xv + 2);
    const double want1 = (2 * xv * (xv + 2) - (xv * xv + 1)) / ((xv + 2) * (xv + 2));
    CHECK(std::abs(q.value() - C(want0)) < 1e-14);
    CHECK(std::abs(q.partial({1}) - C(want1)) < 1e-13);
    const CJet back = q * (x + C(2.0));
    const CJet want = x * x + C(1.0);
    for (int pos = 0; pos < x.table_size(); ++pos)
      CHECK(std::abs(back.coeff(pos) - want.coeff(pos)) < 1e-13);
    CHECK_THROWS_AS((void)reciprocal(CJet::constant(pt, 2, C(0.0))), std::domain_error);
  }

  TEST_CASE("shape and base compatibility is enforced") {
    const std::array<double, 2> b1{0.0, 1.0};
    const std::array<double, 2> b2{0.0, 2.0};
    const std::array<double, 3> b3{0.0, 1.0, 0.0};
    const CJet x1 = CJet::seed(b1, 0, 2);
    const CJet x2 = CJet::seed(b2, 0, 2);
    const CJet x3 = CJet::seed(b3, 0, 2);
    const CJet x1hi = CJet::seed(b1, 0, 3);
    CHECK_THROWS_AS((void)(x1 * x2), std::invalid_argument);
    CHECK_THROWS_AS((void)(x1 * x3), std::invalid_argument);
    CHECK_THROWS_AS((void)(x1 + x1hi), std::invalid_argument);
  }

  TEST_CASE("jets agree with finite differences on compositions") {
    const std::array<double, 3> base{0.3, -0.5, 0.8};
    auto f = [](std::span<const CJet> p) {
      return sin(p[0] + C(2) * p[1]) * exp(C(0.3) * p[2]) + p[0] * p[1] * p[2];
    };
    auto fs = [&f](std::span<const double> q) {
      std::vector<CJet> jets;
      for (std::size_t i = 0; i < q.size(); ++i) jets.push_back(CJet::constant(q, 0, C(q[i])));
      return f(jets).value();
    };
    const auto seeds = seed_coords(base, 4);
    const CJet F = f(seeds);
    for (int pos = 0; pos < F.table_size(); ++pos) {
      const auto& mi8 = F.shape().index(pos);
      std::array<int, 3> mi{mi8[0], mi8[1], mi8[2]};
      const C jv = F.partial(std::span<const int>(mi.data(), 3));
      const C fv = fd_oracle(fs, base, std::span<const int>(mi.data(), 3));
      CHECK(std::abs(jv - fv) <= 1e-6 * (1.0 + std::abs(jv)));
    }
  }

  TEST_CASE("complex scalar jets carry e^{i a x}") {
    const std::array<double, 1> pt{0.35};
    const CJet x = CJet::seed(pt, 0, 3);
    const C ia(0.0, 2.0);
    const CJet f = exp(ia * x);
    const C f0 = std::exp(ia * 0.35);
    CHECK(std::abs(f.value() - f0) < 1e-14);
    CHECK(std::abs(f.partial({1}) - ia * f0) < 1e-13);
    CHECK(std::abs(f.partial({2}) - ia * ia * f0) < 1e-13);
  }

  TEST_CASE("derivative-jet shift") {
    const std::array<double, 2> base{0.4, 1.2};
    const CJet x = CJet::seed(base, 0, 3);
    const CJet y = CJet::seed(base, 1, 3);
    const CJet f = x * x * y + sin(y);
    const CJet fx = f.derivative(0);  // 2xy
    CHECK(std::abs(fx.value() - C(2 * 0.4 * 1.2)) < 1e-14);
    CHECK(std::abs(fx.partial({1, 1}) - C(2.0)) < 1e-14);
  }

  TEST_CASE("compose substitutes inner jets") {
    const std::array<double, 2> inner_base{1.0, 0.5};
    const CJet x = CJet::seed(inner_base, 0, 3);
    const CJet y = CJet::seed(inner_base, 1, 3);
    const CJet a = x + y * y;   // value 1.25
    const CJet b = C(3.0) * x;  // value 3
    const std::array<double, 2> outer_base{1.25, 3.0};
    const CJet A = CJet::seed(outer_base, 0, 3);
    const CJet B = CJet::seed(outer_base, 1, 3);
    const CJet g = A * A * B;
    const std::array<CJet, 2> inner{a, b};
    const CJet composed = compose(g, inner);
    const CJet direct = a * a * b;
    for (int pos = 0; pos < direct.table_size(); ++pos)
      CHECK(std::abs(composed.coeff(pos) - direct.coeff(pos)) < 1e-12);
  }

  TEST_CASE("atan2 jet matches finite differences") {
    const std::array<double, 1> pt{0.3};
    const CJet t = CJet::seed(pt, 0, 2);
    const CJet th = atan2_jet(sin(t) + C(0.2), cos(t) - C(0.5));
    auto fs = [](std::span<const double> q) {
      return C(std::atan2(std::sin(q[0]) + 0.2, std::cos(q[0]) - 0.5));
    };
    CHECK(std::abs(th.value() - fs(pt)) < 1e-14);
    std::array<int, 1> mi{1};
    const C d1 = fd_oracle(fs, pt, std::span<const int>(mi.data(), 1));
    CHECK(std::abs(th.partial({1}) - d1) < 1e-9);
  }
}
