#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace sl21 {

inline constexpr int kMaxJetVars = 5;
inline constexpr int kMaxJetOrder = 4;

// Shared bookkeeping for truncated multivariate Taylor tables of a fixed
// (nvars, order) shape: the multi-index enumeration (graded, then lex), the
// Cauchy-product triple list and the index-raising table used to read off
// derivatives.  Instances are built once and cached; jets hold a pointer.
class JetShape {
 public:
  struct MulTriple {
    std::uint16_t a, b, out;
  };

  static const JetShape& get(int nvars, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(index_.size()); }

  const std::array<std::uint8_t, kMaxJetVars>& index(int pos) const { return index_[pos]; }
  int degree(int pos) const { return degree_[pos]; }
  double factorial(int pos) const { return factorial_[pos]; }
  const std::vector<MulTriple>& mul_triples() const { return mul_; }
  // Position of index(pos) + e_var, or -1 past the truncation order.
  int raised(int pos, int var) const { return raise_[pos][var]; }
  // Position of a multi-index, or -1 if it exceeds the truncation order.
  int position(std::span<const int> mi) const;

 private:
  JetShape(int nvars, int order);

  int nvars_, order_;
  std::vector<std::array<std::uint8_t, kMaxJetVars>> index_;
  std::vector<int> degree_;
  std::vector<double> factorial_;
  std::vector<MulTriple> mul_;
  std::vector<std::array<int, kMaxJetVars>> raise_;
  std::vector<int> rank_;  // dense lookup keyed by mixed-radix encoding
  int encode(std::span<const std::uint8_t> mi) const;
};

// Truncated multivariate Taylor expansion of a smooth function about a base
// point.  Coefficients are Taylor coefficients (mixed partial / factorial);
// the degree-0 coefficient is the function value.  The scalar may be double
// or std::complex<double>; base points are always real.
template <class S>
class Jet {
 public:
  Jet() = default;

  static Jet constant(std::span<const double> base, int order, S value) {
    Jet j(static_cast<int>(base.size()), order, base);
    j.c_[0] = value;
    return j;
  }

  // Coordinate jet of variable `var`: value base[var], unit first-order
  // coefficient in slot `var`.
  static Jet seed(std::span<const double> base, int var, int order) {
    if (order < 1) throw std::invalid_argument("Jet::seed: order must be >= 1");
    const int n = static_cast<int>(base.size());
    if (var < 0 || var >= n) throw std::out_of_range("Jet::seed: variable index out of range");
    Jet j(n, order, base);
    j.c_[0] = S(base[var]);
    std::array<int, kMaxJetVars> mi{};
    mi[var] = 1;
    j.c_[j.shape_->position(std::span<const int>(mi.data(), n))] = S(1);
    return j;
  }

  int nvars() const { return shape_->nvars(); }
  int order() const { return shape_->order(); }
  int table_size() const { return shape_->size(); }
  const JetShape& shape() const { return *shape_; }
  const std::vector<double>& base() const { return base_; }

  S value() const { return c_[0]; }
  S coeff(int pos) const { return c_[pos]; }
  S& coeff(int pos) { return c_[pos]; }

  Jet constant_like(S value) const { return constant(base_, order(), value); }
  Jet seed_like(int var) const { return seed(base_, var, order()); }

  // Mixed partial derivative value: coefficient times multi-index factorial.
  S partial(std::span<const int> mi) const {
    const int pos = shape_->position(mi);
    if (pos < 0) throw std::out_of_range("Jet::partial: degree exceeds jet order");
    return c_[pos] * S(shape_->factorial(pos));
  }
  S partial(std::initializer_list<int> mi) const {
    return partial(std::span<const int>(mi.begin(), mi.size()));
  }

  // Jet of d/dx_var at the same base, one order lower.
  Jet derivative(int var) const {
    if (order() < 1) throw std::invalid_argument("Jet::derivative: order 0 jet");
    Jet r(nvars(), order() - 1, base_);
    for (int pos = 0; pos < r.table_size(); ++pos) {
      // same multi-index exists in the finer shape; find it there
      std::array<int, kMaxJetVars> mi{};
      for (int i = 0; i < nvars(); ++i) mi[i] = r.shape_->index(pos)[i];
      const int self = shape_->position(std::span<const int>(mi.data(), nvars()));
      const int up = shape_->raised(self, var);
      r.c_[pos] = c_[up] * S(static_cast<double>(shape_->index(up)[var]));
    }
    return r;
  }

  Jet truncated(int new_order) const {
    if (new_order >= order()) return *this;
    Jet r(nvars(), new_order, base_);
    for (int pos = 0; pos < r.table_size(); ++pos) r.c_[pos] = c_[pos];
    return r;
  }

  Jet& operator+=(const Jet& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator+=(S s) {
    c_[0] += s;
    return *this;
  }
  Jet& operator-=(S s) {
    c_[0] -= s;
    return *this;
  }
  Jet& operator*=(S s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, S s) { return a += s; }
  friend Jet operator+(S s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, S s) { return a -= s; }
  friend Jet operator-(S s, const Jet& a) { return (-a) += s; }
  friend Jet operator*(Jet a, S s) { return a *= s; }
  friend Jet operator*(S s, Jet a) { return a *= s; }
  friend Jet operator-(const Jet& a) {
    Jet r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  // Truncated Cauchy product.
  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check_compatible(b);
    Jet r(a.nvars(), a.order(), a.base_);
    for (const auto& t : a.shape_->mul_triples()) r.c_[t.out] += a.c_[t.a] * b.c_[t.b];
    return r;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
  friend Jet operator/(S s, const Jet& b) { return reciprocal(b) * s; }
  friend Jet operator/(Jet a, S s) { return a *= (S(1) / s); }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  // f(a) for univariate f given by Taylor coefficients about a.value():
  // taylor[k] = f^(k)(a0)/k!.  Exact to the truncation order.
  friend Jet compose_series(const Jet& a, std::span<const S> taylor) {
    Jet da = a;  // perturbation part
    da.c_[0] = S(0);
    Jet r = a.constant_like(taylor[taylor.size() - 1]);
    for (int k = static_cast<int>(taylor.size()) - 2; k >= 0; --k) {
      r = r * da;
      r.c_[0] += taylor[k];
    }
    return r;
  }

  friend Jet reciprocal(const Jet& a) {
    const S a0 = a.value();
    if (a0 == S(0)) throw std::domain_error("jet reciprocal at zero value");
    std::vector<S> t(static_cast<std::size_t>(a.order()) + 1);
    S p = S(1) / a0;
    for (int k = 0; k <= a.order(); ++k) {
      t[k] = p;
      p *= S(-1) / a0;
    }
    return compose_series(a, t);
  }

  friend Jet exp(const Jet& a) {
    using std::exp;
    std::vector<S> t(static_cast<std::size_t>(a.order()) + 1);
    t[0] = exp(a.value());
    for (int k = 1; k <= a.order(); ++k) t[k] = t[k - 1] / S(static_cast<double>(k));
    return compose_series(a, t);
  }

  friend Jet log(const Jet& a) {
    using std::log;
    if (a.value() == S(0)) throw std::domain_error("jet log at zero value");
    std::vector<S> t(static_cast<std::size_t>(a.order()) + 1);
    t[0] = log(a.value());
    S ipow = S(1);
    for (int k = 1; k <= a.order(); ++k) {
      ipow /= a.value();
      t[k] = (k % 2 ? S(1) : S(-1)) * ipow / S(static_cast<double>(k));
    }
    return compose_series(a, t);
  }

  friend Jet sin(const Jet& a) {
    using std::cos;
    using std::sin;
    std::vector<S> t(static_cast<std::size_t>(a.order()) + 1);
    const S s0 = sin(a.value()), c0 = cos(a.value());
    double fact = 1;
    for (int k = 0; k <= a.order(); ++k) {
      if (k > 0) fact *= k;
      const S cyc = (k % 4 == 0) ? s0 : (k % 4 == 1) ? c0 : (k % 4 == 2) ? -s0 : -c0;
      t[k] = cyc / S(fact);
    }
    return compose_series(a, t);
  }

  friend Jet cos(const Jet& a) {
    using std::cos;
    using std::sin;
    std::vector<S> t(static_cast<std::size_t>(a.order()) + 1);
    const S s0 = sin(a.value()), c0 = cos(a.value());
    double fact = 1;
    for (int k = 0; k <= a.order(); ++k) {
      if (k > 0) fact *= k;
      const S cyc = (k % 4 == 0) ? c0 : (k % 4 == 1) ? -s0 : (k % 4 == 2) ? -c0 : s0;
      t[k] = cyc / S(fact);
    }
    return compose_series(a, t);
  }

  // a^w with constant exponent, via the binomial series about a.value().
  friend Jet pow(const Jet& a, S w) {
    using std::pow;
    if constexpr (std::is_same_v<S, double>) {
      if (!(a.value() > 0)) throw std::domain_error("jet pow: base value must be positive");
    } else {
      if (a.value() == S(0)) throw std::domain_error("jet pow: base value must be nonzero");
    }
    std::vector<S> t(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 0; k <= a.order(); ++k) {
      S binom = S(1);
      for (int j = 0; j < k; ++j) binom *= (w - S(static_cast<double>(j))) / S(static_cast<double>(j + 1));
      t[k] = binom * pow(a.value(), w - S(static_cast<double>(k)));
    }
    return compose_series(a, t);
  }

  friend Jet sqrt(const Jet& a) { return pow(a, S(0.5)); }

 private:
  Jet(int nvars, int order, std::span<const double> base)
      : shape_(&JetShape::get(nvars, order)),
        base_(base.begin(), base.end()),
        c_(static_cast<std::size_t>(shape_->size()), S(0)) {}
  Jet(int nvars, int order, std::vector<double> base)
      : shape_(&JetShape::get(nvars, order)),
        base_(std::move(base)),
        c_(static_cast<std::size_t>(shape_->size()), S(0)) {}

  void check_compatible(const Jet& o) const {
    if (shape_ != o.shape_) throw std::invalid_argument("jet shape mismatch");
    if (base_ != o.base_) throw std::invalid_argument("jet base-point mismatch");
  }

  const JetShape* shape_ = nullptr;
  std::vector<double> base_;
  std::vector<S> c_;
};

using RJet = Jet<double>;
using CJet = Jet<std::complex<double>>;

inline CJet complexify(const RJet& a) {
  CJet r = CJet::constant(a.base(), a.order(), std::complex<double>(0));
  for (int pos = 0; pos < a.table_size(); ++pos) r.coeff(pos) = a.coeff(pos);
  return r;
}

// Coefficient-wise real/imaginary parts.  Valid because the underlying
// variables are real, so Re and Im commute with taking Taylor coefficients.
inline CJet real_part(const CJet& a) {
  CJet r = a;
  for (int pos = 0; pos < a.table_size(); ++pos) r.coeff(pos) = a.coeff(pos).real();
  return r;
}
inline CJet imag_part(const CJet& a) {
  CJet r = a;
  for (int pos = 0; pos < a.table_size(); ++pos) r.coeff(pos) = a.coeff(pos).imag();
  return r;
}
inline RJet real_jet(const CJet& a) {
  RJet r = RJet::constant(a.base(), a.order(), 0.0);
  for (int pos = 0; pos < a.table_size(); ++pos) r.coeff(pos) = a.coeff(pos).real();
  return r;
}

// Conjugation-free atan2 on jets: value from std::atan2, perturbation from
// Im log((x + iy)/(x0 + iy0)).
CJet atan2_jet(const CJet& y, const CJet& x);

// General composition: substitute inner jets (value = outer base) into the
// outer Taylor table.  Used to transport an operator's output jet through an
// inner map.
CJet compose(const CJet& outer, std::span<const CJet> inner);

// Evaluation contract for smooth functions: jet-valued coordinates in, one
// jet-valued result out, computed with jet arithmetic only.  The coordinate
// order is the chart's: (x, y, u, v) on H x C, (x, y, v1, v2) on the matrix
// chart, (x, y, theta, alpha1, alpha2) on the group.
using SmoothMap = std::function<CJet(std::span<const CJet>)>;

// Coordinate seeds for a chart point.
std::vector<CJet> seed_coords(std::span<const double> coords, int order);

}  // namespace sl21
