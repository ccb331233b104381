#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace sl21 {

using Mat2 = Eigen::Matrix2d;
using RowVec2 = Eigen::RowVector2d;

inline constexpr double kDetTol = 1e-12;

// Element (g, alpha) of SL(2,R) x| R^(1,2) with multiplication
// (g,a)*(h,b) = (gh, a t(h)^-1 + b).  det g = 1 is enforced at construction;
// no silent renormalization (a bad determinant is a caller bug).
struct GroupElement {
  Mat2 g;
  RowVec2 alpha;

  GroupElement() : g(Mat2::Identity()), alpha(RowVec2::Zero()) {}
  GroupElement(const Mat2& g_, const RowVec2& alpha_) : g(g_), alpha(alpha_) {
    if (std::abs(g.determinant() - 1.0) > kDetTol)
      throw std::invalid_argument("GroupElement: det(g) != 1");
  }

  static GroupElement identity() { return GroupElement(); }
};

// Element (X, Z) of the Lie algebra, tr X = 0 held exactly: X is stored via
// (x11, x12, x21) with X22 = -X11.
struct LieElement {
  double x11 = 0, x12 = 0, x21 = 0;
  RowVec2 Z = RowVec2::Zero();

  LieElement() = default;
  LieElement(double x11_, double x12_, double x21_, double z1, double z2)
      : x11(x11_), x12(x12_), x21(x21_) {
    Z << z1, z2;
  }
  static LieElement from_matrix(const Mat2& X, const RowVec2& Z, double tol = kDetTol) {
    if (std::abs(X(0, 0) + X(1, 1)) > tol)
      throw std::invalid_argument("LieElement: tr(X) != 0");
    return LieElement(X(0, 0), X(0, 1), X(1, 0), Z(0), Z(1));
  }
  Mat2 X() const {
    Mat2 m;
    m << x11, x12, x21, -x11;
    return m;
  }
  LieElement operator+(const LieElement& o) const {
    return LieElement(x11 + o.x11, x12 + o.x12, x21 + o.x21, Z(0) + o.Z(0), Z(1) + o.Z(1));
  }
  LieElement operator-(const LieElement& o) const {
    return LieElement(x11 - o.x11, x12 - o.x12, x21 - o.x21, Z(0) - o.Z(0), Z(1) - o.Z(1));
  }
  LieElement operator*(double c) const {
    return LieElement(c * x11, c * x12, c * x21, c * Z(0), c * Z(1));
  }
  // Coefficients in the W1..W5 basis (exact: the basis is coordinate-aligned).
  Eigen::Matrix<double, 5, 1> coords() const {
    Eigen::Matrix<double, 5, 1> c;
    c << x12, x21, x11, Z(0), Z(1);
    return c;
  }
  static LieElement from_coords(const Eigen::Matrix<double, 5, 1>& c) {
    return LieElement(c(2), c(0), c(1), c(3), c(4));
  }
};

// Point (tau, z) = (x+iy, u+iv) of H x C, y > 0.
struct PointHC {
  double x = 0, y = 1, u = 0, v = 0;
  PointHC() = default;
  PointHC(double x_, double y_, double u_, double v_) : x(x_), y(y_), u(u_), v(v_) {
    if (!(y > 0)) throw std::invalid_argument("PointHC: y must be positive");
  }
};

// Point of SP_2 x R^(1,2) in the (x, y, v1, v2) chart: Y is the det-1
// positive matrix [[1/y, -x/y], [-x/y, x^2/y + y]] and V = (v1, v2).
struct PointPV {
  double x = 0, y = 1, v1 = 0, v2 = 0;
  PointPV() = default;
  PointPV(double x_, double y_, double v1_, double v2_) : x(x_), y(y_), v1(v1_), v2(v2_) {
    if (!(y > 0)) throw std::invalid_argument("PointPV: y must be positive");
  }
  Mat2 Y() const {
    Mat2 m;
    m << 1.0 / y, -x / y, -x / y, x * x / y + y;
    return m;
  }
  RowVec2 V() const {
    RowVec2 r;
    r << v1, v2;
    return r;
  }
};

// NAK coordinates (x, y, theta, alpha1, alpha2) of the group,
// g = [[1,x],[0,1]] [[sqrt(y),0],[0,1/sqrt(y)]] k(theta), theta in [0, 2pi).
struct GCoord {
  double x = 0, y = 1, theta = 0, alpha1 = 0, alpha2 = 0;
  GCoord() = default;
  GCoord(double x_, double y_, double th, double a1, double a2)
      : x(x_), y(y_), theta(th), alpha1(a1), alpha2(a2) {
    if (!(y > 0)) throw std::invalid_argument("GCoord: y must be positive");
    if (!(theta >= 0 && theta < 6.283185307179586477)) {
      throw std::invalid_argument("GCoord: theta must lie in [0, 2*pi)");
    }
  }
};

// Basis index k in {1,...,5} for W_k.
struct BasisIndex {
  int k;
  explicit BasisIndex(int k_) : k(k_) {
    if (k < 1 || k > 5) throw std::invalid_argument("BasisIndex: k must be in 1..5");
  }
};

enum class Chart { HC, PV, G1 };

inline int chart_dim(Chart c) { return c == Chart::G1 ? 5 : 4; }

}  // namespace sl21
