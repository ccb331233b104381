#include "sl21/jet.hpp"

#include <mutex>
#include <numeric>

namespace sl21 {

namespace {

void enumerate_degree(int nvars, int degree, std::array<std::uint8_t, kMaxJetVars>& mi, int var,
                      int remaining, std::vector<std::array<std::uint8_t, kMaxJetVars>>& out) {
  if (var == nvars - 1) {
    mi[var] = static_cast<std::uint8_t>(remaining);
    out.push_back(mi);
    return;
  }
  for (int d = remaining; d >= 0; --d) {
    mi[var] = static_cast<std::uint8_t>(d);
    enumerate_degree(nvars, degree, mi, var + 1, remaining - d, out);
  }
  mi[var] = 0;
}

}  // namespace

JetShape::JetShape(int nvars, int order) : nvars_(nvars), order_(order) {
  if (nvars < 1 || nvars > kMaxJetVars) throw std::invalid_argument("JetShape: nvars out of range");
  if (order < 0 || order > kMaxJetOrder) throw std::invalid_argument("JetShape: order out of range");

  std::array<std::uint8_t, kMaxJetVars> mi{};
  for (int d = 0; d <= order; ++d) enumerate_degree(nvars, d, mi, 0, d, index_);

  const int n = size();
  degree_.resize(n);
  factorial_.resize(n);
  for (int pos = 0; pos < n; ++pos) {
    int deg = 0;
    double fact = 1;
    for (int i = 0; i < nvars; ++i) {
      deg += index_[pos][i];
      for (int k = 2; k <= index_[pos][i]; ++k) fact *= k;
    }
    degree_[pos] = deg;
    factorial_[pos] = fact;
  }

  int radix_size = 1;
  for (int i = 0; i < nvars; ++i) radix_size *= (order + 2);
  rank_.assign(radix_size, -1);
  for (int pos = 0; pos < n; ++pos) rank_[encode(index_[pos])] = pos;

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (degree_[a] + degree_[b] > order) continue;
      std::array<std::uint8_t, kMaxJetVars> sum{};
      for (int i = 0; i < nvars; ++i) sum[i] = static_cast<std::uint8_t>(index_[a][i] + index_[b][i]);
      mul_.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                      static_cast<std::uint16_t>(rank_[encode(sum)])});
    }
  }

  raise_.resize(n);
  for (int pos = 0; pos < n; ++pos) {
    for (int var = 0; var < kMaxJetVars; ++var) raise_[pos][var] = -1;
    for (int var = 0; var < nvars; ++var) {
      if (degree_[pos] + 1 > order) continue;
      std::array<std::uint8_t, kMaxJetVars> up = index_[pos];
      up[var] = static_cast<std::uint8_t>(up[var] + 1);
      raise_[pos][var] = rank_[encode(up)];
    }
  }
}

int JetShape::encode(std::span<const std::uint8_t> mi) const {
  int code = 0;
  for (int i = nvars_ - 1; i >= 0; --i) code = code * (order_ + 2) + mi[i];
  return code;
}

int JetShape::position(std::span<const int> mi) const {
  if (static_cast<int>(mi.size()) != nvars_) throw std::invalid_argument("multi-index arity mismatch");
  int deg = 0;
  std::array<std::uint8_t, kMaxJetVars> m{};
  for (int i = 0; i < nvars_; ++i) {
    if (mi[i] < 0) throw std::invalid_argument("negative multi-index entry");
    deg += mi[i];
    m[i] = static_cast<std::uint8_t>(mi[i]);
  }
  if (deg > order_) return -1;
  return rank_[encode(std::span<const std::uint8_t>(m.data(), static_cast<std::size_t>(nvars_)))];
}

const JetShape& JetShape::get(int nvars, int order) {
  static JetShape* cache[kMaxJetVars + 1][kMaxJetOrder + 1] = {};
  static std::once_flag flags[kMaxJetVars + 1][kMaxJetOrder + 1];
  if (nvars < 1 || nvars > kMaxJetVars || order < 0 || order > kMaxJetOrder)
    throw std::invalid_argument("JetShape::get: shape out of range");
  std::call_once(flags[nvars][order], [&] { cache[nvars][order] = new JetShape(nvars, order); });
  return *cache[nvars][order];
}

CJet atan2_jet(const CJet& y, const CJet& x) {
  const std::complex<double> x0 = x.value(), y0 = y.value();
  if (x0 == std::complex<double>(0) && y0 == std::complex<double>(0))
    throw std::domain_error("atan2_jet at the origin");
  const double th0 = std::atan2(y0.real(), x0.real());
  CJet z = x + std::complex<double>(0, 1) * y;
  z *= std::complex<double>(1) / z.value();
  CJet th = imag_part(log(z));
  th.coeff(0) += th0;
  return th;
}

CJet compose(const CJet& outer, std::span<const CJet> inner) {
  if (static_cast<int>(inner.size()) != outer.nvars())
    throw std::invalid_argument("compose: arity mismatch");
  const JetShape& sh = outer.shape();
  const int order = outer.order();

  // perturbation powers (inner_i - q_i)^k, k = 0..order
  std::vector<std::vector<CJet>> pw(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    CJet d = inner[i] - std::complex<double>(outer.base()[i]);
    pw[i].reserve(static_cast<std::size_t>(order) + 1);
    pw[i].push_back(inner[0].constant_like(std::complex<double>(1)));
    for (int k = 1; k <= order; ++k) pw[i].push_back(pw[i].back() * d);
  }

  CJet r = inner[0].constant_like(std::complex<double>(0));
  for (int pos = 0; pos < sh.size(); ++pos) {
    const std::complex<double> c = outer.coeff(pos);
    if (c == std::complex<double>(0)) continue;
    CJet term = inner[0].constant_like(c);
    for (int i = 0; i < outer.nvars(); ++i) {
      const int k = sh.index(pos)[i];
      if (k > 0) term = term * pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    }
    r += term;
  }
  return r;
}

std::vector<CJet> seed_coords(std::span<const double> coords, int order) {
  std::vector<CJet> s;
  s.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    s.push_back(CJet::seed(coords, static_cast<int>(i), order));
  return s;
}

}  // namespace sl21
