#include "heis/series.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace heis {

LaurentSeries::LaurentSeries(const LocalRing& r, int lead_exp, std::vector<LocalScalar> coeffs)
    : ring_(r), lead_(lead_exp), c_(std::move(coeffs)) {
  if (c_.empty()) throw Error(Errc::ConfigError, "series needs precision at least 1");
  for (const auto& c : c_)
    if (!(c.ring() == r)) throw Error(Errc::ConfigError, "series coefficient from a different ring");
}

LaurentSeries LaurentSeries::one(const LocalRing& r, int precision) {
  return monomial(LocalScalar(r, 1), 0, precision);
}

LaurentSeries LaurentSeries::monomial(const LocalScalar& c, int exp, int precision) {
  std::vector<LocalScalar> v(precision, LocalScalar(c.ring()));
  v[0] = c;
  return LaurentSeries(c.ring(), exp, std::move(v));
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, int precision) {
  const LocalRing& r = p.ring();
  if (p.is_zero()) return LaurentSeries(r, 0, std::vector<LocalScalar>(precision, LocalScalar(r)));
  std::vector<LocalScalar> v;
  for (int j = 0; j < precision; ++j) v.push_back(p.coeff(p.degree() - j));
  return LaurentSeries(r, p.degree(), std::move(v));
}

LocalScalar LaurentSeries::coeff_of(int e) const {
  if (e > lead_) return LocalScalar(ring_);
  int j = lead_ - e;
  if (j >= precision()) throw Error(Errc::ConfigError, "coefficient of u^" + std::to_string(e) + " beyond precision");
  return c_[j];
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  if (!(ring_ == o.ring_)) throw Error(Errc::ConfigError, "series over different rings");
  int P = std::min(precision(), o.precision());
  std::vector<LocalScalar> v(P, LocalScalar(ring_));
  for (int i = 0; i < P; ++i)
    for (int j = 0; i + j < P; ++j) v[i + j].add_mul(c_[i], o.c_[j]);
  return LaurentSeries(ring_, lead_ + o.lead_, std::move(v));
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  if (!(ring_ == o.ring_)) throw Error(Errc::ConfigError, "series over different rings");
  int lead = std::max(lead_, o.lead_);
  int floor = std::max(known_floor(), o.known_floor());
  std::vector<LocalScalar> v;
  for (int e = lead; e >= floor; --e) v.push_back(coeff_of(e) + o.coeff_of(e));
  return LaurentSeries(ring_, lead, std::move(v));
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + o * LocalScalar(ring_, -1); }

LaurentSeries LaurentSeries::operator*(const LocalScalar& s) const {
  LaurentSeries r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

LaurentSeries LaurentSeries::invert() const {
  if (!c_[0].is_unit()) throw Error(Errc::NotInvertible, "leading coefficient " + c_[0].str() + " is not a unit");
  LocalScalar a0inv = c_[0].inv_unit();
  std::vector<LocalScalar> b(precision(), LocalScalar(ring_));
  b[0] = a0inv;
  for (int j = 1; j < precision(); ++j) {
    LocalScalar acc(ring_);
    for (int i = 1; i <= j; ++i) acc.add_mul(c_[i], b[j - i]);
    b[j] = -(acc * a0inv);
  }
  return LaurentSeries(ring_, -lead_, std::move(b));
}

LaurentSeries LaurentSeries::truncated(int P) const {
  if (P > precision()) throw Error(Errc::ConfigError, "cannot raise precision by truncation");
  return LaurentSeries(ring_, lead_, std::vector<LocalScalar>(c_.begin(), c_.begin() + P));
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
  int top = std::max(lead_, o.lead_);
  int floor = std::max(known_floor(), o.known_floor());
  for (int e = top; e >= floor; --e)
    if (!(coeff_of(e) == o.coeff_of(e))) return false;
  return true;
}

bool LaurentSeries::is_one() const { return agrees_with(one(ring_, precision())); }

LocalScalar det_inversion_coeff(const std::vector<LocalScalar>& f, int r) {
  if (f.empty()) throw Error(Errc::ConfigError, "det_inversion_coeff needs f_0");
  const LocalRing ring = f[0].ring();
  if (!f[0].is_one()) throw Error(Errc::ConfigError, "det_inversion_coeff expects f_0 = 1");
  auto entry = [&](int s, int t) {
    int j = s - t + 1;
    if (j < 0 || j >= static_cast<int>(f.size())) return LocalScalar(ring);
    return -f[j];
  };
  // Division-free expansion: dp over the set of columns used by the first rows.
  std::vector<LocalScalar> dp(std::size_t(1) << r, LocalScalar(ring));
  dp[0] = LocalScalar(ring, 1);
  for (unsigned mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    int s = __builtin_popcount(mask);
    if (s == r) continue;
    for (int c = 0; c < r; ++c) {
      if (mask & (1u << c)) continue;
      int above = __builtin_popcount(mask >> (c + 1));
      LocalScalar term = dp[mask] * entry(s + 1, c + 1);
      if (above % 2) term = -term;
      dp[mask | (1u << c)] += term;
    }
  }
  return dp.back();
}

LaurentSeries rational_to_series(const Poly& n, const Poly& m, int precision) {
  if (m.is_zero() || !m.lead().is_unit()) throw Error(Errc::NotInvertible, "denominator leading coefficient is not a unit");
  if (n.is_zero())
    return LaurentSeries(m.ring(), -m.degree(), std::vector<LocalScalar>(precision, LocalScalar(m.ring())));
  return LaurentSeries::from_poly(n, precision) * LaurentSeries::from_poly(m, precision).invert();
}

namespace {

void complete_homogeneous(const std::vector<Scalar>& x, int r, std::size_t start, Scalar prod, Scalar& acc) {
  if (r == 0) {
    acc += prod;
    return;
  }
  for (std::size_t i = start; i < x.size(); ++i) complete_homogeneous(x, r - 1, i, prod * x[i], acc);
}

}  // namespace

bool symfun_check(const std::vector<Scalar>& x) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw Error(Errc::ConfigError, "symfun_check needs at least one variable");
  LocalRing k{x[0].field(), 1};
  // e_r from prod (1 + x_j y); h_r by summing monomials over multisets.
  std::vector<Scalar> e(n + 1, Scalar(0, k.field));
  e[0] = Scalar(1, k.field);
  for (const auto& xi : x)
    for (int r = n; r >= 1; --r) e[r] += e[r - 1] * xi;
  std::vector<LocalScalar> ev, hv;
  for (int r = 0; r <= n; ++r) {
    Scalar h(0, k.field);
    complete_homogeneous(x, r, 0, Scalar(1, k.field), h);
    ev.emplace_back(k, e[r]);
    hv.emplace_back(k, r % 2 ? -h : h);
  }
  LaurentSeries es(k, 0, ev), hs(k, 0, hv);
  return (es * hs).is_one();
}

bool symfun_check(int n_vars, std::uint64_t seed) {
  if (n_vars < 1) throw Error(Errc::ConfigError, "symfun_check needs at least one variable");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
  std::set<mpq_class> seen;
  std::vector<Scalar> pts;
  while (static_cast<int>(pts.size()) < n_vars) {
    mpq_class v(num(rng), den(rng));
    v.canonicalize();
    if (seen.insert(v).second) pts.emplace_back(v);
  }
  return symfun_check(pts);
}

}  // namespace heis
