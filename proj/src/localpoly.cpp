#include "heis/localpoly.hpp"

#include <algorithm>

namespace heis {

Poly::Poly(const LocalRing& r, std::vector<LocalScalar> coeffs) : ring_(r), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!(c.ring() == r)) throw Error(Errc::ConfigError, "polynomial coefficient from a different ring");
  trim();
}

Poly::Poly(const LocalRing& r, const std::vector<long>& coeffs) : ring_(r) {
  for (long c : coeffs) c_.emplace_back(r, c);
  trim();
}

Poly Poly::constant(const LocalScalar& c) { return Poly(c.ring(), std::vector<LocalScalar>{c}); }

Poly Poly::monomial(const LocalRing& r, int deg, const LocalScalar& c) {
  std::vector<LocalScalar> v(deg + 1, LocalScalar(r));
  v[deg] = c;
  return Poly(r, std::move(v));
}

Poly Poly::linear(const LocalScalar& a) { return Poly(a.ring(), std::vector<LocalScalar>{-a, LocalScalar(a.ring(), 1)}); }

Poly Poly::parse(const std::vector<std::string>& coeffs, const LocalRing& r) {
  std::vector<LocalScalar> v;
  for (const auto& s : coeffs) v.push_back(LocalScalar::parse(s, r));
  return Poly(r, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LocalScalar Poly::coeff(int j) const {
  if (j < 0 || j > degree()) return LocalScalar(ring_);
  return c_[j];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (!(ring_ == o.ring_)) throw Error(Errc::ConfigError, "polynomials over different rings");
  Poly r(ring_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), LocalScalar(ring_));
  for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] += c_[j];
  for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[j] += o.c_[j];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (!(ring_ == o.ring_)) throw Error(Errc::ConfigError, "polynomials over different rings");
  Poly r(ring_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, LocalScalar(ring_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j].add_mul(c_[i], o.c_[j]);
  r.trim();
  return r;
}

Poly Poly::operator*(const LocalScalar& s) const {
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

LocalScalar Poly::eval(const LocalScalar& x) const {
  LocalScalar acc(ring_);
  for (int j = degree(); j >= 0; --j) acc = acc * x + c_[j];
  return acc;
}

Poly Poly::taylor_shift(const LocalScalar& a) const {
  Poly lin(ring_, std::vector<LocalScalar>{a, LocalScalar(ring_, 1)});
  Poly acc(ring_);
  for (int j = degree(); j >= 0; --j) acc = acc * lin + constant(c_[j]);
  return acc;
}

Poly Poly::scale_variable(const LocalScalar& c) const {
  Poly r = *this;
  LocalScalar cj(ring_, 1);
  for (auto& x : r.c_) {
    x *= cj;
    cj *= c;
  }
  r.trim();
  return r;
}

Poly Poly::pow(int e) const {
  Poly r = constant(LocalScalar(ring_, 1));
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

Poly Poly::residue() const { return layer(0); }

Poly Poly::layer(int s) const {
  LocalRing k = ring_.residue_ring();
  std::vector<LocalScalar> v;
  for (const auto& c : c_) v.emplace_back(k, s < c.order() ? c[s] : Scalar(0, ring_.field));
  return Poly(k, std::move(v));
}

Poly Poly::resized(int M) const {
  LocalRing r{ring_.field, M};
  std::vector<LocalScalar> v;
  for (const auto& c : c_) v.push_back(c.resized(M));
  return Poly(r, std::move(v));
}

Poly Poly::from_layer(const Poly& p, int s, const LocalRing& target) {
  std::vector<LocalScalar> v;
  for (const auto& c : p.coeffs()) v.push_back(c.resized(target.N).shifted(s));
  return Poly(target, std::move(v));
}

bool Poly::nonleading_in_J() const {
  for (int j = 0; j < degree(); ++j)
    if (c_[j].is_unit()) return false;
  return true;
}

std::vector<std::string> Poly::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : c_) out.push_back(c.str());
  if (out.empty()) out.push_back("0");
  return out;
}

std::string Poly::str() const {
  std::string out;
  for (int j = degree(); j >= 0; --j) {
    if (c_[j].is_zero()) continue;
    std::string c = c_[j].str();
    bool compound = c.find(' ') != std::string::npos;
    if (!out.empty()) out += " + ";
    if (j == 0)
      out += compound ? "(" + c + ")" : c;
    else {
      if (c == "-1")
        out += "-";
      else if (c != "1")
        out += (compound ? "(" + c + ")" : c) + "*";
      out += "u";
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

MonicPoly::MonicPoly(Poly p) : p_(std::move(p)) {
  if (!p_.is_monic()) throw Error(Errc::ConfigError, "polynomial " + p_.str() + " is not monic");
}

MonicPoly MonicPoly::from_roots(const std::vector<LocalScalar>& roots, const LocalRing& r) {
  Poly acc = Poly::constant(LocalScalar(r, 1));
  for (const auto& a : roots) acc *= Poly::linear(a);
  return MonicPoly(acc);
}

std::pair<Poly, Poly> divmod_unit(const Poly& f, const Poly& p) {
  if (p.is_zero() || !p.lead().is_unit()) throw Error(Errc::NotAUnit, "divisor leading coefficient is not a unit");
  const LocalRing& r = f.ring();
  LocalScalar li = p.lead().inv_unit();
  std::vector<LocalScalar> rem = f.coeffs();
  int dp = p.degree();
  int dq = f.degree() - dp;
  std::vector<LocalScalar> q(std::max(dq + 1, 0), LocalScalar(r));
  for (int j = dq; j >= 0; --j) {
    LocalScalar c = rem[j + dp] * li;
    q[j] = c;
    for (int i = 0; i <= dp; ++i) rem[j + i] -= c * p.coeffs()[i];
  }
  if (dq >= 0) rem.resize(dp);
  return {Poly(r, std::move(q)), Poly(r, std::move(rem))};
}

std::pair<Poly, Poly> divmod(const Poly& f, const MonicPoly& p) { return divmod_unit(f, p.poly()); }

Poly poly_gcd(const Poly& g, const Poly& h) {
  Poly a = g, b = h;
  while (!b.is_zero()) {
    Poly r = divmod_unit(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a * a.lead().inv_unit();
}

std::pair<Poly, Poly> bezout(const Poly& g, const Poly& h) {
  LocalRing k = g.ring();
  if (k.N != 1 || h.ring().N != 1) throw Error(Errc::ConfigError, "bezout expects polynomials over k");
  Poly r0 = g, r1 = h;
  Poly s0 = Poly::constant(LocalScalar(k, 1)), s1(k);
  Poly t0(k), t1 = Poly::constant(LocalScalar(k, 1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod_unit(r0, r1);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1, r1 = r;
    s0 = s1, s1 = s2;
    t0 = t1, t1 = t2;
  }
  if (r0.degree() != 0) throw Error(Errc::NotCoprime, g.str() + " and " + h.str() + " share a factor");
  LocalScalar c = r0.lead().inv_unit();
  return {s0 * c, t0 * c};
}

namespace {

// Prime factors of |n| by trial division; a large composite cofactor is refused.
std::vector<mpz_class> prime_factors(mpz_class n) {
  std::vector<mpz_class> out;
  n = abs(n);
  for (unsigned long d = 2; d < 2000000 && n > 1; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out.push_back(d);
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) n /= d;
    }
    if (mpz_class(d) * d > n) break;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw Error(Errc::ConfigError, "coefficient too large for rational root search");
    out.push_back(n);
  }
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> ds{1};
  mpz_class m = abs(n);
  for (const auto& p : prime_factors(m)) {
    std::size_t base = ds.size();
    mpz_class pk = p;
    while (mpz_divisible_p(m.get_mpz_t(), pk.get_mpz_t())) {
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
      pk *= p;
    }
  }
  return ds;
}

Poly strip_root(Poly& f, const Scalar& r, int& mult) {
  LocalScalar a(f.ring(), r);
  MonicPoly lin(Poly::linear(a));
  mult = 0;
  while (f.degree() > 0) {
    auto [q, rem] = divmod(f, lin);
    if (!rem.is_zero()) break;
    f = q;
    ++mult;
  }
  return f;
}

}  // namespace

std::vector<std::pair<Scalar, int>> split_roots(const Poly& f_in) {
  Poly f = f_in.residue();
  if (f.is_zero()) throw Error(Errc::ConfigError, "roots of the zero polynomial");
  LocalRing k = f.ring();
  f = f * f.lead().inv_unit();
  std::vector<Scalar> candidates;
  if (k.field.is_rational()) {
    if (f.coeff(0).is_zero()) candidates.push_back(Scalar(0));
    int low = 0;
    while (f.coeff(low).is_zero()) ++low;
    mpz_class den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c[0].value().get_den_mpz_t());
    mpq_class a0q = f.coeff(low)[0].value() * den;
    mpz_class a0 = a0q.get_num();
    mpq_class anq = f.lead()[0].value() * den;
    mpz_class an = anq.get_num();
    if (f.degree() > low) {
      auto dn = divisors(a0), dd = divisors(an);
      for (const auto& p : dn)
        for (const auto& q : dd) {
          candidates.push_back(Scalar(mpq_class(p, q)));
          candidates.push_back(Scalar(mpq_class(-p, q)));
        }
    }
  } else {
    for (std::uint32_t v = 0; v < k.field.p; ++v) candidates.push_back(Scalar(static_cast<long>(v), k.field));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<std::pair<Scalar, int>> out;
  for (const auto& c : candidates) {
    if (f.degree() == 0) break;
    if (!f.eval(LocalScalar(k, c)).is_zero()) continue;
    int mult = 0;
    strip_root(f, c, mult);
    out.emplace_back(c, mult);
  }
  if (f.degree() > 0) throw Error(Errc::NotSplit, f_in.residue().str() + " does not split over " + k.field.str());
  return out;
}

std::pair<MonicPoly, MonicPoly> coprime_factor_lift(const MonicPoly& f, const MonicPoly& gbar,
                                                    const MonicPoly& hbar) {
  const LocalRing& r = f.ring();
  if (gbar.ring().N != 1 || hbar.ring().N != 1) throw Error(Errc::ConfigError, "gbar, hbar must lie over k");
  if (!(f.poly().residue() == gbar.poly() * hbar.poly()))
    throw Error(Errc::FactorizationMismatch, "residue of " + f.str() + " is not " + gbar.str() + " * " + hbar.str());
  auto [a, b] = bezout(gbar, hbar);
  Poly g = Poly::from_layer(gbar, 0, r), h = Poly::from_layer(hbar, 0, r);
  for (int s = 1; s < r.N; ++s) {
    Poly R = (f.poly() - g * h).layer(s);
    auto [Q, gs] = divmod(b * R, gbar);
    Poly hs = a * R + Q * hbar.poly();
    g += Poly::from_layer(gs, s, r);
    h += Poly::from_layer(hs, s, r);
  }
  if (!(g * h == f.poly())) throw Error(Errc::FactorizationMismatch, "lift failed to reproduce " + f.str());
  return {MonicPoly(g), MonicPoly(h)};
}

std::pair<MonicPoly, MonicPoly> filtration_lift(const MonicPoly& f, const MonicPoly& gbar,
                                                const MonicPoly& hbar) {
  if (!(f.poly().residue() == gbar.poly() * hbar.poly()))
    throw Error(Errc::FactorizationMismatch, "residue of " + f.str() + " is not " + gbar.str() + " * " + hbar.str());
  auto [abar, bbar] = bezout(gbar, hbar);
  Poly g = gbar.poly(), h = hbar.poly();
  for (int s = 1; s < f.ring().N; ++s) {
    // Z' = k[t]/(t^{s+1}) and I = (t^s), so I^2 = 0 in Z'.
    LocalRing rs{f.ring().field, s + 1};
    Poly gh = g.resized(s + 1), hh = h.resized(s + 1), fs = f.poly().resized(s + 1);
    Poly a = abar.resized(s + 1), b = bbar.resized(s + 1);
    // a*gh + b*hh = 1 + E with E in J[u]; E is nilpotent, so invert 1 + E by a finite sum.
    Poly E = a * gh + b * hh - Poly::constant(LocalScalar(rs, 1));
    Poly inv = Poly::constant(LocalScalar(rs, 1)), term = inv;
    for (int j = 1; j <= s; ++j) {
      term = -(term * E);
      inv += term;
    }
    a = a * inv, b = b * inv;
    Poly err = fs - gh * hh;
    MonicPoly gm(gh), hm(hh);
    Poly gr = divmod(gh + err * b, gm).second;
    Poly hr = divmod(hh + err * a, hm).second;
    g = gh + gr;
    h = hh + hr;
  }
  g = g.resized(f.ring().N), h = h.resized(f.ring().N);
  if (!(g * h == f.poly())) throw Error(Errc::FactorizationMismatch, "filtration lift failed for " + f.str());
  return {MonicPoly(g), MonicPoly(h)};
}

ClusterMap cluster_factor(const MonicPoly& f) {
  const LocalRing& r = f.ring();
  LocalRing k = r.residue_ring();
  ClusterMap out;
  if (f.degree() == 0) return out;
  auto roots = split_roots(f.poly());
  MonicPoly rest = f;
  for (std::size_t n = 0; n < roots.size(); ++n) {
    const auto& [root, mult] = roots[n];
    LocalScalar iz(r, root);
    MonicPoly g = rest;
    if (n + 1 < roots.size()) {
      MonicPoly gbar(Poly::linear(LocalScalar(k, root)).pow(mult));
      MonicPoly hbar(divmod(rest.poly().residue(), gbar).first);
      auto lifted = coprime_factor_lift(rest, gbar, hbar);
      g = lifted.first;
      rest = lifted.second;
    }
    MonicPoly fi(g.poly().taylor_shift(iz));
    if (!fi.poly().nonleading_in_J())
      throw Error(Errc::FactorizationMismatch, "cluster factor at " + root.str() + " has a unit non-leading coefficient");
    out.emplace(root, fi);
  }
  return out;
}

MonicPoly cluster_product(const ClusterMap& factors, const LocalRing& r) {
  Poly acc = Poly::constant(LocalScalar(r, 1));
  for (const auto& [i, fi] : factors) acc *= fi.poly().taylor_shift(-LocalScalar(r, i));
  return MonicPoly(acc);
}

}  // namespace heis
