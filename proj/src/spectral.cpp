#include "heis/spectral.hpp"

namespace heis {

DotPoly DotPoly::constant(const LocalRing& r, int nvars, const LocalScalar& c) {
  DotPoly p(r, nvars);
  p.add(std::vector<int>(nvars, 0), c);
  return p;
}

DotPoly DotPoly::var(const LocalRing& r, int nvars, int i) {
  DotPoly p(r, nvars);
  std::vector<int> a(nvars, 0);
  a.at(i - 1) = 1;
  p.add(a, LocalScalar(r, 1));
  return p;
}

void DotPoly::add(const std::vector<int>& a, const LocalScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DotPoly DotPoly::operator+(const DotPoly& o) const {
  DotPoly r = *this;
  for (const auto& [a, c] : o.terms_) r.add(a, c);
  return r;
}

DotPoly DotPoly::operator-(const DotPoly& o) const {
  DotPoly r = *this;
  for (const auto& [a, c] : o.terms_) r.add(a, -c);
  return r;
}

DotPoly DotPoly::operator*(const DotPoly& o) const {
  DotPoly r(ring_, n_);
  for (const auto& [a, c] : terms_)
    for (const auto& [b, c2] : o.terms_) {
      std::vector<int> e = a;
      for (int j = 0; j < n_; ++j) e[j] += b[j];
      r.add(e, c * c2);
    }
  return r;
}

DotPoly DotPoly::operator*(const LocalScalar& s) const {
  DotPoly r(ring_, n_);
  for (const auto& [a, c] : terms_) r.add(a, c * s);
  return r;
}

DotPoly DotPoly::operator+(const LocalScalar& s) const { return *this + constant(ring_, n_, s); }
DotPoly DotPoly::operator-(const LocalScalar& s) const { return *this - constant(ring_, n_, s); }

LocalScalar DotPoly::eval(const std::vector<LocalScalar>& point) const {
  LocalScalar acc(ring_);
  for (const auto& [a, c] : terms_) {
    LocalScalar m = c;
    for (int j = 0; j < n_; ++j) m *= point[j].pow(a[j]);
    acc += m;
  }
  return acc;
}

ZVec DotPoly::apply(const HeckeAlgebra& H, const ZVec& v) const {
  ZVec out(v.size(), LocalScalar(H.ring()));
  for (const auto& [a, c] : terms_) {
    ZVec w = v;
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < a[j]; ++k) w = H.apply_x(j + 1, w);
    for (std::size_t i = 0; i < w.size(); ++i) out[i].add_mul(c, w[i]);
  }
  return out;
}

namespace {

ZVec apply_poly_in(const HeckeAlgebra& H, int r, const Poly& p, const ZVec& v) {
  ZVec acc(v.size(), LocalScalar(H.ring()));
  for (int j = p.degree(); j >= 0; --j) {
    acc = H.apply_x(r, acc);
    LocalScalar c = p.coeff(j);
    for (std::size_t i = 0; i < v.size(); ++i) acc[i].add_mul(c, v[i]);
  }
  return acc;
}

bool all_zero(const ZVec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<std::pair<Scalar, int>> spectrum_with_multiplicity(int r, const HeckePtr& H) {
  return split_roots(min_poly(H->x(r)).poly());
}

}  // namespace

ZVec BlockIdempotent::apply(const HeckeAlgebra& H, const ZVec& v) const {
  ZVec w = v;
  for (std::size_t r = 0; r < factors.size(); ++r) w = apply_poly_in(H, static_cast<int>(r) + 1, factors[r], w);
  return w;
}

std::vector<Scalar> spectrum(int r, const HeckePtr& H) {
  std::vector<Scalar> out;
  for (const auto& [root, mult] : spectrum_with_multiplicity(r, H)) out.push_back(root);
  return out;
}

std::vector<BlockIdempotent> block_idempotents(const HeckePtr& H) {
  const int d = H->d();
  const LocalRing k = H->ring().residue_ring();
  // Per position: eigenvalues, multiplicities and CRT interpolation polynomials.
  std::vector<std::vector<Scalar>> roots(d);
  std::vector<std::vector<int>> mults(d);
  std::vector<std::vector<Poly>> interp(d);
  for (int r = 1; r <= d; ++r) {
    auto rm = spectrum_with_multiplicity(r, H);
    for (const auto& [root, mult] : rm) {
      Poly g = Poly::linear(LocalScalar(k, root)).pow(mult);
      Poly h = Poly::constant(LocalScalar(k, 1));
      for (const auto& [other, m2] : rm)
        if (!(other == root)) h *= Poly::linear(LocalScalar(k, other)).pow(m2);
      auto [a, b] = bezout(g, h);
      roots[r - 1].push_back(root);
      mults[r - 1].push_back(mult);
      interp[r - 1].push_back((b * h).resized(H->ring().N));
    }
  }
  std::vector<BlockIdempotent> out;
  std::vector<int> pick(d, 0);
  const ZVec one = H->one().coeffs();
  while (true) {
    BlockIdempotent e;
    for (int r = 0; r < d; ++r) {
      e.tuple.push_back(roots[r][pick[r]]);
      e.nilpotency.push_back(mults[r][pick[r]]);
      e.factors.push_back(interp[r][pick[r]]);
    }
    ZVec v = e.apply(*H, one);
    if (!all_zero(v)) {
      e.element = HeckeElem(H, std::move(v));
      out.push_back(std::move(e));
    }
    // Lexicographic in (i_1, ..., i_d).
    int r = d - 1;
    while (r >= 0 && ++pick[r] == static_cast<int>(roots[r].size())) pick[r--] = 0;
    if (r < 0) break;
  }
  return out;
}

int block_dimension(const BlockIdempotent& e, const HeckePtr& H) {
  const int D = H->dim(), N = H->ring().N;
  if (H->field().is_rational()) {
    // The trace of an idempotent is its rank in characteristic zero.
    Scalar tr(0);
    for (int u = 0; u < D; ++u) {
      ZVec v(D, LocalScalar(H->ring()));
      v[u] = LocalScalar(H->ring(), 1);
      tr += e.apply(*H, v)[u].residue();
    }
    return static_cast<int>((tr * Scalar(N)).value().get_num().get_si());
  }
  Echelon ech(H->k_dim(), H->field());
  for (int u = 0; u < D; ++u) {
    ZVec v(D, LocalScalar(H->ring()));
    v[u] = LocalScalar(H->ring(), 1);
    HeckeElem c(H, e.apply(*H, v));
    for (int s = 0; s < N; ++s) {
      ech.add(c.to_kvec());
      c = HeckeElem(H, H->apply_t(c.coeffs()));
    }
  }
  return ech.rank();
}

HeckeElem nilpotent_inverse(const HeckeElem& a) {
  const HeckePtr& H = a.algebra();
  auto x = solve(regular_rep(a), H->one().to_kvec(), H->field());
  if (!x) throw Error(Errc::NotInvertible, "element is not invertible");
  HeckeElem b = HeckeElem::from_kvec(H, *x);
  if (!(b * a == H->one())) throw Error(Errc::NotInvertible, "right inverse is not a left inverse");
  return b;
}

HeckeElem neumann_inverse(const HeckeElem& a) {
  const HeckePtr& H = a.algebra();
  auto roots = split_roots(min_poly(a).poly());
  if (roots.size() != 1) throw Error(Errc::ConfigError, "element is not a scalar plus a nilpotent");
  if (roots[0].first.is_zero()) throw Error(Errc::NotInvertible, "element is nilpotent");
  LocalScalar cinv(H->ring(), roots[0].first.inv());
  HeckeElem n = a * cinv - H->one();
  HeckeElem term = H->one(), acc = H->one();
  for (int j = 0; j <= H->k_dim(); ++j) {
    term = -(n * term);
    if (term.is_zero()) return acc * cinv;
    acc += term;
  }
  throw Error(Errc::NotInvertible, "Neumann series did not terminate");
}

ZVec apply_power_series(const DotPoly& num, const DotPoly& den, const BlockIdempotent& e, const HeckeAlgebra& H,
                        const ZVec& v) {
  std::vector<LocalScalar> point;
  for (const auto& i : e.tuple) point.emplace_back(H.ring(), i);
  LocalScalar c0 = den.eval(point);
  if (!c0.is_unit()) throw Error(Errc::SingularSeries, "denominator vanishes at the eigenvalue tuple");
  LocalScalar cinv = c0.inv_unit();
  DotPoly nil = (den - c0) * cinv;
  ZVec term = v, acc = v;
  for (int j = 0;; ++j) {
    if (j > H.k_dim()) throw Error(Errc::SingularSeries, "power series did not stabilize");
    term = nil.apply(H, term);
    if (all_zero(term)) break;
    for (std::size_t s = 0; s < term.size(); ++s) {
      term[s] = -term[s];
      acc[s] += term[s];
    }
  }
  for (auto& c : acc) c *= cinv;
  return num.apply(H, acc);
}

HeckeElem eval_power_series(const DotPoly& num, const DotPoly& den, const BlockIdempotent& e, const HeckePtr& H) {
  return HeckeElem(H, apply_power_series(num, den, e, *H, e.element.coeffs()));
}

}  // namespace heis
