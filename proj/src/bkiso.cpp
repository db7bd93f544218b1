#include "heis/bkiso.hpp"

#include <deque>
#include <functional>

namespace heis {

namespace {

std::vector<std::string> tuple_strings(const Tuple& i) {
  std::vector<std::string> out;
  for (const auto& s : i) out.push_back(s.str());
  return out;
}

std::string witness(const HeckeElem& diff) {
  std::string s = diff.str();
  if (s.size() > 400) s = s.substr(0, 400) + " ...";
  return s;
}

Tuple swapped(Tuple i, int r) {
  std::swap(i[r - 1], i[r]);
  return i;
}

}  // namespace

KLRGenerators::KLRGenerators(const HeckePtr& H) : H_(H), blocks_(block_idempotents(H)) {
  const int d = H->d();
  for (std::size_t b = 0; b < blocks_.size(); ++b) index_[blocks_[b].tuple] = static_cast<int>(b);
  y_all_.assign(d, H->zero());
  psi_all_.assign(std::max(d - 1, 0), H->zero());
  for (const auto& e : blocks_) {
    std::vector<HeckeElem> ys, psis;
    for (int r = 1; r <= d; ++r) {
      ys.emplace_back(H, dot_poly(r, e.tuple[r - 1]).apply(*H, e.element.coeffs()));
      y_all_[r - 1] += ys.back();
    }
    for (int r = 1; r < d; ++r) {
      psis.push_back(crossing_from(r, e.tuple, H->T(r)));
      psi_all_[r - 1] += psis.back();
    }
    y_.push_back(std::move(ys));
    psi_.push_back(std::move(psis));
  }
}

int KLRGenerators::find(const Tuple& i) const {
  auto it = index_.find(i);
  return it == index_.end() ? -1 : it->second;
}

const BlockIdempotent& KLRGenerators::block(const Tuple& i) const {
  int b = find(i);
  if (b < 0) throw Error(Errc::ZeroBlock, "the block idempotent of this tuple is zero");
  return blocks_[b];
}

const HeckeElem& KLRGenerators::dot(int r, const Tuple& i) const {
  int b = find(i);
  if (b < 0) throw Error(Errc::ZeroBlock, "the block idempotent of this tuple is zero");
  return y_[b].at(r - 1);
}

const HeckeElem& KLRGenerators::crossing(int r, const Tuple& i) const {
  int b = find(i);
  if (b < 0) throw Error(Errc::ZeroBlock, "the block idempotent of this tuple is zero");
  return psi_[b].at(r - 1);
}

Scalar KLRGenerators::succ(const Scalar& i) const {
  const auto& P = H_->param();
  if (!P.is_quantum()) return i + Scalar(1, i.field());
  return *P.q * *P.q * i;
}

Scalar KLRGenerators::pred(const Scalar& i) const {
  const auto& P = H_->param();
  if (!P.is_quantum()) return i - Scalar(1, i.field());
  return (*P.q * *P.q).inv() * i;
}

DotPoly KLRGenerators::dot_poly(int r, const Scalar& a) const {
  const LocalRing& R = H_->ring();
  DotPoly x = DotPoly::var(R, H_->d(), r);
  if (!H_->param().is_quantum()) return x - LocalScalar(R, a);
  return x * LocalScalar(R, a.inv()) - LocalScalar(R, 1);
}

ZVec KLRGenerators::project(const Tuple& i, const ZVec& v) const {
  int b = find(i);
  if (b < 0) return ZVec(v.size(), LocalScalar(H_->ring()));
  return blocks_[b].apply(*H_, v);
}

HeckeElem KLRGenerators::crossing_from(int r, const Tuple& i, const HeckeElem& s) const {
  const HeckeAlgebra& H = *H_;
  const LocalRing& R = H.ring();
  const int d = H.d();
  const BlockIdempotent& e = block(i);
  const Scalar a = i[r - 1], b = i[r];
  const Tuple si = swapped(i, r);
  DotPoly xr = DotPoly::var(R, d, r), xr1 = DotPoly::var(R, d, r + 1);
  DotPoly one = DotPoly::constant(R, d, LocalScalar(R, 1));
  auto series = [&](const DotPoly& num, const DotPoly& den) {
    return HeckeElem(H_, apply_power_series(num, den, e, H, e.element.coeffs()));
  };
  auto sandwich = [&](const Tuple& target, const HeckeElem& w) {
    return HeckeElem(H_, project(target, (s * w).coeffs()));
  };
  if (!H.param().is_quantum()) {
    if (a == b) {
      HeckeElem w = series(one, xr1 - xr + LocalScalar(R, 1));
      return sandwich(i, w) + w;
    }
    if (b == succ(a)) return sandwich(si, series(xr1 - xr, one));
    return -sandwich(si, series(xr1 - xr, xr1 - xr - LocalScalar(R, 1)));
  }
  const Scalar q = *H.param().q, qi = q.inv();
  if (a == b) {
    HeckeElem w = series(one, xr1 * LocalScalar(R, q) - xr * LocalScalar(R, qi));
    return (sandwich(i, w) + w * qi) * a;
  }
  if (b == succ(a)) return sandwich(si, series(xr1 - xr, one)) * (qi * a.inv());
  return -sandwich(si, series(xr1 - xr, xr1 * LocalScalar(R, qi) - xr * LocalScalar(R, q)));
}

HeckeElem km_dot(const KLRGenerators& g, int r, const Tuple& i) { return g.dot(r, i); }
HeckeElem km_crossing(const KLRGenerators& g, int r, const Tuple& i) { return g.crossing(r, i); }

Report verify_klr_relations(const KLRGenerators& g) {
  Report rep;
  const HeckePtr& H = g.algebra();
  const int d = H->d();
  auto record = [&](const std::string& rel, const std::string& kase, const Tuple& i, std::vector<int> idx,
                    const HeckeElem& lhs, const HeckeElem& rhs) {
    HeckeElem diff = lhs - rhs;
    Check c{rel, kase, tuple_strings(i), std::move(idx), diff.is_zero(), ""};
    if (!c.pass) c.witness = witness(diff);
    rep.checks.push_back(std::move(c));
  };
  for (const auto& blk : g.blocks()) {
    const Tuple& i = blk.tuple;
    const HeckeElem& e = blk.element;
    const HeckeElem zero = H->zero();
    for (int r = 1; r <= d; ++r)
      for (int s = r + 1; s <= d; ++s)
        record("dot-crossing", "dots commute", i, {r, s}, g.dot(r) * g.dot(s) * e, g.dot(s) * g.dot(r) * e);
    for (int r = 1; r < d; ++r) {
      const Scalar a = i[r - 1], b = i[r];
      const HeckeElem& psi = g.crossing(r);
      const HeckeElem psi_e = g.crossing(r, i);
      const HeckeElem delta = a == b ? e : zero;
      record("dot-crossing", "psi y_{r+1} - y_r psi", i, {r}, psi * g.dot(r + 1) * e - g.dot(r) * psi_e, delta);
      record("dot-crossing", "y_{r+1} psi - psi y_r", i, {r}, g.dot(r + 1) * psi_e - psi * g.dot(r) * e, delta);
      for (int s = 1; s <= d; ++s) {
        if (s == r || s == r + 1) continue;
        record("dot-crossing", "far dot", i, {r, s}, g.dot(s) * psi_e, psi * g.dot(s) * e);
      }
      for (int s = r + 2; s < d; ++s)
        record("dot-crossing", "far crossings", i, {r, s}, psi * g.crossing(s) * e, g.crossing(s) * psi_e);

      // Quadratic relation, with y_r, y_{r+1} the dots on strands r, r+1.
      const HeckeElem yr = g.dot(r) * e, yr1 = g.dot(r + 1) * e;
      std::string kase;
      HeckeElem rhs = zero;
      const bool up = b == g.succ(a), down = b == g.pred(a);
      if (a == b) {
        kase = "i=j";
      } else if (up && down) {
        kase = "i=j+=j-";
        rhs = -((yr1 - yr) * (yr1 - yr));
      } else if (up) {
        kase = "j=i+";
        rhs = yr - yr1;
      } else if (down) {
        kase = "j=i-";
        rhs = yr1 - yr;
      } else {
        kase = "unlinked";
        rhs = e;
      }
      record("quadratic", kase, i, {r}, psi * psi_e, rhs);

      if (r + 1 < d) {
        const Scalar c = i[r + 1];
        const HeckeElem& psi1 = g.crossing(r + 1);
        HeckeElem lhs = psi1 * psi * psi1 * e - psi * psi1 * psi * e;
        HeckeElem rhs3 = zero;
        std::string k3 = "generic";
        const bool jm = a == g.pred(b), jp = a == g.succ(b);
        if (a == c && jm && jp) {
          k3 = "i=k=j-=j+";
          rhs3 = (g.dot(r + 1) * Scalar(2, H->field()) - g.dot(r + 2) - g.dot(r)) * e;
        } else if (a == c && jm) {
          k3 = "i=k=j-";
          rhs3 = e;
        } else if (a == c && jp) {
          k3 = "i=k=j+";
          rhs3 = -e;
        }
        record("braid", k3, i, {r}, lhs, rhs3);
      }
    }
  }
  return rep;
}

Report verify_cyclotomic_klr(const KLRGenerators& g, const std::map<Scalar, MonicPoly, ScalarLess>& mu) {
  Report rep;
  const HeckePtr& H = g.algebra();
  if (H->d() == 0) return rep;
  const LocalRing& R = H->ring();
  for (const auto& blk : g.blocks()) {
    const Scalar& i1 = blk.tuple[0];
    auto it = mu.find(i1);
    Poly m = it == mu.end() ? Poly::constant(LocalScalar(R, 1)) : it->second.poly();
    DotPoly y = g.dot_poly(1, i1);
    DotPoly acc(R, H->d());
    for (int j = m.degree(); j >= 0; --j) acc = acc * y + m.coeff(j);
    HeckeElem val(H, acc.apply(*H, blk.element.coeffs()));
    Check c{"cyclotomic", "mu_{i_1}(y_1) e(i)", tuple_strings(blk.tuple), {1}, val.is_zero(), ""};
    if (!c.pass) c.witness = witness(val);
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

HeckeElem heis_from_km(const KLRGenerators& g, HeisGen kind, int r) {
  const HeckePtr& H = g.algebra();
  const LocalRing& R = H->ring();
  const int d = H->d();
  const bool quantum = H->param().is_quantum();
  HeckeElem out = H->zero();
  if (kind == HeisGen::dot) {
    for (const auto& blk : g.blocks()) {
      const Scalar a = blk.tuple[r - 1];
      const HeckeElem& y = g.dot(r, blk.tuple);
      out += quantum ? (y + blk.element) * a : y + blk.element * a;
    }
    return out;
  }
  const HeckeElem& psi = g.crossing(r);
  const DotPoly one = DotPoly::constant(R, d, LocalScalar(R, 1));
  for (const auto& blk : g.blocks()) {
    const Tuple& i = blk.tuple;
    const Scalar a = i[r - 1], b = i[r];
    const HeckeElem& e = blk.element;
    const DotPoly Y = g.dot_poly(r, a), Y1 = g.dot_poly(r + 1, b);
    auto series = [&](const DotPoly& num, const DotPoly& den) { return eval_power_series(num, den, blk, H); };
    if (!quantum) {
      const DotPoly D = Y1 - Y;
      if (a == b) {
        out += psi * series(D + LocalScalar(R, 1), one) - e;
      } else if (b == g.succ(a)) {
        out += psi * series(one, D + LocalScalar(R, 1)) + series(one, D + LocalScalar(R, 1));
      } else {
        LocalScalar ba(R, b - a);
        out += -(psi * series(D + ba - LocalScalar(R, 1), D + ba)) + series(one, D + ba);
      }
      continue;
    }
    const Scalar q = *H->param().q, qi = q.inv();
    const LocalScalar z(R, H->param().z);
    const DotPoly P = Y + LocalScalar(R, 1), P1 = Y1 + LocalScalar(R, 1);
    if (a == b) {
      out += psi * series(P1 * LocalScalar(R, q) - P * LocalScalar(R, qi), one) - e * qi;
    } else if (b == g.succ(a)) {
      DotPoly den = P1 * LocalScalar(R, q) - P * LocalScalar(R, qi);
      out += psi * series(one, den) + series(P1, den) * (z * q);
    } else {
      DotPoly den = P1 * LocalScalar(R, b) - P * LocalScalar(R, a);
      out += -(psi * series(P1 * LocalScalar(R, qi * b) - P * LocalScalar(R, q * a), den)) +
             series(P1, den) * (z * b);
    }
  }
  return out;
}

Report roundtrip_check(const KLRGenerators& g) {
  Report rep;
  const HeckePtr& H = g.algebra();
  const int d = H->d();
  const bool quantum = H->param().is_quantum();
  auto record = [&](const std::string& rel, const std::string& kase, const Tuple& i, int r, const HeckeElem& lhs,
                    const HeckeElem& rhs) {
    HeckeElem diff = lhs - rhs;
    Check c{rel, kase, tuple_strings(i), {r}, diff.is_zero(), ""};
    if (!c.pass) c.witness = witness(diff);
    rep.checks.push_back(std::move(c));
  };
  std::vector<HeckeElem> xs, ss;
  for (int r = 1; r <= d; ++r) {
    xs.push_back(heis_from_km(g, HeisGen::dot, r));
    record("roundtrip", quantum ? "X_r from KLR" : "x_r from KLR", {}, r, xs.back(), H->x(r));
  }
  for (int r = 1; r < d; ++r) {
    ss.push_back(heis_from_km(g, HeisGen::crossing, r));
    record("roundtrip", quantum ? "tau_r from KLR" : "s_r from KLR", {}, r, ss.back(), H->T(r));
  }
  // Feed the rebuilt Hecke generators back through the KLR assignments.
  for (const auto& blk : g.blocks()) {
    for (int r = 1; r <= d; ++r) {
      const Scalar a = blk.tuple[r - 1];
      HeckeElem y = quantum ? (xs[r - 1] * a.inv() - H->one()) * blk.element
                            : (xs[r - 1] - H->scalar(LocalScalar(H->ring(), a))) * blk.element;
      record("roundtrip", "y_r from Hecke", blk.tuple, r, y, g.dot(r, blk.tuple));
    }
    for (int r = 1; r < d; ++r)
      record("roundtrip", "psi_r from Hecke", blk.tuple, r, g.crossing_from(r, blk.tuple, ss[r - 1]),
             g.crossing(r, blk.tuple));
  }
  return rep;
}

Report rank_check(const KLRGenerators& g) {
  const HeckePtr& H = g.algebra();
  const int d = H->d();
  std::vector<std::function<ZVec(const ZVec&)>> ops;
  for (const auto& blk : g.blocks()) ops.push_back([&H, &blk](const ZVec& v) { return blk.apply(*H, v); });
  std::vector<std::vector<SparseCol>> cols;
  for (int r = 1; r <= d; ++r) cols.push_back(H->left_columns(g.dot(r)));
  for (int r = 1; r < d; ++r) cols.push_back(H->left_columns(g.crossing(r)));
  for (const auto& c : cols) ops.push_back([&H, &c](const ZVec& v) { return H->apply_cols(c, v); });
  if (H->ring().N > 1) ops.push_back([&H](const ZVec& v) { return H->apply_t(v); });

  Echelon ech(H->k_dim(), H->field());
  std::deque<ZVec> queue;
  for (const auto& blk : g.blocks())
    if (ech.add(blk.element.to_kvec())) queue.push_back(blk.element.coeffs());
  while (!queue.empty()) {
    ZVec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : ops) {
      ZVec w = op(v);
      if (ech.add(HeckeElem(H, w).to_kvec())) queue.push_back(std::move(w));
    }
  }
  Report rep;
  Check c{"rank", "subalgebra generated by e(i), y_r, psi_r", {}, {d}, ech.rank() == H->k_dim(), ""};
  if (!c.pass) c.witness = "rank " + std::to_string(ech.rank()) + " of " + std::to_string(H->k_dim());
  rep.checks.push_back(std::move(c));
  return rep;
}

}  // namespace heis
