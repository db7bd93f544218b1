#include "heis/hecke.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace heis {

Permutation::Permutation(int d) : w_(d) { std::iota(w_.begin(), w_.end(), 1); }

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<int> seen(w_.size() + 1, 0);
  for (int v : w_) {
    if (v < 1 || v > size() || seen[v]++) throw Error(Errc::ConfigError, "not a permutation");
  }
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

bool Permutation::left_mul_longer(int r) const {
  auto pr = std::find(w_.begin(), w_.end(), r), pr1 = std::find(w_.begin(), w_.end(), r + 1);
  return pr < pr1;
}

Permutation Permutation::left_mul(int r) const {
  Permutation p = *this;
  for (int& v : p.w_) {
    if (v == r)
      v = r + 1;
    else if (v == r + 1)
      v = r;
  }
  return p;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  while (true) {
    int r = 1;
    while (r < size() && w.left_mul_longer(r)) ++r;
    if (r >= size()) break;
    word.push_back(r);
    w = w.left_mul(r);
  }
  return word;
}

Permutation Permutation::operator*(const Permutation& o) const {
  std::vector<int> r(size());
  for (int i = 1; i <= size(); ++i) r[i - 1] = (*this)(o(i));
  return Permutation(std::move(r));
}

std::vector<Permutation> Permutation::all(int d) {
  std::vector<int> w(d);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}


namespace {

// (f - s f)/(b - a) for f = x^e, with a, b the dots at 0-based positions i, i+1.
std::vector<std::pair<std::vector<int>, int>> divided_difference(const std::vector<int>& e, int i) {
  std::vector<std::pair<std::vector<int>, int>> out;
  int p = e[i], q = e[i + 1];
  int lo = std::min(p, q), span = std::abs(p - q) - 1;
  int sign = p > q ? -1 : 1;
  for (int c = 0; c <= span; ++c) {
    std::vector<int> f = e;
    f[i] = lo + c;
    f[i + 1] = lo + span - c;
    out.emplace_back(std::move(f), sign);
  }
  return out;
}

std::vector<int> swapped(std::vector<int> e, int i) {
  std::swap(e[i], e[i + 1]);
  return e;
}

void acc_add(std::map<int, LocalScalar>& acc, int i, const LocalScalar& c) {
  auto it = acc.find(i);
  if (it == acc.end())
    acc.emplace(i, c);
  else
    it->second += c;
}

SparseCol to_col(const std::map<int, LocalScalar>& acc) {
  SparseCol col;
  for (const auto& [i, c] : acc)
    if (!c.is_zero()) col.emplace_back(i, c);
  return col;
}

}  // namespace

HeckeAlgebra::HeckeAlgebra(const QuantumParam& param, int d, const MonicPoly& m)
    : param_(param), d_(d), m_(m), ring_(m.ring()), ell_(m.degree()) {}

HeckePtr HeckeAlgebra::create(const QuantumParam& param, int d, const MonicPoly& m) {
  if (d < 0) throw Error(Errc::ConfigError, "negative Hecke degree");
  if (!(param.z.field() == m.ring().field)) throw Error(Errc::ConfigError, "level polynomial over a different field");
  if (param.is_quantum() && !m.coeff(0).is_unit())
    throw Error(Errc::InvalidLevelData, "quantum level needs m(0) to be a unit, got " + m.coeff(0).str());
  std::shared_ptr<HeckeAlgebra> H(new HeckeAlgebra(param, d, m));
  H->build();
  return H;
}

int HeckeAlgebra::mono_index(const std::vector<int>& a) const {
  int idx = 0;
  for (int r = d_ - 1; r >= 0; --r) idx = idx * ell_ + a[r];
  return idx;
}

int HeckeAlgebra::index(const HeckeLabel& l) const {
  auto it = perm_index_.find(l.w);
  if (it == perm_index_.end() || static_cast<int>(l.exps.size()) != d_) throw Error(Errc::ConfigError, "label outside basis");
  for (int a : l.exps)
    if (a < 0 || a >= ell_) throw Error(Errc::ConfigError, "label exponent outside [0, ell)");
  return it->second * nmono_ + mono_index(l.exps);
}

void HeckeAlgebra::build() {
  nmono_ = 1;
  for (int r = 0; r < d_; ++r) nmono_ *= ell_;
  perms_ = Permutation::all(d_);
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    perm_index_[perms_[i]] = static_cast<int>(i);
    reduced_words_.push_back(perms_[i].reduced_word());
  }
  left_mul_.assign(std::max(d_ - 1, 0), std::vector<int>(perms_.size()));
  left_longer_.assign(std::max(d_ - 1, 0), std::vector<char>(perms_.size()));
  for (int r = 1; r < d_; ++r)
    for (std::size_t i = 0; i < perms_.size(); ++i) {
      left_mul_[r - 1][i] = perm_index_.at(perms_[i].left_mul(r));
      left_longer_[r - 1][i] = perms_[i].left_mul_longer(r);
    }
  for (std::size_t w = 0; w < perms_.size(); ++w)
    for (int mono = 0; mono < nmono_; ++mono) {
      std::vector<int> a(d_);
      int rest = mono;
      for (int r = 0; r < d_; ++r) a[r] = rest % ell_, rest /= ell_;
      labels_.push_back({a, perms_[w]});
    }
  const LocalScalar one(ring_, 1);
  const LocalScalar z(ring_, param_.z);
  // Crossings never push exponents out of [0, ell), so these columns need no reduction.
  for (int g = 1; g < d_; ++g) {
    std::vector<SparseCol> cols;
    for (const auto& l : labels_) {
      Acc out;
      TComb X{{perm_index_.at(l.w), one}};
      add_term(out, swapped(l.exps, g - 1), T_times(g, X), one);
      for (auto& [e, sign] : divided_difference(l.exps, g - 1)) {
        if (kind() == HeckeKind::quantum) {
          ++e[g];
          add_term(out, e, X, z * Scalar(sign, field()));
        } else {
          add_term(out, e, X, LocalScalar(ring_, sign));
        }
      }
      cols.push_back(to_col(out));
    }
    gen_T_.push_back(std::move(cols));
  }
  for (int r = 1; r <= d_; ++r) {
    std::vector<SparseCol> cols;
    for (const auto& l : labels_) {
      Acc out;
      std::vector<int> a = l.exps;
      ++a[r - 1];
      add_term(out, a, TComb{{perm_index_.at(l.w), one}}, one);
      cols.push_back(to_col(out));
    }
    gen_x_.push_back(std::move(cols));
  }
  products_.resize(labels_.size());
}

HeckeAlgebra::TComb HeckeAlgebra::T_times(int r, const TComb& X) const {
  TComb out;
  for (const auto& [w, c] : X) {
    int sw = left_mul_[r - 1][w];
    if (kind() == HeckeKind::degenerate || left_longer_[r - 1][w]) {
      acc_add(out, sw, c);
    } else {
      acc_add(out, w, c * param_.z);
      acc_add(out, sw, c);
    }
  }
  return out;
}

void HeckeAlgebra::add_term(Acc& out, const std::vector<int>& a, const TComb& X, const LocalScalar& c) const {
  if (c.is_zero()) return;
  for (int e : a)
    if (e >= ell_) {
      reduce_overflow(out, a, X, c);
      return;
    }
  int mono = mono_index(a);
  for (const auto& [w, cw] : X)
    if (!cw.is_zero()) acc_add(out, w * nmono_ + mono, c * cw);
}

// x^a X with a single exponent equal to ell.  At the first strand use m(x_1) = 0;
// further left, write x^a = s (s x^a) (degenerate) or T (T^{-1} x^a) (quantum) and
// slide the dots one strand to the right.
void HeckeAlgebra::reduce_overflow(Acc& out, const std::vector<int>& a, const TComb& X, const LocalScalar& c) const {
  int r0 = 0;
  while (a[r0] < ell_) ++r0;
  if (r0 == 0) {
    for (int j = 0; j < ell_; ++j) {
      std::vector<int> b = a;
      b[0] = j;
      add_term(out, b, X, -(c * m_.coeff(j)));
    }
    return;
  }
  const int g = r0;
  Acc tmp;
  const LocalScalar one(ring_, 1);
  if (kind() == HeckeKind::degenerate) {
    add_term(tmp, swapped(a, g - 1), T_times(g, X), one);
    for (const auto& [e, sign] : divided_difference(a, g - 1)) add_term(tmp, e, X, LocalScalar(ring_, sign));
  } else {
    const LocalScalar z(ring_, param_.z);
    TComb Tinv = T_times(g, X);
    for (const auto& [w, cw] : X) acc_add(Tinv, w, -(cw * z));
    add_term(tmp, swapped(a, g - 1), Tinv, one);
    for (auto [e, sign] : divided_difference(a, g - 1)) {
      ++e[g - 1];
      add_term(tmp, e, X, z * Scalar(sign, field()));
    }
  }
  apply_T_acc(g, tmp, out, c);
}

void HeckeAlgebra::apply_T_acc(int r, const Acc& in, Acc& out, const LocalScalar& c) const {
  for (const auto& [j, v] : in) {
    if (v.is_zero()) continue;
    LocalScalar cv = c * v;
    for (const auto& [i, w] : gen_T_[r - 1][j]) acc_add(out, i, w * cv);
  }
}

ZVec HeckeAlgebra::apply_cols(const std::vector<SparseCol>& cols, const ZVec& v) const {
  ZVec out(dim(), LocalScalar(ring_));
  for (int j = 0; j < dim(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [i, c] : cols[j]) out[i].add_mul(c, v[j]);
  }
  return out;
}

ZVec HeckeAlgebra::apply_x(int r, const ZVec& v) const {
  if (r < 1 || r > d_) throw Error(Errc::ConfigError, "dot index out of range");
  return apply_cols(gen_x_[r - 1], v);
}

ZVec HeckeAlgebra::apply_T(int r, const ZVec& v) const {
  if (r < 1 || r >= d_) throw Error(Errc::ConfigError, "crossing index out of range");
  return apply_cols(gen_T_[r - 1], v);
}

ZVec HeckeAlgebra::apply_t(const ZVec& v) const {
  ZVec out = v;
  for (auto& c : out) c = c.shifted(1);
  return out;
}

ZVec HeckeAlgebra::apply_basis(int u, const ZVec& v) const {
  const HeckeLabel& l = labels_[u];
  ZVec out = v;
  const auto& word = reduced_words_[perm_index_.at(l.w)];
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_T(*it, out);
  for (int r = 1; r <= d_; ++r)
    for (int k = 0; k < l.exps[r - 1]; ++k) out = apply_x(r, out);
  return out;
}

HeckeElem HeckeAlgebra::zero() const { return HeckeElem(shared_from_this()); }

HeckeElem HeckeAlgebra::scalar(const LocalScalar& c) const {
  ZVec v(dim(), LocalScalar(ring_));
  if (dim() > 0) v[index({std::vector<int>(d_, 0), Permutation(d_)})] = c;
  return HeckeElem(shared_from_this(), std::move(v));
}

HeckeElem HeckeAlgebra::one() const { return scalar(LocalScalar(ring_, 1)); }

HeckeElem HeckeAlgebra::basis_elem(int u) const {
  ZVec v(dim(), LocalScalar(ring_));
  v[u] = LocalScalar(ring_, 1);
  return HeckeElem(shared_from_this(), std::move(v));
}

HeckeElem HeckeAlgebra::x(int r) const { return HeckeElem(shared_from_this(), apply_x(r, one().coeffs())); }

HeckeElem HeckeAlgebra::T(int r) const { return HeckeElem(shared_from_this(), apply_T(r, one().coeffs())); }

HeckeElem HeckeAlgebra::T_inv(int r) const {
  if (kind() == HeckeKind::degenerate) return T(r);
  return T(r) - scalar(LocalScalar(ring_, param_.z));
}

HeckeElem HeckeAlgebra::x_inv(int r) const {
  if (kind() == HeckeKind::degenerate) throw Error(Errc::ConfigError, "degenerate dots are not invertible");
  if (r == 1) {
    // m(X_1) = 0 gives X_1 (X_1^{l-1} + m_{l-1} X_1^{l-2} + ... + m_1) = -m(0).
    LocalScalar c = -m_.coeff(0).inv_unit();
    HeckeElem acc = zero(), p = one();
    for (int j = 1; j <= ell_; ++j) {
      acc += p * m_.coeff(j);
      p = x(1) * p;
    }
    return acc * c;
  }
  HeckeElem ti = T_inv(r - 1);
  return ti * x_inv(r - 1) * ti;
}

const SparseCol& HeckeAlgebra::product(int u, int v) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (!products_[u]) {
    auto row = std::make_unique<std::vector<SparseCol>>();
    for (int w = 0; w < dim(); ++w) {
      ZVec e(dim(), LocalScalar(ring_));
      e[w] = LocalScalar(ring_, 1);
      ZVec r = apply_basis(u, e);
      SparseCol col;
      for (int i = 0; i < dim(); ++i)
        if (!r[i].is_zero()) col.emplace_back(i, r[i]);
      row->push_back(std::move(col));
    }
    products_[u] = std::move(row);
  }
  return (*products_[u])[v];
}

HeckeElem HeckeAlgebra::mul(const HeckeElem& a, const HeckeElem& b) const {
  ZVec out(dim(), LocalScalar(ring_));
  LocalScalar ab(ring_);
  for (int u = 0; u < dim(); ++u) {
    if (a[u].is_zero()) continue;
    product(u, 0);
    const auto& row = *products_[u];
    for (int v = 0; v < dim(); ++v) {
      if (b[v].is_zero()) continue;
      ab = a[u] * b[v];
      for (const auto& [i, c] : row[v]) out[i].add_mul(c, ab);
    }
  }
  return HeckeElem(shared_from_this(), std::move(out));
}

std::vector<SparseCol> HeckeAlgebra::left_columns(const HeckeElem& a) const {
  std::vector<SparseCol> cols;
  for (int u = 0; u < dim(); ++u) {
    HeckeElem c = mul(a, basis_elem(u));
    SparseCol col;
    for (int i = 0; i < dim(); ++i)
      if (!c[i].is_zero()) col.emplace_back(i, c[i]);
    cols.push_back(std::move(col));
  }
  return cols;
}

HeckeAlgebra::RelationReport HeckeAlgebra::verify_operator_relations() const {
  RelationReport rep;
  const LocalScalar z(ring_, param_.z);
  auto expect = [&](bool ok, const std::string& what, int j) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(what + " on basis vector " + std::to_string(j));
  };
  auto axpy = [&](ZVec a, const ZVec& b, const LocalScalar& c) {
    for (int i = 0; i < dim(); ++i) a[i].add_mul(c, b[i]);
    return a;
  };
  const LocalScalar one(ring_, 1);
  for (int j = 0; j < dim(); ++j) {
    ZVec e(dim(), LocalScalar(ring_));
    e[j] = one;
    for (int r = 1; r < d_; ++r) {
      ZVec Te = apply_T(r, e), TTe = apply_T(r, Te);
      if (kind() == HeckeKind::degenerate)
        expect(TTe == e, "s_" + std::to_string(r) + "^2 = 1", j);
      else
        expect(TTe == axpy(e, Te, z), "T_" + std::to_string(r) + "^2 = z T + 1", j);
      if (r + 1 < d_)
        expect(apply_T(r, apply_T(r + 1, Te)) == apply_T(r + 1, apply_T(r, apply_T(r + 1, e))),
               "braid at " + std::to_string(r), j);
      for (int s = r + 2; s < d_; ++s)
        expect(apply_T(r, apply_T(s, e)) == apply_T(s, Te), "far crossings " + std::to_string(r) + "," + std::to_string(s), j);
      // Dot slides.
      if (kind() == HeckeKind::degenerate)
        expect(apply_x(r + 1, Te) == axpy(apply_T(r, apply_x(r, e)), e, one), "x_{r+1} s_r = s_r x_r + 1 at " + std::to_string(r), j);
      else
        expect(apply_x(r + 1, e) == apply_T(r, apply_x(r, Te)), "X_{r+1} = T_r X_r T_r at " + std::to_string(r), j);
      for (int s = 1; s <= d_; ++s) {
        if (s == r || s == r + 1) continue;
        expect(apply_x(s, Te) == apply_T(r, apply_x(s, e)), "x_s commutes with crossing " + std::to_string(r), j);
      }
    }
    for (int r = 1; r <= d_; ++r)
      for (int s = r + 1; s <= d_; ++s)
        expect(apply_x(r, apply_x(s, e)) == apply_x(s, apply_x(r, e)), "dots commute", j);
    if (d_ >= 1) {
      ZVec acc(dim(), LocalScalar(ring_)), p = e;
      for (int k = 0; k <= ell_; ++k) {
        acc = axpy(acc, p, m_.coeff(k));
        if (k < ell_) p = apply_x(1, p);
      }
      bool zero = true;
      for (const auto& c : acc) zero = zero && c.is_zero();
      expect(zero, "m(x_1) = 0", j);
    }
  }
  return rep;
}

int HeckeAlgebra::closure_rank() const {
  if (dim() == 0) return 0;
  Echelon ech(k_dim(), field());
  std::deque<ZVec> queue;
  ZVec start = one().coeffs();
  ech.add(HeckeElem(shared_from_this(), start).to_kvec());
  queue.push_back(start);
  while (!queue.empty()) {
    ZVec v = std::move(queue.front());
    queue.pop_front();
    std::vector<ZVec> images;
    for (int r = 1; r <= d_; ++r) images.push_back(apply_x(r, v));
    for (int r = 1; r < d_; ++r) images.push_back(apply_T(r, v));
    if (ring_.N > 1) images.push_back(apply_t(v));
    for (auto& w : images)
      if (ech.add(HeckeElem(shared_from_this(), w).to_kvec())) queue.push_back(std::move(w));
  }
  return ech.rank();
}

HeckeElem::HeckeElem(HeckePtr alg) : alg_(std::move(alg)), c_(alg_->dim(), LocalScalar(alg_->ring())) {}

HeckeElem::HeckeElem(HeckePtr alg, ZVec c) : alg_(std::move(alg)), c_(std::move(c)) {
  if (static_cast<int>(c_.size()) != alg_->dim()) throw Error(Errc::ConfigError, "coordinate vector has wrong length");
}

void HeckeElem::check(const HeckeElem& o) const {
  if (!alg_ || alg_ != o.alg_) throw Error(Errc::ConfigError, "Hecke elements from different algebras");
}

bool HeckeElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

HeckeElem HeckeElem::operator-() const {
  HeckeElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

HeckeElem HeckeElem::operator+(const HeckeElem& o) const {
  HeckeElem r = *this;
  r += o;
  return r;
}

HeckeElem HeckeElem::operator-(const HeckeElem& o) const {
  HeckeElem r = *this;
  r -= o;
  return r;
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

HeckeElem HeckeElem::operator*(const HeckeElem& o) const {
  check(o);
  return alg_->mul(*this, o);
}

HeckeElem HeckeElem::operator*(const LocalScalar& s) const {
  HeckeElem r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

HeckeElem HeckeElem::operator*(const Scalar& s) const {
  HeckeElem r = *this;
  for (auto& c : r.c_) c = c * s;
  return r;
}

HeckeElem operator*(const LocalScalar& s, const HeckeElem& a) { return a * s; }
HeckeElem operator*(const Scalar& s, const HeckeElem& a) { return a * s; }

bool HeckeElem::operator==(const HeckeElem& o) const {
  check(o);
  return c_ == o.c_;
}

KVec HeckeElem::to_kvec() const {
  const int N = alg_->ring().N;
  KVec v;
  v.reserve(c_.size() * N);
  for (const auto& c : c_)
    for (int s = 0; s < N; ++s) v.push_back(c[s]);
  return v;
}

HeckeElem HeckeElem::from_kvec(const HeckePtr& alg, const KVec& v) {
  const int N = alg->ring().N;
  if (static_cast<int>(v.size()) != alg->k_dim()) throw Error(Errc::ConfigError, "k-vector has wrong length");
  ZVec c;
  for (int u = 0; u < alg->dim(); ++u) c.emplace_back(KVec(v.begin() + u * N, v.begin() + (u + 1) * N));
  return HeckeElem(alg, std::move(c));
}

std::vector<HeckeElem::Term> HeckeElem::terms() const {
  std::vector<Term> out;
  for (int u = 0; u < alg_->dim(); ++u)
    if (!c_[u].is_zero()) out.push_back({alg_->labels()[u], c_[u]});
  return out;
}

std::string HeckeElem::str() const {
  std::string out;
  for (const auto& [l, c] : terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (int r = 0; r < static_cast<int>(l.exps.size()); ++r)
      if (l.exps[r]) out += "*x" + std::to_string(r + 1) + (l.exps[r] > 1 ? "^" + std::to_string(l.exps[r]) : "");
    if (l.w.length() > 0) {
      out += "*T[";
      for (int v : l.w.one_line()) out += std::to_string(v);
      out += "]";
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<HeckeLabel> basis(int d, const MonicPoly& m) {
  return HeckeAlgebra::create(QuantumParam::degenerate(m.ring().field), d, m)->labels();
}

KMat regular_rep(const HeckeElem& a) {
  const HeckePtr& H = a.algebra();
  const int N = H->ring().N, D = H->k_dim();
  KMat M(D, KVec(D, Scalar(0, H->field())));
  for (int u = 0; u < H->dim(); ++u) {
    HeckeElem col = a * H->basis_elem(u);
    for (int s = 0; s < N; ++s) {
      for (int v = 0; v < H->dim(); ++v) {
        LocalScalar c = col[v].shifted(s);
        for (int s2 = 0; s2 < N; ++s2) M[v * N + s2][u * N + s] = c[s2];
      }
    }
  }
  return M;
}

MonicPoly min_poly(const HeckeElem& a) {
  const HeckePtr& H = a.algebra();
  LocalRing k = H->ring().residue_ring();
  Echelon ech(H->k_dim(), H->field(), true);
  HeckeElem p = H->one();
  for (int deg = 0;; ++deg) {
    KVec v = p.to_kvec();
    if (auto c = ech.express(v)) {
      std::vector<LocalScalar> coeffs;
      for (const auto& s : *c) coeffs.emplace_back(k, -s);
      coeffs.emplace_back(k, 1);
      return MonicPoly(Poly(k, std::move(coeffs)));
    }
    ech.add(v);
    p = a * p;
  }
}

MonicPoly min_poly_over_Z(const HeckeElem& a, const HeckeElem& e, bool* unique) {
  const HeckePtr& H = a.algebra();
  const LocalRing& r = H->ring();
  const int N = r.N;
  Echelon ech(H->k_dim(), H->field(), true);
  HeckeElem p = e;
  for (int deg = 0;; ++deg) {
    KVec target = (-p).to_kvec();
    if (auto c = ech.express(target)) {
      std::vector<LocalScalar> coeffs;
      for (int j = 0; j < deg; ++j) coeffs.emplace_back(KVec(c->begin() + j * N, c->begin() + (j + 1) * N));
      coeffs.emplace_back(r, 1);
      if (unique) *unique = ech.rank() == deg * N;
      return MonicPoly(Poly(r, std::move(coeffs)));
    }
    HeckeElem ps = p;
    for (int s = 0; s < N; ++s) {
      ech.add(ps.to_kvec());
      ps = HeckeElem(H, H->apply_t(ps.coeffs()));
    }
    p = a * p;
  }
}

HeckeElem eval_poly(const Poly& p, const HeckeElem& a) {
  const HeckePtr& H = a.algebra();
  HeckeElem acc = H->zero();
  for (int j = p.degree(); j >= 0; --j) acc = acc * a + H->scalar(p.coeff(j));
  return acc;
}

AffineElem AffineElem::one(const QuantumParam& param, int d, const LocalRing& r) {
  AffineElem e(param, d, r);
  e.add({std::vector<int>(d, 0), Permutation(d)}, LocalScalar(r, 1));
  return e;
}

AffineElem AffineElem::x(const QuantumParam& param, int d, const LocalRing& r, int i, int power) {
  if (power < 0 && !param.is_quantum()) throw Error(Errc::ConfigError, "degenerate dots are not invertible");
  AffineElem e(param, d, r);
  std::vector<int> a(d, 0);
  a[i - 1] = power;
  e.add({a, Permutation(d)}, LocalScalar(r, 1));
  return e;
}

AffineElem AffineElem::T(const QuantumParam& param, int d, const LocalRing& r, int i) {
  return one(param, d, r).left_T(i);
}

void AffineElem::add(const HeckeLabel& l, const LocalScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(l);
  if (it == terms_.end()) {
    terms_.emplace(l, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AffineElem AffineElem::operator+(const AffineElem& o) const {
  AffineElem r = *this;
  for (const auto& [l, c] : o.terms_) r.add(l, c);
  return r;
}

AffineElem AffineElem::operator-(const AffineElem& o) const { return *this + o * LocalScalar(ring_, -1); }

AffineElem AffineElem::operator*(const LocalScalar& s) const {
  AffineElem r(param_, d_, ring_);
  for (const auto& [l, c] : terms_) r.add(l, c * s);
  return r;
}

AffineElem AffineElem::left_T(int r) const {
  if (r < 1 || r >= d_) throw Error(Errc::ConfigError, "crossing index out of range");
  AffineElem out(param_, d_, ring_);
  const LocalScalar z(ring_, param_.z);
  for (const auto& [l, c] : terms_) {
    Permutation sw = l.w.left_mul(r);
    std::vector<int> sa = swapped(l.exps, r - 1);
    if (!param_.is_quantum() || l.w.left_mul_longer(r)) {
      out.add({sa, sw}, c);
    } else {
      out.add({sa, l.w}, c * z);
      out.add({sa, sw}, c);
    }
    for (auto [e, sign] : divided_difference(l.exps, r - 1)) {
      if (param_.is_quantum()) {
        ++e[r];
        out.add({e, l.w}, c * z * Scalar(sign, ring_.field));
      } else {
        out.add({e, l.w}, c * LocalScalar(ring_, sign));
      }
    }
  }
  return out;
}

AffineElem AffineElem::operator*(const AffineElem& o) const {
  if (!(param_ == o.param_) || d_ != o.d_ || !(ring_ == o.ring_)) throw Error(Errc::ConfigError, "affine elements of different algebras");
  AffineElem out(param_, d_, ring_);
  for (const auto& [l, c] : terms_) {
    AffineElem v = o;
    auto word = l.w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = v.left_T(*it);
    for (const auto& [l2, c2] : v.terms_) {
      std::vector<int> a = l2.exps;
      for (int r = 0; r < d_; ++r) a[r] += l.exps[r];
      out.add({a, l2.w}, c * c2);
    }
  }
  return out;
}

HeckeElem cyclotomic_reduce(const AffineElem& a, const HeckePtr& H) {
  if (!(a.param() == H->param()) || a.d() != H->d() || !(a.ring() == H->ring()))
    throw Error(Errc::ConfigError, "affine element does not match the cyclotomic algebra");
  HeckeElem out = H->zero();
  std::vector<HeckeElem> inverses;
  for (const auto& [l, c] : a.terms()) {
    ZVec v = H->one().coeffs();
    auto word = l.w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = H->apply_T(*it, v);
    HeckeElem e(H, v);
    for (int r = 1; r <= a.d(); ++r) {
      int p = l.exps[r - 1];
      for (int k = 0; k < p; ++k) e = HeckeElem(H, H->apply_x(r, e.coeffs()));
      if (p < 0) {
        if (inverses.empty())
          for (int s = 1; s <= a.d(); ++s) inverses.push_back(H->x_inv(s));
        for (int k = 0; k < -p; ++k) e = inverses[r - 1] * e;
      }
    }
    out += e * c;
  }
  return out;
}

}  // namespace heis
