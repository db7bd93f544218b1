#include "heis/weights.hpp"

#include <algorithm>

namespace heis {

Quiver::Quiver(const QuantumParam& param, const std::vector<Scalar>& seeds, bool allow_cyclic) : param_(param) {
  period_ = param.quantum_characteristic();
  if (param.is_quantum() && period_ != 0 && !allow_cyclic)
    throw Error(Errc::ConfigError, "q = " + param.q->str() + " is a root of unity; cyclic mode not enabled");
  std::vector<Scalar> sorted = seeds;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& s : sorted) {
    if (param.is_quantum() && s.is_zero()) throw Error(Errc::InvalidLevelData, "0 cannot be a vertex in the quantum case");
    if (!locate(s)) bases_.push_back(s);
  }
}

std::optional<long> Quiver::orbit_offset(const Scalar& base, const Scalar& v) const {
  if (!param_.is_quantum()) {
    Scalar d = v - base;
    if (d.field().is_rational()) {
      if (d.value().get_den() != 1 || !d.value().get_num().fits_slong_p()) return std::nullopt;
      return d.value().get_num().get_si();
    }
    return d.value().get_num().get_si();
  }
  if (v.is_zero()) return std::nullopt;
  Scalar ratio = v / base;
  Scalar q2 = *param_.q * *param_.q;
  if (period_ != 0) {
    Scalar x(1, v.field());
    for (long n = 0; n < period_; ++n, x *= q2)
      if (x == ratio) return n;
    return std::nullopt;
  }
  auto height = [](const Scalar& s) {
    mpz_class a = abs(s.value().get_num()), b = s.value().get_den();
    return a > b ? a : b;
  };
  mpz_class h = height(ratio);
  Scalar up(1), down(1);
  Scalar q2inv = q2.inv();
  for (long n = 0;; ++n) {
    if (up == ratio) return n;
    if (down == ratio) return -n;
    if (height(up) > h && height(down) > h) return std::nullopt;
    up *= q2;
    down *= q2inv;
  }
}

std::optional<Vertex> Quiver::locate(const Scalar& v) const {
  for (int o = 0; o < orbit_count(); ++o)
    if (auto off = orbit_offset(bases_[o], v)) return normalize({o, *off});
  return std::nullopt;
}

Vertex Quiver::vertex(const Scalar& v) const {
  auto i = locate(v);
  if (!i) throw Error(Errc::ConfigError, v.str() + " lies outside the registered vertex set");
  return *i;
}

Scalar Quiver::value(const Vertex& i) const {
  const Scalar& b = base(i.orbit);
  if (!param_.is_quantum()) return b + Scalar(i.offset, b.field());
  Scalar q2 = *param_.q * *param_.q;
  return b * q2.pow(i.offset);
}

Vertex Quiver::normalize(Vertex i) const {
  if (period_ != 0) i.offset = ((i.offset % period_) + period_) % period_;
  return i;
}

Weight Weight::fundamental(const Vertex& i, long c) {
  Weight w;
  w.add(i, c);
  return w;
}

long Weight::operator[](const Vertex& i) const {
  auto it = c_.find(i);
  return it == c_.end() ? 0 : it->second;
}

void Weight::add(const Vertex& i, long c) {
  long v = (c_[i] += c);
  if (v == 0) c_.erase(i);
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (const auto& [i, c] : o.c_) r.add(i, c);
  return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + o * -1; }

Weight Weight::operator*(long s) const {
  Weight r;
  if (s == 0) return r;
  for (const auto& [i, c] : c_) r.c_[i] = c * s;
  return r;
}

std::vector<std::array<long, 3>> Weight::triples() const {
  std::vector<std::array<long, 3>> out;
  for (const auto& [i, c] : c_) out.push_back({i.orbit, i.offset, c});
  return out;
}

std::string Weight::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : c_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*L" + i.str();
  }
  return out;
}

long pairing(const Vertex& i, const Weight& lambda) { return lambda[i]; }

Weight alpha(const Vertex& i, const Quiver& q) {
  Weight w;
  w.add(q.normalize(i), 2);
  w.add(q.succ(i), -1);
  w.add(q.pred(i), -1);
  return w;
}

long central_charge(const Weight& lambda) {
  long k = 0;
  for (const auto& [i, c] : lambda.support()) k += c;
  return k;
}

Weight word_weight(const std::vector<Letter>& word, const Quiver& q) {
  Weight w;
  for (const auto& l : word) w += alpha(l.i, q) * (l.is_e ? 1 : -1);
  return w;
}

namespace {

std::map<int, std::map<long, long>> by_orbit(const Weight& lambda) {
  std::map<int, std::map<long, long>> out;
  for (const auto& [i, c] : lambda.support()) out[i.orbit][i.offset] = c;
  return out;
}

void require_acyclic(const Quiver& q) {
  if (q.is_cyclic())
    throw Error(Errc::SignAmbiguity, "sign functions are only defined on A_infinity components in this build");
}

}  // namespace

Weight coset_representative(const Weight& lambda, const Quiver& q) {
  require_acyclic(q);
  Weight rep;
  for (const auto& [o, coeffs] : by_orbit(lambda)) {
    // In one A_infinity orbit, X / (root lattice) is Z^2 via (sum c_n, sum n c_n).
    long k = 0, s = 0;
    for (const auto& [n, c] : coeffs) k += c, s += n * c;
    rep.add({o, 0}, k - s);
    rep.add({o, 1}, s);
  }
  return rep;
}

std::map<Vertex, long> root_coordinates(const Weight& lambda, const Quiver& q) {
  require_acyclic(q);
  Weight diff = lambda - coset_representative(lambda, q);
  std::map<Vertex, long> out;
  for (const auto& [o, coeffs] : by_orbit(diff)) {
    // diff = (t-1)^2 Q(t) as Laurent polynomials; alpha_j <-> -t^{j-1}(t-1)^2.
    long lo = coeffs.begin()->first, hi = coeffs.rbegin()->first;
    std::vector<long> D(hi - lo + 1, 0);
    for (const auto& [n, c] : coeffs) D[n - lo] = c;
    for (int pass = 0; pass < 2; ++pass) {
      if (D.size() < 2) {
        if (!D.empty() && D[0] != 0) throw Error(Errc::ConfigError, "weight difference not in the root lattice");
        D.clear();
        break;
      }
      // Synthetic division by (t - 1), highest degree first.
      std::vector<long> Q(D.size() - 1, 0);
      long carry = 0;
      for (std::size_t j = D.size() - 1; j >= 1; --j) {
        carry += D[j];
        Q[j - 1] = carry;
      }
      if (carry + D[0] != 0) throw Error(Errc::ConfigError, "weight difference not in the root lattice");
      D.swap(Q);
    }
    for (std::size_t j = 0; j < D.size(); ++j)
      if (D[j] != 0) out[{o, static_cast<long>(j) + lo + 1}] = -D[j];
  }
  return out;
}

int sigma(const Vertex& i, const Weight& lambda, const Quiver& q) {
  auto c = root_coordinates(lambda, q);
  auto it = c.find(q.pred(i));
  long n = it == c.end() ? 0 : it->second;
  return n % 2 == 0 ? 1 : -1;
}

int SignTable::operator()(const Vertex& i, const Weight& lambda) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({i, lambda});
    if (it != memo_.end()) return it->second;
  }
  int s = sigma(i, lambda, q_);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::make_pair(i, lambda), s);
  return s;
}

}  // namespace heis
