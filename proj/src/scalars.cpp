#include "heis/scalars.hpp"

#include <cctype>

namespace heis {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ConfigError: return "ConfigError";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NoSquareRoot: return "NoSquareRoot";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::FactorizationMismatch: return "FactorizationMismatch";
    case Errc::NotSplit: return "NotSplit";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::SingularSeries: return "SingularSeries";
    case Errc::SignAmbiguity: return "SignAmbiguity";
    case Errc::InvalidLevelData: return "InvalidLevelData";
    case Errc::ZeroBlock: return "ZeroBlock";
  }
  return "Error";
}

BaseField BaseField::prime(std::uint32_t p) {
  mpz_class P(p);
  if (p < 2 || mpz_probab_prime_p(P.get_mpz_t(), 30) == 0)
    throw Error(Errc::ConfigError, "field characteristic " + std::to_string(p) + " is not prime");
  return {p};
}

std::string BaseField::str() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }

Scalar::Scalar(long v, BaseField f) : v_(v), p_(f.p) { normalize(); }

Scalar::Scalar(const mpq_class& v, BaseField f) : v_(v), p_(f.p) { normalize(); }

void Scalar::normalize() {
  if (p_ == 0) {
    v_.canonicalize();
    return;
  }
  mpz_class P(p_);
  mpz_class num = v_.get_num() % P;
  mpz_class den = v_.get_den() % P;
  if (den == 0) throw Error(Errc::NotAUnit, "denominator divisible by " + std::to_string(p_));
  mpz_class deninv;
  mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
  mpz_class r = (num * deninv) % P;
  if (r < 0) r += P;
  v_ = mpq_class(r);
}

void Scalar::check(const Scalar& o) const {
  if (p_ != o.p_) throw Error(Errc::ConfigError, "scalars from different fields");
}

Scalar Scalar::parse(const std::string& s, BaseField f) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t.find_first_not_of("+-0123456789/") != std::string::npos)
    throw Error(Errc::ConfigError, "cannot parse scalar '" + s + "'");
  if (t[0] == '+') t.erase(0, 1);
  mpq_class v;
  if (v.set_str(t, 10) != 0) throw Error(Errc::ConfigError, "cannot parse scalar '" + s + "'");
  if (v.get_den() == 0) throw Error(Errc::ConfigError, "zero denominator in '" + s + "'");
  v.canonicalize();
  return Scalar(v, f);
}

Scalar Scalar::operator-() const { return Scalar(-v_, field()); }

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  v_ += o.v_;
  if (p_ && v_ >= p_) v_ -= p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  v_ -= o.v_;
  if (p_ && v_ < 0) v_ += p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  v_ *= o.v_;
  if (p_) {
    mpz_class r = v_.get_num() % p_;
    v_ = mpq_class(r);
  }
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Errc::NotAUnit, "division by zero in k");
  if (p_ == 0) return Scalar(1 / v_);
  mpz_class r, P(p_), a = v_.get_num();
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), P.get_mpz_t());
  return Scalar(mpq_class(r), field());
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inv() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  Scalar r(1, field());
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

bool Scalar::operator<(const Scalar& o) const {
  check(o);
  return v_ < o.v_;
}

std::string Scalar::str() const { return v_.get_str(); }

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1, x = b % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Tonelli-Shanks; c is a nonzero quadratic residue mod odd p.
std::uint64_t tonelli(std::uint64_t c, std::uint64_t p) {
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) q /= 2, ++s;
  std::uint64_t zz = 2;
  while (powmod(zz, (p - 1) / 2, p) != p - 1) ++zz;
  std::uint64_t m = s, cc = powmod(zz, q, p), t = powmod(c, q, p), r = powmod(c, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) tt = static_cast<std::uint64_t>((unsigned __int128)tt * tt % p), ++i;
    std::uint64_t b = cc;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = static_cast<std::uint64_t>((unsigned __int128)b * b % p);
    m = i;
    cc = static_cast<std::uint64_t>((unsigned __int128)b * b % p);
    t = static_cast<std::uint64_t>((unsigned __int128)t * cc % p);
    r = static_cast<std::uint64_t>((unsigned __int128)r * b % p);
  }
  return r;
}

std::optional<std::uint64_t> smaller_root_mod_p(std::uint64_t c, std::uint64_t p) {
  if (c == 0) return 0;
  if (p == 2) return c;
  if (powmod(c, (p - 1) / 2, p) != 1) return std::nullopt;
  std::uint64_t r = tonelli(c, p);
  return std::min(r, p - r);
}

}  // namespace

std::optional<Scalar> distinguished_sqrt(const Scalar& c, const SqrtConvention& conv) {
  for (const auto& [key, root] : conv.overrides) {
    if (!(key == c)) continue;
    if (!(root * root == c))
      throw Error(Errc::ConfigError, "square root override " + root.str() + " does not square to " + c.str());
    return root;
  }
  BaseField f = c.field();
  if (f.is_rational()) {
    const mpq_class& v = c.value();
    if (v < 0) return std::nullopt;
    mpz_class num = v.get_num(), den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    return Scalar(mpq_class(a, b));
  }
  std::uint64_t p = f.p;
  std::uint64_t cv = c.value().get_num().get_ui();
  if (cv == 0 || p == 2) return c;
  // Pair c with 1/c so that the choice for 1/c is the inverse of the choice for c.
  std::uint64_t ci = c.inv().value().get_num().get_ui();
  if (cv <= ci) {
    auto r = smaller_root_mod_p(cv, p);
    if (!r) return std::nullopt;
    return Scalar(static_cast<long>(*r), f);
  }
  auto r = smaller_root_mod_p(ci, p);
  if (!r) return std::nullopt;
  return Scalar(static_cast<long>(*r), f).inv();
}

QuantumParam QuantumParam::degenerate(BaseField f) { return {Scalar(0, f), std::nullopt}; }

QuantumParam QuantumParam::quantum(const Scalar& q) {
  if (q.is_zero()) throw Error(Errc::ConfigError, "q must be nonzero");
  Scalar z = q - q.inv();
  if (z.is_zero()) throw Error(Errc::ConfigError, "q = " + q.str() + " gives z = 0");
  return {z, q};
}

long QuantumParam::quantum_characteristic() const {
  BaseField f = z.field();
  if (!q) return f.p;
  if (f.is_rational()) return 0;
  Scalar q2 = *q * *q, x = q2;
  long e = 1;
  while (!x.is_one()) x *= q2, ++e;
  return e;
}

LocalScalar::LocalScalar(const LocalRing& r, const Scalar& c) : c_(r.N, Scalar(0, r.field)) {
  if (!(c.field() == r.field)) throw Error(Errc::ConfigError, "scalar field does not match ring");
  c_[0] = c;
}

LocalScalar::LocalScalar(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw Error(Errc::ConfigError, "empty local scalar");
  for (const auto& s : c_)
    if (!(s.field() == c_[0].field())) throw Error(Errc::ConfigError, "mixed fields in local scalar");
}

LocalScalar LocalScalar::t(const LocalRing& r) {
  LocalScalar a(r);
  if (r.N > 1) a.c_[1] = Scalar(1, r.field);
  return a;
}

LocalScalar LocalScalar::parse(const std::string& s, const LocalRing& r) {
  std::string src;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) src += c;
  if (src.empty()) throw Error(Errc::ConfigError, "empty local scalar string");
  LocalScalar out(r);
  std::size_t pos = 0;
  while (pos < src.size()) {
    std::size_t end = pos + 1;
    while (end < src.size() && src[end] != '+' && src[end] != '-') {
      if (src[end] == '^' && end + 1 < src.size() && (src[end + 1] == '-' || src[end + 1] == '+')) ++end;
      ++end;
    }
    std::string term = src.substr(pos, end - pos);
    pos = end;
    bool neg = false;
    if (term[0] == '+' || term[0] == '-') {
      neg = term[0] == '-';
      term.erase(0, 1);
    }
    std::size_t tp = term.find('t');
    Scalar coef(1, r.field);
    int power = 0;
    if (tp == std::string::npos) {
      coef = Scalar::parse(term, r.field);
    } else {
      std::string c = term.substr(0, tp);
      if (!c.empty() && c.back() == '*') c.pop_back();
      if (!c.empty()) coef = Scalar::parse(c, r.field);
      std::string rest = term.substr(tp + 1);
      power = 1;
      if (!rest.empty()) {
        if (rest[0] != '^' || rest.size() < 2 || rest.find_first_not_of("0123456789", 1) != std::string::npos)
          throw Error(Errc::ConfigError, "cannot parse local scalar '" + s + "'");
        power = std::stoi(rest.substr(1));
      }
    }
    if (neg) coef = -coef;
    if (power < r.N) out.c_[power] += coef;
  }
  return out;
}

void LocalScalar::check(const LocalScalar& o) const {
  if (c_.size() != o.c_.size()) throw Error(Errc::ConfigError, "local scalars with different truncation order");
}

bool LocalScalar::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

bool LocalScalar::is_one() const { return c_[0].is_one() && in_residue_field(); }

bool LocalScalar::in_residue_field() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return false;
  return true;
}

LocalScalar LocalScalar::operator-() const {
  LocalScalar r = *this;
  for (auto& s : r.c_) s = -s;
  return r;
}

LocalScalar LocalScalar::operator+(const LocalScalar& o) const {
  LocalScalar r = *this;
  r += o;
  return r;
}

LocalScalar LocalScalar::operator-(const LocalScalar& o) const {
  LocalScalar r = *this;
  r -= o;
  return r;
}

LocalScalar LocalScalar::operator*(const LocalScalar& o) const {
  check(o);
  LocalScalar r(ring());
  r.add_mul(*this, o);
  return r;
}

LocalScalar LocalScalar::operator*(const Scalar& s) const {
  LocalScalar r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

LocalScalar& LocalScalar::operator+=(const LocalScalar& o) {
  check(o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

LocalScalar& LocalScalar::operator-=(const LocalScalar& o) {
  check(o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

LocalScalar& LocalScalar::operator*=(const LocalScalar& o) {
  *this = *this * o;
  return *this;
}

void LocalScalar::add_mul(const LocalScalar& a, const LocalScalar& b) {
  check(a);
  check(b);
  const std::size_t n = c_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
}

LocalScalar LocalScalar::inv_unit() const {
  if (!is_unit()) throw Error(Errc::NotAUnit, str() + " has zero residue");
  const int n = order();
  Scalar a0inv = c_[0].inv();
  LocalScalar b(ring());
  b.c_[0] = a0inv;
  for (int j = 1; j < n; ++j) {
    Scalar acc(0, field());
    for (int i = 1; i <= j; ++i) acc += c_[i] * b.c_[j - i];
    b.c_[j] = -(acc * a0inv);
  }
  return b;
}

LocalScalar LocalScalar::sqrt_unit(const SqrtConvention& conv) const {
  if (!is_unit()) throw Error(Errc::NotAUnit, "square root of non-unit " + str());
  auto r0 = distinguished_sqrt(c_[0], conv);
  if (!r0) throw Error(Errc::NoSquareRoot, c_[0].str() + " has no square root in " + field().str());
  const int n = order();
  LocalScalar b(ring());
  if (field().p == 2) {
    // Squaring is additive in characteristic 2 and Frobenius fixes F_2.
    for (int j = 1; j < n; j += 2)
      if (!c_[j].is_zero()) throw Error(Errc::NoSquareRoot, str() + " is not a square");
    for (int j = 0; 2 * j < n; ++j) b.c_[j] = c_[2 * j];
    return b;
  }
  b.c_[0] = *r0;
  Scalar twice_inv = (b.c_[0] + b.c_[0]).inv();
  for (int j = 1; j < n; ++j) {
    Scalar acc = c_[j];
    for (int i = 1; i < j; ++i) acc -= b.c_[i] * b.c_[j - i];
    b.c_[j] = acc * twice_inv;
  }
  return b;
}

LocalScalar LocalScalar::pow(long e) const {
  LocalScalar base = e < 0 ? inv_unit() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  LocalScalar r(ring(), 1);
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

int LocalScalar::nilpotency_degree() const {
  if (is_unit()) throw Error(Errc::NotNilpotent, str() + " is a unit");
  int v = 0;
  while (v < order() && c_[v].is_zero()) ++v;
  if (v == order()) return 1;
  return (order() + v - 1) / v;
}

LocalScalar LocalScalar::resized(int M) const {
  std::vector<Scalar> c(M, Scalar(0, field()));
  for (int j = 0; j < M && j < order(); ++j) c[j] = c_[j];
  return LocalScalar(std::move(c));
}

LocalScalar LocalScalar::shifted(int shift) const {
  LocalScalar r(ring());
  for (int j = 0; j + shift < order(); ++j)
    if (j + shift >= 0) r.c_[j + shift] = c_[j];
  return r;
}

std::string LocalScalar::str() const {
  std::string out;
  for (int j = 0; j < order(); ++j) {
    const Scalar& c = c_[j];
    if (c.is_zero()) continue;
    bool neg = field().is_rational() && c.value() < 0;
    std::string mag = neg ? (-c).str() : c.str();
    if (out.empty())
      out = neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (j == 0)
      out += mag;
    else {
      if (mag != "1") out += mag + "*";
      out += "t";
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace heis
