#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heis/error.hpp"

namespace heis {

// The base field k: the rationals (p == 0) or F_p.
struct BaseField {
  std::uint32_t p = 0;

  static BaseField rationals() { return {}; }
  static BaseField prime(std::uint32_t p);

  bool is_rational() const { return p == 0; }
  bool operator==(const BaseField&) const = default;
  std::string str() const;
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v, BaseField f = {});
  Scalar(const mpq_class& v, BaseField f = {});

  static Scalar parse(const std::string& s, BaseField f = {});

  BaseField field() const { return {p_}; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  Scalar inv() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
  // Canonical total order: numeric for Q, by representative in [0,p) for F_p.
  bool operator<(const Scalar& o) const;

  std::string str() const;

 private:
  void normalize();
  void check(const Scalar& o) const;

  mpq_class v_;
  std::uint32_t p_ = 0;
};

// Overrides for the distinguished square root: pairs (c, root of c).
struct SqrtConvention {
  std::vector<std::pair<Scalar, Scalar>> overrides;
};

// Distinguished square root of c in k, or nullopt.  Over Q: the positive root.
// Over F_p: the smaller representative, chosen so that sqrt(1/c) = 1/sqrt(c).
std::optional<Scalar> distinguished_sqrt(const Scalar& c, const SqrtConvention& conv = {});

// z, and q in the quantum case.
struct QuantumParam {
  Scalar z;
  std::optional<Scalar> q;

  static QuantumParam degenerate(BaseField f = {});
  static QuantumParam quantum(const Scalar& q);

  bool is_quantum() const { return q.has_value(); }
  // Smallest e > 0 with q^{2e} = 1 (quantum) or the characteristic (degenerate); 0 if none.
  long quantum_characteristic() const;
  bool operator==(const QuantumParam&) const = default;
};

// Truncation data of Z = k[t]/(t^N).
struct LocalRing {
  BaseField field;
  int N = 1;

  bool operator==(const LocalRing&) const = default;
  LocalRing residue_ring() const { return {field, 1}; }
};

class LocalScalar {
 public:
  LocalScalar() : c_(1) {}
  explicit LocalScalar(const LocalRing& r) : c_(r.N, Scalar(0, r.field)) {}
  LocalScalar(const LocalRing& r, const Scalar& c);
  LocalScalar(const LocalRing& r, long c) : LocalScalar(r, Scalar(c, r.field)) {}
  explicit LocalScalar(std::vector<Scalar> coeffs);

  static LocalScalar t(const LocalRing& r);
  // Accepts forms such as "3", "1/2 - t", "2 + 3*t + t^2".
  static LocalScalar parse(const std::string& s, const LocalRing& r);

  int order() const { return static_cast<int>(c_.size()); }
  BaseField field() const { return c_[0].field(); }
  LocalRing ring() const { return {field(), order()}; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& operator[](int j) const { return c_[j]; }

  const Scalar& residue() const { return c_[0]; }
  bool is_unit() const { return !c_[0].is_zero(); }
  bool is_zero() const;
  bool is_one() const;
  bool in_residue_field() const;

  LocalScalar operator-() const;
  LocalScalar operator+(const LocalScalar& o) const;
  LocalScalar operator-(const LocalScalar& o) const;
  LocalScalar operator*(const LocalScalar& o) const;
  LocalScalar operator*(const Scalar& s) const;
  LocalScalar& operator+=(const LocalScalar& o);
  LocalScalar& operator-=(const LocalScalar& o);
  LocalScalar& operator*=(const LocalScalar& o);
  // this += a * b without temporaries.
  void add_mul(const LocalScalar& a, const LocalScalar& b);

  LocalScalar inv_unit() const;
  LocalScalar sqrt_unit(const SqrtConvention& conv = {}) const;
  LocalScalar pow(long e) const;
  int nilpotency_degree() const;

  // Same coefficients in k[t]/(t^M): truncates or pads with zeros.
  LocalScalar resized(int M) const;
  // Coefficient of t^j in t^shift * this.
  LocalScalar shifted(int shift) const;

  bool operator==(const LocalScalar& o) const { return c_ == o.c_; }
  std::string str() const;

 private:
  void check(const LocalScalar& o) const;
  std::vector<Scalar> c_;
};

inline Scalar residue(const LocalScalar& a) { return a.residue(); }
inline LocalScalar inv_unit(const LocalScalar& a) { return a.inv_unit(); }
inline LocalScalar sqrt_unit(const LocalScalar& a, const SqrtConvention& c = {}) { return a.sqrt_unit(c); }
inline int nilpotency_degree(const LocalScalar& a) { return a.nilpotency_degree(); }

}  // namespace heis
