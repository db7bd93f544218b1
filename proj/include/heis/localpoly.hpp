#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heis/scalars.hpp"

namespace heis {

// Polynomial in u over Z = k[t]/(t^N), coefficients lowest degree first.
class Poly {
 public:
  explicit Poly(const LocalRing& r = {}) : ring_(r) {}
  Poly(const LocalRing& r, std::vector<LocalScalar> coeffs);
  Poly(const LocalRing& r, const std::vector<long>& coeffs);

  static Poly constant(const LocalScalar& c);
  static Poly monomial(const LocalRing& r, int deg, const LocalScalar& c);
  static Poly u(const LocalRing& r) { return monomial(r, 1, LocalScalar(r, 1)); }
  // (u - a)
  static Poly linear(const LocalScalar& a);
  static Poly parse(const std::vector<std::string>& coeffs, const LocalRing& r);

  const LocalRing& ring() const { return ring_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  LocalScalar coeff(int j) const;
  const LocalScalar& lead() const { return c_.back(); }
  const std::vector<LocalScalar>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const LocalScalar& s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return ring_ == o.ring_ && c_ == o.c_; }

  LocalScalar eval(const LocalScalar& x) const;
  // p(u + a)
  Poly taylor_shift(const LocalScalar& a) const;
  // p(c u)
  Poly scale_variable(const LocalScalar& c) const;
  Poly pow(int e) const;

  // Reduction mod J, as a polynomial over k = Z/J.
  Poly residue() const;
  // Coefficient of t^s, as a polynomial over k.
  Poly layer(int s) const;
  // Same coefficients viewed in k[t]/(t^M).
  Poly resized(int M) const;
  // t^s * p, where p is a polynomial over k, embedded in k[t]/(t^N).
  static Poly from_layer(const Poly& p, int s, const LocalRing& target);
  // Every non-leading coefficient lies in J.
  bool nonleading_in_J() const;

  std::vector<std::string> to_strings() const;
  std::string str() const;

 private:
  void trim();
  LocalRing ring_;
  std::vector<LocalScalar> c_;
};

// Polynomial with leading coefficient exactly 1.
class MonicPoly {
 public:
  MonicPoly() : p_(Poly::constant(LocalScalar(LocalRing{}, 1))) {}
  explicit MonicPoly(Poly p);
  static MonicPoly from_roots(const std::vector<LocalScalar>& roots, const LocalRing& r);

  const Poly& poly() const { return p_; }
  operator const Poly&() const { return p_; }
  int degree() const { return p_.degree(); }
  const LocalRing& ring() const { return p_.ring(); }
  LocalScalar coeff(int j) const { return p_.coeff(j); }
  MonicPoly residue() const { return MonicPoly(p_.residue()); }
  bool operator==(const MonicPoly& o) const { return p_ == o.p_; }
  std::string str() const { return p_.str(); }

 private:
  Poly p_;
};

std::pair<Poly, Poly> divmod(const Poly& f, const MonicPoly& p);
// Division by a polynomial whose leading coefficient is a unit.
std::pair<Poly, Poly> divmod_unit(const Poly& f, const Poly& p);

// Polynomials over k (N = 1).
Poly poly_gcd(const Poly& g, const Poly& h);
std::pair<Poly, Poly> bezout(const Poly& g, const Poly& h);

// Roots over k with multiplicity, in canonical order.  Throws NotSplit when the
// polynomial is not a product of linear factors over k.
std::vector<std::pair<Scalar, int>> split_roots(const Poly& f);

std::pair<MonicPoly, MonicPoly> coprime_factor_lift(const MonicPoly& f, const MonicPoly& gbar,
                                                    const MonicPoly& hbar);
// The same lift obtained by iterating the square-zero step through t^{N-1} ⊂ ... ⊂ t.
std::pair<MonicPoly, MonicPoly> filtration_lift(const MonicPoly& f, const MonicPoly& gbar,
                                                const MonicPoly& hbar);

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return a < b; }
};
using ClusterMap = std::map<Scalar, MonicPoly, ScalarLess>;

// f = prod_i f_i(u - i) with f_i in u^{p_i} + J[u].
ClusterMap cluster_factor(const MonicPoly& f);
// prod_i f_i(u - i)
MonicPoly cluster_product(const ClusterMap& factors, const LocalRing& r);

}  // namespace heis
