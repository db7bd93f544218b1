#pragma once

#include <cstdint>
#include <vector>

#include "heis/localpoly.hpp"

namespace heis {

// Truncated series sum_j coeffs[j] u^{lead_exp - j}, known for j < precision().
class LaurentSeries {
 public:
  LaurentSeries(const LocalRing& r, int lead_exp, std::vector<LocalScalar> coeffs);

  static LaurentSeries one(const LocalRing& r, int precision);
  static LaurentSeries monomial(const LocalScalar& c, int exp, int precision);
  // A polynomial in u, read as a series with lead exponent deg p.
  static LaurentSeries from_poly(const Poly& p, int precision);

  const LocalRing& ring() const { return ring_; }
  int lead_exp() const { return lead_; }
  int precision() const { return static_cast<int>(c_.size()); }
  const std::vector<LocalScalar>& coeffs() const { return c_; }
  // Coefficient of u^e; zero above lead_exp.  e must be within precision.
  LocalScalar coeff_of(int e) const;
  // Lowest exponent whose coefficient is known.
  int known_floor() const { return lead_ - precision() + 1; }

  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LocalScalar& s) const;
  LaurentSeries invert() const;
  LaurentSeries truncated(int precision) const;

  // Equal on every exponent known to both.
  bool agrees_with(const LaurentSeries& o) const;
  bool is_one() const;

 private:
  LocalRing ring_;
  int lead_;
  std::vector<LocalScalar> c_;
};

inline LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }
inline LaurentSeries invert(const LaurentSeries& a) { return a.invert(); }

// g_r = det(-f_{s-t+1})_{s,t=1..r}, with f_0 = 1 and f_j = 0 for j < 0.
LocalScalar det_inversion_coeff(const std::vector<LocalScalar>& f, int r);

// n/m expanded in descending powers of u.
LaurentSeries rational_to_series(const Poly& n, const Poly& m, int precision);

// e(u) h(-u) = 1 with e_r, h_r evaluated at the given points.
bool symfun_check(const std::vector<Scalar>& points);
bool symfun_check(int n_vars, std::uint64_t seed = 0);

}  // namespace heis
