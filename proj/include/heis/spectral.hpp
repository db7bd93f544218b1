#pragma once

#include <map>
#include <vector>

#include "heis/hecke.hpp"

namespace heis {

// Polynomial over Z in the commuting dots x_1..x_d.
class DotPoly {
 public:
  DotPoly(const LocalRing& r, int nvars) : ring_(r), n_(nvars) {}
  static DotPoly constant(const LocalRing& r, int nvars, const LocalScalar& c);
  // x_i, 1-based.
  static DotPoly var(const LocalRing& r, int nvars, int i);

  const LocalRing& ring() const { return ring_; }
  int nvars() const { return n_; }
  const std::map<std::vector<int>, LocalScalar>& terms() const { return terms_; }

  DotPoly operator+(const DotPoly& o) const;
  DotPoly operator-(const DotPoly& o) const;
  DotPoly operator*(const DotPoly& o) const;
  DotPoly operator*(const LocalScalar& s) const;
  DotPoly operator+(const LocalScalar& s) const;
  DotPoly operator-(const LocalScalar& s) const;
  bool is_zero() const { return terms_.empty(); }

  LocalScalar eval(const std::vector<LocalScalar>& point) const;
  // p(x) v for a coordinate vector v of H.
  ZVec apply(const HeckeAlgebra& H, const ZVec& v) const;

 private:
  void add(const std::vector<int>& a, const LocalScalar& c);
  LocalRing ring_;
  int n_;
  std::map<std::vector<int>, LocalScalar> terms_;
};

struct BlockIdempotent {
  std::vector<Scalar> tuple;
  HeckeElem element;
  // (x_r - i_r)^{nilpotency[r-1]} e = 0.
  std::vector<int> nilpotency;
  // e(i) = prod_r factors[r-1](x_r)
  std::vector<Poly> factors;

  ZVec apply(const HeckeAlgebra& H, const ZVec& v) const;
};

// Roots of the minimal polynomial of x_r, in canonical order.
std::vector<Scalar> spectrum(int r, const HeckePtr& H);
// Nonzero simultaneous generalized eigenspace idempotents, tuples in lexicographic order.
std::vector<BlockIdempotent> block_idempotents(const HeckePtr& H);
// dim_k e H
int block_dimension(const BlockIdempotent& e, const HeckePtr& H);

// Two-sided inverse by a linear solve on the regular representation.
HeckeElem nilpotent_inverse(const HeckeElem& a);
// Inverse of c + n with c a unit scalar and n nilpotent, by the finite Neumann sum.
HeckeElem neumann_inverse(const HeckeElem& a);

// num(x) den(x)^{-1} e, with den expanded as a power series about the block's
// eigenvalues.  Throws SingularSeries if den vanishes at the eigenvalue tuple.
HeckeElem eval_power_series(const DotPoly& num, const DotPoly& den, const BlockIdempotent& e, const HeckePtr& H);
// The same, applied to a vector v = e v.
ZVec apply_power_series(const DotPoly& num, const DotPoly& den, const BlockIdempotent& e, const HeckeAlgebra& H,
                        const ZVec& v);

}  // namespace heis
