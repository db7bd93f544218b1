#pragma once

#include <map>
#include <vector>

#include "heis/localpoly.hpp"
#include "heis/report.hpp"
#include "heis/spectral.hpp"

namespace heis {

using Tuple = std::vector<Scalar>;

// Images of the KLR generators y_r 1_i and psi_r 1_i inside H_d^m(Z).
//
// Tuple entries follow the strands: i_r is the eigenvalue of x_r, so i_1 sits on
// the rightmost strand.  Dots are x_r - i_r (degenerate) or x_r / i_r - 1 (quantum).
class KLRGenerators {
 public:
  explicit KLRGenerators(const HeckePtr& H);

  const HeckePtr& algebra() const { return H_; }
  const std::vector<BlockIdempotent>& blocks() const { return blocks_; }
  // Index of the block with this tuple, or -1 when e(i) = 0.
  int find(const Tuple& i) const;
  const BlockIdempotent& block(const Tuple& i) const;

  // y_r(i) and psi_r(i); ZeroBlock when e(i) = 0.
  const HeckeElem& dot(int r, const Tuple& i) const;
  const HeckeElem& crossing(int r, const Tuple& i) const;
  // Sums over all blocks.
  const HeckeElem& dot(int r) const { return y_all_.at(r - 1); }
  const HeckeElem& crossing(int r) const { return psi_all_.at(r - 1); }
  const HeckeElem& idempotent(const Tuple& i) const { return block(i).element; }

  // i^+ : i + 1 or q^2 i.
  Scalar succ(const Scalar& i) const;
  Scalar pred(const Scalar& i) const;
  // y_r on the block with eigenvalue a at position r, as a polynomial in the dots.
  DotPoly dot_poly(int r, const Scalar& a) const;
  // e(i) v, zero when the block vanishes.
  ZVec project(const Tuple& i, const ZVec& v) const;
  // The crossing formula for psi_r(i) with `crossing` standing in for s_r / tau_r.
  HeckeElem crossing_from(int r, const Tuple& i, const HeckeElem& crossing) const;

 private:
  HeckePtr H_;
  std::vector<BlockIdempotent> blocks_;
  std::map<Tuple, int> index_;
  std::vector<std::vector<HeckeElem>> y_, psi_;  // [block][r-1]
  std::vector<HeckeElem> y_all_, psi_all_;
};

HeckeElem km_dot(const KLRGenerators& g, int r, const Tuple& i);
HeckeElem km_crossing(const KLRGenerators& g, int r, const Tuple& i);

// Dot-crossing, quadratic and braid relations on every block and index.
Report verify_klr_relations(const KLRGenerators& g);
// mu_{i_1}(y_1) e(i) = 0 on every block; mu maps vertex values to polynomials.
Report verify_cyclotomic_klr(const KLRGenerators& g, const std::map<Scalar, MonicPoly, ScalarLess>& mu);

// Hecke generators rebuilt from the KLR images (x_r or s_r / tau_r).
enum class HeisGen { dot, crossing };
HeckeElem heis_from_km(const KLRGenerators& g, HeisGen kind, int r);
// x_r, s_r / tau_r from the KLR images and back again.
Report roundtrip_check(const KLRGenerators& g);
// k-rank of the subalgebra generated by the e(i), y_r, psi_r, compared with dim_k H.
Report rank_check(const KLRGenerators& g);

}  // namespace heis
