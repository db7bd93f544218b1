#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "heis/bkiso.hpp"
#include "heis/series.hpp"
#include "heis/weights.hpp"

namespace heis {

struct GCQData {
  QuantumParam param;
  MonicPoly m, n;
  Quiver quiver;
  // Keyed by vertex value; m(u) = prod mu_i(u - i) or prod i^{deg mu_i} mu_i(u/i - 1).
  ClusterMap mu_i, nu_i;
  Weight mu, nu, kappa;
  int k = 0;
  int ell = 0;
  std::optional<LocalScalar> t;  // quantum only: sqrt(m(0)/n(0))
  SqrtConvention sqrt;

  const LocalRing& ring() const { return m.ring(); }
  Vertex vertex(const Scalar& i) const { return quiver.vertex(i); }
  // The polynomial for vertex value i (1 when i carries no root).
  MonicPoly mu_at(const Scalar& i) const;
  MonicPoly nu_at(const Scalar& i) const;
};

GCQData derive_km_data(const MonicPoly& m, const MonicPoly& n, const QuantumParam& param,
                       const SqrtConvention& conv = {}, bool allow_cyclic = false);
// m and n rebuilt from the per-vertex polynomials.
std::pair<MonicPoly, MonicPoly> reconstruct(const GCQData& g);

struct BubbleSeries {
  LaurentSeries anticlockwise;  // O(u)
  LaurentSeries clockwise;      // O(u)^{-1}
  // O^{(r)} and O~^{(r)} for every r whose coefficient lies within precision.
  std::map<int, LocalScalar> coeffs, coeffs_tilde;
};
BubbleSeries bubble_series(const GCQData& g, int precision);
// The per-vertex products of (nu_i/mu_i) (and the inverse) compared with O(u), O(u)^{-1}.
Report bubble_factorization_check(const GCQData& g, int precision);
// min_poly of x_1 on H_1^m(Z), block structure of H_1, residue exponents and monic transfer.
Report end_object_checks(const GCQData& g);
// t^2 = m(0)/n(0), its residue is the distinguished root, and the weight formula on
// every block of H_d for d <= d_max.
Report quantum_t_check(const GCQData& g, int d_max);
// Every eigenvalue of every x_r on H_d, d <= d_max, lies in the vertex set.
Report spectral_closure_check(const GCQData& g, int d_max);

struct BlockDim {
  Tuple tuple;
  Weight weight;  // kappa + sum_r alpha_{i_r}
  int k_dim = 0;
};
struct DimRow {
  int d = 0;
  int computed = 0;  // k-rank of the words in x_r, T_r, t applied to 1
  long predicted = 0;
  bool relations_hold = false;
  std::vector<BlockDim> blocks;
};
std::vector<DimRow> dim_report(const GCQData& g, int d_max, bool with_blocks = true);

nlohmann::json to_json(const GCQData& g);
nlohmann::json weight_json(const Weight& w);

}  // namespace heis
