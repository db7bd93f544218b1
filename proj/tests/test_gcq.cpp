#include <doctest.h>

#include "heis/gcq.hpp"
#include "oracles/oracles.hpp"

using namespace heis;

namespace {

LocalRing Q(int N) { return {BaseField::rationals(), N}; }
MonicPoly M(const std::vector<std::string>& c, int N = 1) { return MonicPoly(Poly::parse(c, Q(N))); }
const QuantumParam deg = QuantumParam::degenerate();
const QuantumParam qu = QuantumParam::quantum(Scalar(2));

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return c.key() + " " + c.witness;
  return "";
}

}  // namespace

TEST_CASE("derive_km_data") {
  GCQData g = derive_km_data(M({"0", "1"}), M({"3", "1"}), deg);
  CHECK(g.quiver.orbit_count() == 1);
  Vertex v0 = g.vertex(Scalar(0)), v3 = g.vertex(Scalar(-3));
  CHECK(v0.offset - v3.offset == 3);
  CHECK(g.mu == Weight::fundamental(v0));
  CHECK(g.nu == Weight::fundamental(v3));
  CHECK(g.kappa == Weight::fundamental(v3) - Weight::fundamental(v0));
  CHECK(g.k == 0);
  CHECK(g.ell == 1);

  GCQData same = derive_km_data(M({"2", "-3", "1"}), M({"2", "-3", "1"}), deg);
  CHECK(same.mu == same.nu);
  CHECK(same.kappa.support().empty());
  CHECK(same.k == 0);

  GCQData h = derive_km_data(M({"t", "-1", "1"}, 2), M({"1"}, 2), deg);
  CHECK(h.mu_at(Scalar(0)) == M({"-t", "1"}, 2));
  CHECK(h.mu_at(Scalar(1)) == M({"t", "1"}, 2));
  CHECK(h.nu.support().empty());
  CHECK(h.k == -2);
  CHECK(reconstruct(h) == std::make_pair(h.m, h.n));

  CHECK_THROWS_WITH_AS(derive_km_data(M({"0", "-1", "1"}), M({"1"}), qu), doctest::Contains("InvalidLevelData"),
                       Error);
  CHECK_THROWS_WITH_AS(derive_km_data(M({"1", "0", "1"}), M({"1"}), deg), doctest::Contains("NotSplit"), Error);
}

TEST_CASE("quantum cluster data") {
  // m = (u - 1)(u - 4): roots 1 and q^2 in one orbit.
  GCQData g = derive_km_data(M({"4", "-5", "1"}), M({"1"}), qu);
  CHECK(g.quiver.orbit_count() == 1);
  CHECK(g.mu_at(Scalar(1)) == M({"0", "1"}));
  CHECK(g.mu_at(Scalar(4)) == M({"0", "1"}));
  REQUIRE(g.t.has_value());
  CHECK(*g.t == LocalScalar(Q(1), 2));
  CHECK(reconstruct(g) == std::make_pair(g.m, g.n));
}

TEST_CASE("bubble series") {
  GCQData g = derive_km_data(M({"0", "1"}), M({"3", "1"}), deg);
  BubbleSeries b = bubble_series(g, 8);
  CHECK(b.coeffs.at(-1) == LocalScalar(Q(1), 1));
  CHECK(b.coeffs.at(0) == LocalScalar(Q(1), 3));
  for (int r = 1; r <= 5; ++r) CHECK(b.coeffs.at(r).is_zero());
  CHECK((b.anticlockwise * b.clockwise).is_one());

  GCQData same = derive_km_data(M({"2", "-3", "1"}), M({"2", "-3", "1"}), deg);
  CHECK(bubble_series(same, 6).anticlockwise.is_one());

  // Negatively dotted bubbles: determinant formula against the inverse series.
  GCQData w = derive_km_data(M({"t", "-1", "1"}, 2), M({"2", "1"}, 2), deg);
  BubbleSeries bw = bubble_series(w, 10);
  std::vector<LocalScalar> f;
  for (int j = 0; j < 8; ++j) f.push_back(bw.anticlockwise.coeffs()[j]);
  std::vector<oracle::Tq> fo;
  for (auto& c : f) fo.push_back(oracle::to_tq(c));
  auto g_rec = oracle::inverse_recurrence(fo, 7, 2);
  for (int r = 0; r < 8; ++r) {
    CHECK(det_inversion_coeff(f, r) == bw.clockwise.coeffs()[r]);
    CHECK(oracle::to_tq(bw.clockwise.coeffs()[r]) == g_rec[r]);
  }
}

TEST_CASE("bubble factorization") {
  CHECK(bubble_factorization_check(derive_km_data(M({"0", "1"}), M({"3", "1"}), deg), 12).pass());
  CHECK(bubble_factorization_check(derive_km_data(M({"1", "1"}), M({"1", "1"}), deg), 12).pass());
  Report r = bubble_factorization_check(
      derive_km_data(M({"t", "-1", "1"}, 2), M({"6 + t", "-5", "-2", "1"}, 2), deg), 12);
  CHECK_MESSAGE(r.pass(), first_failure(r));
  Report q = bubble_factorization_check(derive_km_data(M({"4 + t", "-5", "1"}, 2), M({"1", "-17/4", "1"}, 2), qu), 12);
  CHECK_MESSAGE(q.pass(), first_failure(q));
}

TEST_CASE("end object checks") {
  Report a = end_object_checks(derive_km_data(M({"5", "1"}), M({"1"}), deg));
  CHECK_MESSAGE(a.pass(), first_failure(a));
  GCQData sq = derive_km_data(M({"0", "0", "1"}), M({"1"}), deg);
  Report b = end_object_checks(sq);
  CHECK_MESSAGE(b.pass(), first_failure(b));
  auto H = HeckeAlgebra::create(deg, 1, sq.m);
  CHECK(H->k_dim() == 2);
  CHECK(min_poly(H->x(1)) == M({"0", "0", "1"}));

  GCQData h = derive_km_data(M({"t", "-1", "1"}, 2), M({"1"}, 2), deg);
  Report c = end_object_checks(h);
  CHECK_MESSAGE(c.pass(), first_failure(c));
  auto H1 = HeckeAlgebra::create(deg, 1, h.m);
  auto blocks = block_idempotents(H1);
  REQUIRE(blocks.size() == 2);
  CHECK(block_dimension(blocks[0], H1) == 2);
  CHECK(block_dimension(blocks[1], H1) == 2);

  Report d = end_object_checks(derive_km_data(M({"4 + t", "-5", "1"}, 2), M({"1", "-17/4", "1"}, 2), qu));
  CHECK_MESSAGE(d.pass(), first_failure(d));
}

TEST_CASE("quantum t") {
  // m = u - 1, n = u - q^{-2}: t = q.
  GCQData g = derive_km_data(M({"-1", "1"}), M({"-1/4", "1"}), qu);
  REQUIRE(g.t.has_value());
  CHECK(*g.t == LocalScalar(Q(1), 2));
  Report r = quantum_t_check(g, 2);
  CHECK_MESSAGE(r.pass(), first_failure(r));
  CHECK(!r.checks.empty());

  GCQData same = derive_km_data(M({"4", "-5", "1"}), M({"4", "-5", "1"}), qu);
  CHECK(*same.t == LocalScalar(Q(1), 1));
  CHECK(quantum_t_check(same, 0).pass());

  Report d = quantum_t_check(derive_km_data(M({"4 + t", "-5", "1"}, 2), M({"1", "-17/4", "1"}, 2), qu), 2);
  CHECK_MESSAGE(d.pass(), first_failure(d));
  CHECK_THROWS_WITH_AS(derive_km_data(M({"-1", "1"}), M({"1"}), qu), doctest::Contains("NoSquareRoot"), Error);
}

TEST_CASE("dimension report and spectral closure") {
  GCQData g = derive_km_data(M({"0", "1"}), M({"3", "1"}), deg);
  auto rows = dim_report(g, 3);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].computed == 1);
  CHECK(rows[3].computed == 6);
  CHECK(rows[3].predicted == 6);
  for (const auto& row : rows) {
    CHECK(row.relations_hold);
    int total = 0;
    for (const auto& b : row.blocks) {
      total += b.k_dim;
      CHECK(central_charge(b.weight) == g.k);
    }
    CHECK(total == row.computed);
  }

  GCQData h = derive_km_data(M({"t", "-1", "1"}, 2), M({"1"}, 2), deg);
  auto hr = dim_report(h, 2);
  CHECK(hr[0].computed == 2);
  CHECK(hr[2].computed == 16);
  CHECK(hr[2].predicted == 16);

  CHECK(spectral_closure_check(g, 3).pass());
  CHECK(spectral_closure_check(h, 3).pass());
  CHECK(spectral_closure_check(derive_km_data(M({"4", "-5", "1"}), M({"4", "-5", "1"}), qu), 3).pass());
}

TEST_CASE("json") {
  GCQData g = derive_km_data(M({"0", "1"}), M({"3", "1"}), deg);
  auto j = to_json(g);
  CHECK(j.at("k") == 0);
  CHECK(j.at("ell") == 1);
}
