#include <doctest.h>

#include "heis/bkiso.hpp"
#include "heis/gcq.hpp"

using namespace heis;

namespace {

LocalRing Q(int N) { return {BaseField::rationals(), N}; }
MonicPoly M(const std::vector<std::string>& c, int N = 1) { return MonicPoly(Poly::parse(c, Q(N))); }
const QuantumParam deg = QuantumParam::degenerate();
const QuantumParam qu = QuantumParam::quantum(Scalar(2));

Tuple S(std::vector<long> v) {
  Tuple out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return c.key() + " " + c.witness;
  return "";
}

struct Level {
  QuantumParam p;
  std::vector<std::string> m;
  int N;
};

const std::vector<Level> levels = {
    {deg, {"0", "1"}, 1},       {deg, {"0", "-1", "1"}, 1}, {deg, {"t", "-1", "1"}, 2},
    {qu, {"-1", "1"}, 1},       {qu, {"4", "-5", "1"}, 1},  {qu, {"4 + t", "-5", "1"}, 2},
};

}  // namespace

TEST_CASE("km_dot") {
  auto H1 = HeckeAlgebra::create(deg, 1, M({"0", "0", "1"}));
  KLRGenerators g1(H1);
  CHECK(km_dot(g1, 1, S({0})) == H1->x(1));
  CHECK((km_dot(g1, 1, S({0})) * km_dot(g1, 1, S({0}))).is_zero());

  auto H2 = HeckeAlgebra::create(deg, 2, M({"0", "1"}));
  KLRGenerators g2(H2);
  CHECK(km_dot(g2, 2, S({0, 1})).is_zero());
  CHECK_THROWS_WITH_AS(km_dot(g2, 1, S({1, 0})), doctest::Contains("ZeroBlock"), Error);

  auto H3 = HeckeAlgebra::create(deg, 3, M({"0", "-1", "1"}));
  KLRGenerators g3(H3);
  for (const auto& b : g3.blocks())
    CHECK(km_dot(g3, 1, b.tuple) * km_dot(g3, 3, b.tuple) == km_dot(g3, 3, b.tuple) * km_dot(g3, 1, b.tuple));
}

TEST_CASE("km_crossing") {
  auto H2 = HeckeAlgebra::create(deg, 2, M({"0", "1"}));
  KLRGenerators g2(H2);
  CHECK(km_crossing(g2, 1, S({0, 1})).is_zero());

  auto H = HeckeAlgebra::create(deg, 3, M({"0", "-1", "1"}, 1));
  KLRGenerators g(H);
  for (const auto& b : g.blocks())
    for (int r = 1; r <= 2; ++r) {
      HeckeElem psi = km_crossing(g, r, b.tuple);
      CHECK(psi * b.element == psi);
      // Block typing: e(j) psi_r(i) = [j = s_r i] psi_r(i).
      Tuple si = b.tuple;
      std::swap(si[r - 1], si[r]);
      for (const auto& c : g.blocks()) {
        if (c.tuple == si)
          CHECK(c.element * psi == psi);
        else
          CHECK((c.element * psi).is_zero());
      }
    }
}

TEST_CASE("relation checker on small levels") {
  auto H0 = HeckeAlgebra::create(deg, 0, M({"0", "1"}));
  CHECK(verify_klr_relations(KLRGenerators(H0)).pass());
  CHECK(roundtrip_check(KLRGenerators(H0)).pass());
  auto H1 = HeckeAlgebra::create(deg, 1, M({"0", "1"}));
  CHECK(verify_klr_relations(KLRGenerators(H1)).pass());
  CHECK(verify_klr_relations(KLRGenerators(HeckeAlgebra::create(deg, 2, M({"0", "1"})))).pass());
  auto H = HeckeAlgebra::create(deg, 3, M({"t", "-1", "1"}, 2));
  KLRGenerators g(H);
  Report r = verify_klr_relations(g);
  CHECK_MESSAGE(r.pass(), first_failure(r));
  CHECK(r.checks.size() > 0);
}

TEST_CASE("cyclotomic relation") {
  auto H = HeckeAlgebra::create(deg, 2, M({"0", "1"}));
  std::map<Scalar, MonicPoly, ScalarLess> mu = {{Scalar(0), M({"0", "1"})}};
  CHECK(verify_cyclotomic_klr(KLRGenerators(H), mu).pass());

  auto H2 = HeckeAlgebra::create(deg, 1, M({"0", "0", "1"}));
  std::map<Scalar, MonicPoly, ScalarLess> mu2 = {{Scalar(0), M({"0", "0", "1"})}};
  CHECK(verify_cyclotomic_klr(KLRGenerators(H2), mu2).pass());
  // u alone does not kill y_1 there.
  std::map<Scalar, MonicPoly, ScalarLess> wrong = {{Scalar(0), M({"0", "1"})}};
  CHECK(!verify_cyclotomic_klr(KLRGenerators(H2), wrong).pass());
}

TEST_CASE("dots rebuild x_r") {
  auto H = HeckeAlgebra::create(deg, 2, M({"0", "-1", "1"}));
  KLRGenerators g(H);
  HeckeElem x1 = H->zero();
  for (const auto& b : g.blocks())
    x1 += km_dot(g, 1, b.tuple) + b.element * b.tuple[0];
  CHECK(x1 == H->x(1));
  CHECK(heis_from_km(g, HeisGen::dot, 2) == H->x(2));
  CHECK(heis_from_km(g, HeisGen::crossing, 1) == H->T(1));
  CHECK(roundtrip_check(g).pass());
}

TEST_CASE("all test levels up to d = 2") {
  for (const auto& lv : levels)
    for (int d = 0; d <= 2; ++d) {
      CAPTURE(d);
      CAPTURE(lv.m.size());
      CAPTURE(lv.p.is_quantum());
      auto H = HeckeAlgebra::create(lv.p, d, M(lv.m, lv.N));
      KLRGenerators g(H);
      Report rel = verify_klr_relations(g);
      CHECK_MESSAGE(rel.pass(), first_failure(rel));
      GCQData data = derive_km_data(M(lv.m, lv.N), M(lv.m, lv.N), lv.p);
      Report cyc = verify_cyclotomic_klr(g, data.mu_i);
      CHECK_MESSAGE(cyc.pass(), first_failure(cyc));
      Report rt = roundtrip_check(g);
      CHECK_MESSAGE(rt.pass(), first_failure(rt));
      Report rk = rank_check(g);
      CHECK_MESSAGE(rk.pass(), first_failure(rk));
    }
}
