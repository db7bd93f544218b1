#include <doctest.h>

#include <random>

#include "heis/localpoly.hpp"
#include "heis/run.hpp"
#include "oracles/oracles.hpp"

using namespace heis;

namespace {

LocalRing Q(int N) { return {BaseField::rationals(), N}; }
MonicPoly M(const std::vector<std::string>& c, int N = 1) { return MonicPoly(Poly::parse(c, Q(N))); }
Poly P(const std::vector<std::string>& c, int N = 1) { return Poly::parse(c, Q(N)); }

}  // namespace

TEST_CASE("divmod") {
  auto [q, r] = divmod(P({"t", "-1", "1"}, 2), M({"-t", "1"}, 2));
  CHECK(q == P({"t - 1", "1"}, 2));
  CHECK(r.is_zero());
  MonicPoly f = M({"1", "2", "1"});
  auto [q2, r2] = divmod(f, f);
  CHECK(q2 == P({"1"}));
  CHECK(r2.is_zero());
  auto [q3, r3] = divmod(P({"0", "1"}), M({"-5", "1"}));
  CHECK(q3 == P({"1"}));
  CHECK(r3 == P({"5"}));
}

TEST_CASE("bezout") {
  auto [a, b] = bezout(P({"0", "1"}), P({"-1", "1"}));
  CHECK(a == P({"1"}));
  CHECK(b == P({"-1"}));
  auto [a1, b1] = bezout(P({"1"}), P({"3", "0", "1"}));
  CHECK(a1 == P({"1"}));
  CHECK(b1.is_zero());
  CHECK_THROWS_WITH_AS(bezout(P({"0", "1"}), P({"0", "1"})), doctest::Contains("NotCoprime"), Error);
}

TEST_CASE("coprime_factor_lift") {
  MonicPoly f = M({"t", "-1", "1"}, 2);
  auto [g, h] = coprime_factor_lift(f, M({"0", "1"}), M({"-1", "1"}));
  CHECK(g == M({"-t", "1"}, 2));
  CHECK(h == M({"t - 1", "1"}, 2));

  // Undetermined-coefficient oracle agrees.
  auto [og, oh] = oracle::hensel_undetermined(oracle::to_upoly(f), {0, 1}, {-1, 1}, 2);
  CHECK(oracle::to_upoly(g) == og);
  CHECK(oracle::to_upoly(h) == oh);

  auto [g1, h1] = coprime_factor_lift(M({"0", "-1", "1"}), M({"0", "1"}), M({"-1", "1"}));
  CHECK(g1 == M({"0", "1"}));
  CHECK(h1 == M({"-1", "1"}));

  CHECK_THROWS_WITH_AS(coprime_factor_lift(M({"0", "0", "1"}), M({"0", "1"}), M({"0", "1"})),
                       doctest::Contains("NotCoprime"), Error);
  CHECK_THROWS_WITH_AS(coprime_factor_lift(M({"1", "0", "1"}), M({"0", "1"}), M({"-1", "1"})),
                       doctest::Contains("FactorizationMismatch"), Error);
}

TEST_CASE("cluster_factor") {
  auto c = cluster_factor(M({"0", "0", "-1", "1"}));
  REQUIRE(c.size() == 2);
  CHECK(c.at(Scalar(0)) == M({"0", "0", "1"}));
  CHECK(c.at(Scalar(1)) == M({"0", "1"}));

  auto c2 = cluster_factor(M({"t", "-1", "1"}, 2));
  REQUIRE(c2.size() == 2);
  CHECK(c2.at(Scalar(0)) == M({"-t", "1"}, 2));
  CHECK(c2.at(Scalar(1)) == M({"t", "1"}, 2));

  CHECK_THROWS_WITH_AS(cluster_factor(M({"1", "0", "1"})), doctest::Contains("NotSplit"), Error);
}

TEST_CASE("split_roots over F_p") {
  BaseField F = BaseField::prime(5);
  LocalRing r{F, 1};
  // u^2 + 1 = (u - 2)(u - 3) mod 5
  auto roots = split_roots(Poly::parse({"1", "0", "1"}, r));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == Scalar(2, F));
  CHECK(roots[1].first == Scalar(3, F));
  CHECK_THROWS_AS(split_roots(Poly::parse({"2", "0", "1"}, r)), Error);
}

TEST_CASE("Hensel against the undetermined-coefficient oracle on random input") {
  std::mt19937_64 rng(11);
  LocalRing r = Q(3);
  for (int n = 0; n < 40; ++n) {
    MonicPoly f = random_split_monic(r, 2 + n % 4, rng);
    auto roots = split_roots(f.residue().poly());
    if (roots.size() < 2) continue;
    // gbar: the first root cluster, hbar: the rest.
    MonicPoly gbar = MonicPoly::from_roots(std::vector<LocalScalar>(roots[0].second, LocalScalar(Q(1), roots[0].first)), Q(1));
    Poly hb = Poly::constant(LocalScalar(Q(1), 1));
    for (std::size_t j = 1; j < roots.size(); ++j)
      for (int k = 0; k < roots[j].second; ++k) hb *= Poly::linear(LocalScalar(Q(1), roots[j].first));
    MonicPoly hbar(hb);
    auto [g, h] = coprime_factor_lift(f, gbar, hbar);
    std::vector<mpq_class> gq, hq;
    for (auto& c : gbar.poly().coeffs()) gq.push_back(c[0].value());
    for (auto& c : hbar.poly().coeffs()) hq.push_back(c[0].value());
    auto [og, oh] = oracle::hensel_undetermined(oracle::to_upoly(f), gq, hq, 3);
    CHECK(oracle::to_upoly(g) == og);
    CHECK(oracle::to_upoly(h) == oh);
    CHECK(filtration_lift(f, gbar, hbar) == std::make_pair(g, h));
  }
}

TEST_CASE("Hensel idempotence, uniqueness and the product identity") {
  std::mt19937_64 rng(5);
  LocalRing r = Q(3);
  for (int n = 0; n < 30; ++n) {
    MonicPoly f = random_split_monic(r, 1 + n % 6, rng);
    ClusterMap c = cluster_factor(f);
    CHECK(cluster_product(c, r) == f);
    for (const auto& [i, fi] : c) CHECK(fi.poly().nonleading_in_J());
    CHECK(cluster_factor(cluster_product(c, r)).size() == c.size());
    for (const auto& [i, fi] : cluster_factor(cluster_product(c, r))) CHECK(fi == c.at(i));
    // Perturb one factor by t^2 in the constant term.
    ClusterMap bad = c;
    auto it = bad.begin();
    Poly p = it->second.poly() + Poly::constant(LocalScalar::t(r).pow(2));
    it->second = MonicPoly(p);
    CHECK(!(cluster_product(bad, r) == f));
  }
}
