#include <doctest.h>

#include <random>

#include "heis/weights.hpp"

using namespace heis;

namespace {

Quiver line(std::vector<Scalar> seeds = {Scalar(0)}) { return Quiver(QuantumParam::degenerate(), seeds); }

}  // namespace

TEST_CASE("pairing and alpha") {
  Quiver q = line();
  Vertex i = q.vertex(Scalar(0));
  CHECK(pairing(i, Weight::fundamental(i)) == 1);
  CHECK(pairing(q.succ(i), Weight::fundamental(i)) == 0);
  CHECK(pairing(i, alpha(i, q)) == 2);
  CHECK(pairing(i, alpha(q.succ(i), q)) == -1);
  CHECK(pairing(i, alpha(q.pred(i), q)) == -1);
  CHECK(central_charge(alpha(i, q)) == 0);
  CHECK(central_charge(Weight::fundamental(i)) == 1);
}

TEST_CASE("roots over a full cyclic component sum to zero") {
  // q = 2 in F_7: q^2 = 4 has order 3.
  QuantumParam p = QuantumParam::quantum(Scalar(2, BaseField::prime(7)));
  Quiver q(p, {Scalar(1, BaseField::prime(7))}, true);
  CHECK(q.period() == 3);
  Vertex i = q.vertex(Scalar(1, BaseField::prime(7)));
  CHECK(q.value(q.succ(i)) == Scalar(4, BaseField::prime(7)));
  CHECK(q.succ(q.succ(q.succ(i))) == i);
  Weight s = alpha(i, q) + alpha(q.succ(i), q) + alpha(q.pred(i), q);
  CHECK(s.support().empty());
  CHECK_THROWS_WITH_AS(sigma(i, Weight::fundamental(i), q), doctest::Contains("SignAmbiguity"), Error);
  CHECK_THROWS_AS(Quiver(p, {Scalar(1, BaseField::prime(7))}, false), Error);
}

TEST_CASE("word weights") {
  Quiver q = line();
  Vertex i = q.vertex(Scalar(0));
  Vertex ip = q.succ(i);
  CHECK(word_weight({{true, i}, {false, i}}, q).support().empty());
  CHECK(pairing(ip, word_weight({{true, ip}, {true, i}}, q)) == 1);
}

TEST_CASE("sigma") {
  Quiver q = line();
  Vertex i = q.vertex(Scalar(0));
  Weight rep = Weight::fundamental(i) * 2 - Weight::fundamental(q.succ(i));
  rep = coset_representative(rep, q);
  CHECK(sigma(i, rep, q) == 1);
  CHECK(sigma(i, rep + alpha(q.pred(i), q), q) == -1);
  CHECK(sigma(i, rep + alpha(i, q), q) == 1);
  // The defining cocycle sigma_i(l) sigma_i(l + a_j) = (-1)^{[i = j^+]}.
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      Vertex j{0, b};
      Weight l = rep + alpha(Vertex{0, a}, q) * 2 + alpha(Vertex{0, a + 1}, q);
      int lhs = sigma(i, l, q) * sigma(i, l + alpha(j, q), q);
      CHECK(lhs == (q.succ(j) == i ? -1 : 1));
    }
}

TEST_CASE("sigma is path independent and pairing is additive") {
  Quiver q = line({Scalar(0), Scalar::parse("1/2")});
  CHECK(q.orbit_count() == 2);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> off(-4, 4), orb(0, 1), coef(-2, 2);
  auto random_weight = [&] {
    Weight w;
    for (int k = 0; k < 4; ++k) w.add(Vertex{orb(rng), off(rng)}, coef(rng));
    return w;
  };
  for (int n = 0; n < 100; ++n) {
    Weight l = random_weight(), m = random_weight();
    Vertex i{orb(rng), off(rng)};
    CHECK(pairing(i, l + m) == pairing(i, l) + pairing(i, m));
    // Two decompositions of the same root-lattice shift in different orders.
    std::vector<Vertex> steps;
    for (int k = 0; k < 5; ++k) steps.push_back(Vertex{orb(rng), off(rng)});
    Weight a = l, b = l;
    for (const auto& s : steps) a += alpha(s, q);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) b += alpha(*it, q);
    CHECK(sigma(i, a, q) == sigma(i, b, q));
    // Letter order does not change the weight.
    std::vector<Letter> w1, w2;
    for (const auto& s : steps) w1.push_back({coef(rng) >= 0, s});
    w2.assign(w1.rbegin(), w1.rend());
    CHECK(word_weight(w1, q) == word_weight(w2, q));
  }
}

TEST_CASE("quantum vertices are q^2-orbits") {
  Quiver q(QuantumParam::quantum(Scalar(2)), {Scalar(1), Scalar(16), Scalar(3)});
  CHECK(q.orbit_count() == 2);
  CHECK(q.vertex(Scalar(16)).orbit == q.vertex(Scalar(1)).orbit);
  CHECK(q.vertex(Scalar(16)).offset - q.vertex(Scalar(1)).offset == 2);
  CHECK(q.value(q.succ(q.vertex(Scalar(3)))) == Scalar(12));
  CHECK(!q.locate(Scalar(5)).has_value());
}
