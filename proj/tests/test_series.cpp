#include <doctest.h>

#include <random>

#include "heis/series.hpp"
#include "oracles/oracles.hpp"

using namespace heis;

namespace {

LocalRing Q(int N) { return {BaseField::rationals(), N}; }
Poly P(const std::vector<std::string>& c, int N = 1) { return Poly::parse(c, Q(N)); }
LocalScalar L(long v, int N = 1) { return LocalScalar(Q(N), v); }

}  // namespace

TEST_CASE("multiplication") {
  auto a = LaurentSeries::from_poly(P({"1", "1"}), 6);
  auto b = LaurentSeries::from_poly(P({"-1", "1"}), 6);
  CHECK((a * b).agrees_with(LaurentSeries::from_poly(P({"-1", "0", "1"}), 6)));
  CHECK((a * LaurentSeries::one(Q(1), 6)).agrees_with(a));
  // (1 + u^-1)(1 - u^-1 + u^-2 - ...)
  std::vector<LocalScalar> alt;
  for (int j = 0; j < 8; ++j) alt.push_back(L(j % 2 ? -1 : 1));
  LaurentSeries g(Q(1), 0, alt);
  LaurentSeries one_plus(Q(1), 0, {L(1), L(1), L(0), L(0), L(0), L(0), L(0), L(0)});
  CHECK((one_plus * g).is_one());
}

TEST_CASE("invert") {
  auto inv = LaurentSeries::from_poly(P({"1", "1"}), 6).invert();
  CHECK(inv.lead_exp() == -1);
  for (int j = 0; j < inv.precision(); ++j) CHECK(inv.coeffs()[j] == L(j % 2 ? -1 : 1));
  auto uk = LaurentSeries::monomial(L(1), 3, 5).invert();
  CHECK(uk.lead_exp() == -3);
  CHECK(uk.coeff_of(-3) == L(1));
  CHECK(uk.coeff_of(-4).is_zero());
  LaurentSeries bad(Q(2), 1, {LocalScalar::t(Q(2)), L(1, 2), L(0, 2)});
  CHECK_THROWS_WITH_AS(bad.invert(), doctest::Contains("NotInvertible"), Error);
}

TEST_CASE("det_inversion_coeff") {
  std::vector<LocalScalar> f = {L(1), L(5), L(-2), L(7)};
  CHECK(det_inversion_coeff(f, 0) == L(1));
  CHECK(det_inversion_coeff(f, 1) == L(-5));
  CHECK(det_inversion_coeff(f, 2) == L(25 + 2));
  std::vector<LocalScalar> zero = {L(1), L(0), L(0)};
  for (int r = 1; r <= 5; ++r) CHECK(det_inversion_coeff(zero, r).is_zero());
}

TEST_CASE("rational_to_series") {
  auto s = rational_to_series(P({"3", "1"}), P({"0", "1"}), 5);
  CHECK(s.lead_exp() == 0);
  CHECK(s.coeffs()[0] == L(1));
  CHECK(s.coeffs()[1] == L(3));
  for (int j = 2; j < 5; ++j) CHECK(s.coeffs()[j].is_zero());
  CHECK(rational_to_series(P({"2", "1", "1"}), P({"2", "1", "1"}), 5).is_one());
  auto inv = rational_to_series(P({"1"}), P({"0", "1"}), 4);
  CHECK(inv.lead_exp() == -1);
  CHECK(inv.coeff_of(-1) == L(1));
  CHECK(inv.coeff_of(-2).is_zero());
}

TEST_CASE("symfun_check") {
  CHECK(symfun_check(1));
  CHECK(symfun_check({Scalar(1), Scalar(2), Scalar(3)}));
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(symfun_check(5, seed));
  // Oracle: sum_j (-1)^j e_j h_{r-j} = 0 for r >= 1 at the same points.
  std::vector<mpq_class> x = {1, 2, 3, mpq_class(1, 2), -4};
  for (int r = 1; r <= 6; ++r) {
    mpq_class s = 0;
    for (int j = 0; j <= r; ++j) s += (j % 2 ? -1 : 1) * oracle::elementary(x, j) * oracle::complete(x, r - j);
    CHECK(s == 0);
  }
}

TEST_CASE("determinant formula matches Laplace expansion and the recurrence") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dist(-5, 5);
  const int N = 3;
  for (int n = 0; n < 20; ++n) {
    const int r = 1 + n % 7;
    std::vector<LocalScalar> f = {LocalScalar(Q(N), 1)};
    std::vector<oracle::Tq> fo = {oracle::Tq{1, 0, 0}};
    for (int j = 1; j <= r; ++j) {
      std::vector<Scalar> c;
      for (int s = 0; s < N; ++s) c.push_back(Scalar(dist(rng)));
      f.emplace_back(c);
      fo.push_back(oracle::to_tq(f.back()));
    }
    // g_r = det(-f_{s-t+1})
    std::vector<std::vector<oracle::Tq>> Mx(r, std::vector<oracle::Tq>(r, oracle::Tq(N, 0)));
    for (int s = 1; s <= r; ++s)
      for (int t = 1; t <= r; ++t) {
        int k = s - t + 1;
        if (k >= 0 && k <= r) Mx[s - 1][t - 1] = oracle::tneg(fo[k]);
      }
    oracle::Tq lap = oracle::det_laplace(Mx, N);
    CHECK(oracle::to_tq(det_inversion_coeff(f, r)) == lap);
    CHECK(oracle::inverse_recurrence(fo, r, N)[r] == lap);
  }
}

TEST_CASE("invert twice and the Grassmannian identity") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> dist(-4, 4);
  const LocalRing r = Q(3);
  for (int n = 0; n < 20; ++n) {
    std::vector<LocalScalar> c;
    for (int j = 0; j < 10; ++j) {
      std::vector<Scalar> v;
      for (int s = 0; s < 3; ++s) v.push_back(Scalar(dist(rng)));
      if (j == 0 && v[0].is_zero()) v[0] = Scalar(1);
      c.emplace_back(v);
    }
    LaurentSeries a(r, n % 5 - 2, c);
    CHECK(a.invert().invert().agrees_with(a));
    CHECK((a * a.invert()).is_one());
  }
  Poly n = Poly::parse({"1 + t", "-2", "0", "1"}, r);
  Poly m = Poly::parse({"t", "3", "1"}, r);
  CHECK((rational_to_series(n, m, 12) * rational_to_series(m, n, 12)).is_one());
}
