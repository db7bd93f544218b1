#pragma once

#include <array>
#include <compare>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heis/scalars.hpp"

namespace heis {

struct Vertex {
  int orbit = 0;
  long offset = 0;
  auto operator<=>(const Vertex&) const = default;
  std::string str() const { return "(" + std::to_string(orbit) + "," + std::to_string(offset) + ")"; }
};

// The vertex set I: orbits of i -> i^+ (i + 1, or q^2 i), registered from a list of
// seed values.  Each orbit is based at its smallest seed.
class Quiver {
 public:
  Quiver() : param_(QuantumParam::degenerate()) {}
  Quiver(const QuantumParam& param, const std::vector<Scalar>& seeds, bool allow_cyclic = false);

  const QuantumParam& param() const { return param_; }
  int orbit_count() const { return static_cast<int>(bases_.size()); }
  const Scalar& base(int orbit) const { return bases_.at(orbit); }
  // Orbit length, 0 for type A_infinity.
  long period() const { return period_; }
  bool is_cyclic() const { return period_ != 0; }

  std::optional<Vertex> locate(const Scalar& v) const;
  Vertex vertex(const Scalar& v) const;
  Scalar value(const Vertex& i) const;
  Vertex succ(const Vertex& i) const { return normalize({i.orbit, i.offset + 1}); }
  Vertex pred(const Vertex& i) const { return normalize({i.orbit, i.offset - 1}); }
  Vertex normalize(Vertex i) const;

 private:
  std::optional<long> orbit_offset(const Scalar& base, const Scalar& v) const;

  QuantumParam param_;
  std::vector<Scalar> bases_;
  long period_ = 0;
};

class Weight {
 public:
  Weight() = default;
  static Weight fundamental(const Vertex& i, long c = 1);

  long operator[](const Vertex& i) const;
  const std::map<Vertex, long>& support() const { return c_; }
  void add(const Vertex& i, long c);

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(long s) const;
  Weight& operator+=(const Weight& o) { return *this = *this + o; }
  Weight& operator-=(const Weight& o) { return *this = *this - o; }
  bool operator==(const Weight& o) const { return c_ == o.c_; }
  bool operator<(const Weight& o) const { return c_ < o.c_; }

  std::vector<std::array<long, 3>> triples() const;
  std::string str() const;

 private:
  std::map<Vertex, long> c_;
};

long pairing(const Vertex& i, const Weight& lambda);
Weight alpha(const Vertex& i, const Quiver& q);
long central_charge(const Weight& lambda);

struct Letter {
  bool is_e;  // E_i or F_i
  Vertex i;
};
Weight word_weight(const std::vector<Letter>& word, const Quiver& q);

// The coset representative of lambda modulo the root lattice, orbit by orbit.
Weight coset_representative(const Weight& lambda, const Quiver& q);
// Coefficients c_j with lambda - rep = sum_j c_j alpha_j.  A_infinity only.
std::map<Vertex, long> root_coordinates(const Weight& lambda, const Quiver& q);
int sigma(const Vertex& i, const Weight& lambda, const Quiver& q);

class SignTable {
 public:
  explicit SignTable(const Quiver& q) : q_(q) {}
  int operator()(const Vertex& i, const Weight& lambda) const;

 private:
  const Quiver& q_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Vertex, Weight>, int> memo_;
};

}  // namespace heis
