#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "heis/linalg.hpp"
#include "heis/localpoly.hpp"

namespace heis {

enum class HeckeKind { degenerate, quantum };

// One-line notation on {1..d}.
class Permutation {
 public:
  explicit Permutation(int d = 0);
  explicit Permutation(std::vector<int> one_line);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }
  int length() const;
  // w = s_{r_1} ... s_{r_k} with k = length().
  std::vector<int> reduced_word() const;
  // s_r w
  Permutation left_mul(int r) const;
  bool left_mul_longer(int r) const;
  Permutation operator*(const Permutation& o) const;

  auto operator<=>(const Permutation&) const = default;
  static std::vector<Permutation> all(int d);

 private:
  std::vector<int> w_;
};

// Basis label x^a T_w.
struct HeckeLabel {
  std::vector<int> exps;
  Permutation w;
  auto operator<=>(const HeckeLabel&) const = default;
};

using ZVec = std::vector<LocalScalar>;
using SparseCol = std::vector<std::pair<int, LocalScalar>>;

class HeckeElem;
class HeckeAlgebra;
using HeckePtr = std::shared_ptr<const HeckeAlgebra>;

// The cyclotomic quotient H_d^m(Z) of the degenerate or quantum affine Hecke
// algebra, realized on the basis x^a T_w with 0 <= a_r < deg m.
//
// Strands are numbered right to left: x_1 is the dot on the rightmost strand and
// s_r (tau_r) crosses strands r and r+1.  With a = x_r, b = x_{r+1}:
//   degenerate  s_r f = (s_r f) s_r + (f - s_r f)/(b - a)
//   quantum     T_r f = (s_r f) T_r + z b (f - s_r f)/(b - a),  T_r^2 = z T_r + 1
class HeckeAlgebra : public std::enable_shared_from_this<HeckeAlgebra> {
 public:
  static HeckePtr create(const QuantumParam& param, int d, const MonicPoly& m);

  HeckeKind kind() const { return param_.is_quantum() ? HeckeKind::quantum : HeckeKind::degenerate; }
  const QuantumParam& param() const { return param_; }
  int d() const { return d_; }
  int ell() const { return ell_; }
  const MonicPoly& level() const { return m_; }
  const LocalRing& ring() const { return ring_; }
  BaseField field() const { return ring_.field; }
  int dim() const { return static_cast<int>(labels_.size()); }
  int k_dim() const { return dim() * ring_.N; }
  const std::vector<HeckeLabel>& labels() const { return labels_; }
  int index(const HeckeLabel& l) const;

  // Left multiplication on coordinate vectors.
  ZVec apply_x(int r, const ZVec& v) const;
  ZVec apply_T(int r, const ZVec& v) const;
  ZVec apply_basis(int u, const ZVec& v) const;
  // Multiplication by t in Z.
  ZVec apply_t(const ZVec& v) const;

  HeckeElem zero() const;
  HeckeElem one() const;
  HeckeElem scalar(const LocalScalar& c) const;
  HeckeElem basis_elem(int u) const;
  HeckeElem x(int r) const;
  HeckeElem T(int r) const;
  HeckeElem T_inv(int r) const;
  HeckeElem x_inv(int r) const;

  HeckeElem mul(const HeckeElem& a, const HeckeElem& b) const;
  // Product b_u * b_v of basis elements.
  const SparseCol& product(int u, int v) const;
  // Columns a * b_u of left multiplication by a.
  std::vector<SparseCol> left_columns(const HeckeElem& a) const;
  ZVec apply_cols(const std::vector<SparseCol>& cols, const ZVec& v) const;

  // Relations of the affine Hecke algebra and m(x_1) = 0, checked on the
  // left-multiplication operators over every basis vector.
  struct RelationReport {
    int checked = 0;
    std::vector<std::string> failures;
  };
  RelationReport verify_operator_relations() const;
  // k-span of all words in x_r, T_r, t applied to 1.
  int closure_rank() const;

 private:
  HeckeAlgebra(const QuantumParam& param, int d, const MonicPoly& m);
  void build();
  using TComb = std::map<int, LocalScalar>;
  using Acc = std::map<int, LocalScalar>;
  int mono_index(const std::vector<int>& a) const;
  void add_term(Acc& out, const std::vector<int>& a, const TComb& X, const LocalScalar& c) const;
  void reduce_overflow(Acc& out, const std::vector<int>& a, const TComb& X, const LocalScalar& c) const;
  void apply_T_acc(int r, const Acc& in, Acc& out, const LocalScalar& c) const;
  TComb T_times(int r, const TComb& X) const;

  QuantumParam param_;
  int d_;
  MonicPoly m_;
  LocalRing ring_;
  int ell_;
  int nmono_ = 1;
  std::vector<Permutation> perms_;
  std::map<Permutation, int> perm_index_;
  std::vector<std::vector<int>> left_mul_;       // [r][w]
  std::vector<std::vector<char>> left_longer_;   // [r][w]
  std::vector<std::vector<int>> reduced_words_;  // [w]
  std::vector<HeckeLabel> labels_;
  std::vector<std::vector<SparseCol>> gen_T_, gen_x_;  // [r-1][column]

  mutable std::mutex cache_mu_;
  mutable std::vector<std::unique_ptr<std::vector<SparseCol>>> products_;
};

class HeckeElem {
 public:
  HeckeElem() = default;
  explicit HeckeElem(HeckePtr alg);
  HeckeElem(HeckePtr alg, ZVec c);

  const HeckePtr& algebra() const { return alg_; }
  const ZVec& coeffs() const { return c_; }
  const LocalScalar& operator[](int u) const { return c_[u]; }
  bool is_zero() const;

  HeckeElem operator-() const;
  HeckeElem operator+(const HeckeElem& o) const;
  HeckeElem operator-(const HeckeElem& o) const;
  HeckeElem operator*(const HeckeElem& o) const;
  HeckeElem operator*(const LocalScalar& s) const;
  HeckeElem operator*(const Scalar& s) const;
  HeckeElem& operator+=(const HeckeElem& o);
  HeckeElem& operator-=(const HeckeElem& o);
  bool operator==(const HeckeElem& o) const;

  // Coordinates over k in the basis b_u t^s, index u*N + s.
  KVec to_kvec() const;
  static HeckeElem from_kvec(const HeckePtr& alg, const KVec& v);

  struct Term {
    HeckeLabel label;
    LocalScalar coeff;
  };
  std::vector<Term> terms() const;
  std::string str() const;

 private:
  void check(const HeckeElem& o) const;
  HeckePtr alg_;
  ZVec c_;
};

HeckeElem operator*(const LocalScalar& s, const HeckeElem& a);
HeckeElem operator*(const Scalar& s, const HeckeElem& a);

std::vector<HeckeLabel> basis(int d, const MonicPoly& m);
// Left multiplication on the k-basis b_u t^s; the matrix acts on columns.
KMat regular_rep(const HeckeElem& a);
// Least-degree monic polynomial over k annihilating a.
MonicPoly min_poly(const HeckeElem& a);
// Least-degree monic p over Z with p(a) e = 0; `unique` reports whether the
// coefficients are determined.
MonicPoly min_poly_over_Z(const HeckeElem& a, const HeckeElem& e, bool* unique = nullptr);
// p(a) for a polynomial over Z.
HeckeElem eval_poly(const Poly& p, const HeckeElem& a);

// Elements of the affine Hecke algebra AH_d over Z (Laurent dots in the quantum case).
class AffineElem {
 public:
  AffineElem(const QuantumParam& param, int d, const LocalRing& r) : param_(param), d_(d), ring_(r) {}

  static AffineElem one(const QuantumParam& param, int d, const LocalRing& r);
  static AffineElem x(const QuantumParam& param, int d, const LocalRing& r, int i, int power = 1);
  static AffineElem T(const QuantumParam& param, int d, const LocalRing& r, int i);

  const QuantumParam& param() const { return param_; }
  int d() const { return d_; }
  const LocalRing& ring() const { return ring_; }
  const std::map<HeckeLabel, LocalScalar>& terms() const { return terms_; }
  void add(const HeckeLabel& l, const LocalScalar& c);

  AffineElem operator+(const AffineElem& o) const;
  AffineElem operator-(const AffineElem& o) const;
  AffineElem operator*(const AffineElem& o) const;
  AffineElem operator*(const LocalScalar& s) const;
  bool operator==(const AffineElem& o) const { return terms_ == o.terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Left multiplication by T_r (s_r).
  AffineElem left_T(int r) const;

 private:
  QuantumParam param_;
  int d_;
  LocalRing ring_;
  std::map<HeckeLabel, LocalScalar> terms_;
};

HeckeElem cyclotomic_reduce(const AffineElem& a, const HeckePtr& H);

}  // namespace heis
