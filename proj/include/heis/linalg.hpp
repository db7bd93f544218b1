#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "heis/scalars.hpp"

namespace heis {

using KVec = std::vector<Scalar>;
using KMat = std::vector<KVec>;  // row-major

bool is_zero(const KVec& v);

// Incremental row echelon form.  Optionally records how each stored row is
// expressed through the vectors that were offered to add().
class Echelon {
 public:
  Echelon(int dim, BaseField f, bool track = false) : dim_(dim), f_(f), track_(track) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  // Reduces v; returns true (and stores it) when v is independent of the span.
  bool add(const KVec& v);
  // If v lies in the span of the vectors offered so far, coefficients c with
  // v = sum_j c_j offered_j (offered indices count every call to add()).
  std::optional<KVec> express(const KVec& v) const;
  bool contains(const KVec& v) const;

 private:
  struct Row {
    int pivot;
    std::vector<std::pair<int, Scalar>> entries;  // pivot entry normalized to 1
    KVec combo;
  };
  void reduce(KVec& v, KVec* combo) const;

  int dim_;
  BaseField f_;
  bool track_;
  int offered_ = 0;
  std::vector<Row> rows_;
  std::vector<int> row_of_col_;
};

int rank(const KMat& rows, BaseField f);
// A solution x of A x = b, if one exists.
std::optional<KVec> solve(const KMat& A, const KVec& b, BaseField f);
KMat mat_mul(const KMat& A, const KMat& B, BaseField f);

}  // namespace heis
