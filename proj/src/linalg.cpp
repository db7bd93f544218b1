#include "heis/linalg.hpp"

namespace heis {

bool is_zero(const KVec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

void Echelon::reduce(KVec& v, KVec* combo) const {
  for (const auto& row : rows_) {
    if (v[row.pivot].is_zero()) continue;
    Scalar c = v[row.pivot];
    for (const auto& [col, val] : row.entries) v[col] -= c * val;
    if (combo)
      for (std::size_t j = 0; j < row.combo.size(); ++j)
        if (!row.combo[j].is_zero()) (*combo)[j] -= c * row.combo[j];
  }
}

bool Echelon::add(const KVec& v_in) {
  if (static_cast<int>(v_in.size()) != dim_) throw Error(Errc::ConfigError, "vector length mismatch in echelon");
  KVec v = v_in;
  KVec combo;
  if (track_) {
    combo.assign(offered_ + 1, Scalar(0, f_));
    combo[offered_] = Scalar(1, f_);
  }
  reduce(v, track_ ? &combo : nullptr);
  ++offered_;
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Scalar inv = v[pivot].inv();
  Row row{pivot, {}, {}};
  for (int j = pivot; j < dim_; ++j)
    if (!v[j].is_zero()) row.entries.emplace_back(j, v[j] * inv);
  if (track_) {
    for (auto& c : combo) c *= inv;
    row.combo = std::move(combo);
  }
  rows_.push_back(std::move(row));
  return true;
}

std::optional<KVec> Echelon::express(const KVec& v_in) const {
  if (!track_) throw Error(Errc::ConfigError, "echelon was built without tracking");
  KVec v = v_in;
  KVec combo(offered_, Scalar(0, f_));
  reduce(v, &combo);
  if (!is_zero(v)) return std::nullopt;
  for (auto& c : combo) c = -c;
  return combo;
}

bool Echelon::contains(const KVec& v_in) const {
  KVec v = v_in;
  reduce(v, nullptr);
  return is_zero(v);
}

int rank(const KMat& rows, BaseField f) {
  if (rows.empty()) return 0;
  Echelon e(static_cast<int>(rows[0].size()), f);
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

std::optional<KVec> solve(const KMat& A, const KVec& b, BaseField f) {
  const int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : 0;
  Echelon e(m, f, true);
  for (int j = 0; j < n; ++j) {
    KVec col(m, Scalar(0, f));
    for (int i = 0; i < m; ++i) col[i] = A[i][j];
    e.add(col);
  }
  return e.express(b);
}

KMat mat_mul(const KMat& A, const KMat& B, BaseField f) {
  const std::size_t m = A.size(), k = B.size(), n = k ? B[0].size() : 0;
  KMat C(m, KVec(n, Scalar(0, f)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (A[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!B[l][j].is_zero()) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

}  // namespace heis
