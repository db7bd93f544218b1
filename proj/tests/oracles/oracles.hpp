#pragma once

// Naive reference implementations used to cross-check the library.  Nothing here
// touches heis types except the small conversion helpers at the bottom.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "heis/localpoly.hpp"

namespace oracle {

// Element of Q[t]/(t^N) as a coefficient vector.
using Tq = std::vector<mpq_class>;

inline Tq tmul(const Tq& a, const Tq& b) {
  Tq c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}
inline Tq tadd(Tq a, const Tq& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline Tq tneg(Tq a) {
  for (auto& x : a) x = -x;
  return a;
}

// Polynomial in u over Q[t]/(t^N): p[deg][t-power].
using UPoly = std::vector<Tq>;

inline UPoly umul(const UPoly& a, const UPoly& b, int N) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, Tq(N, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = tadd(c[i + j], tmul(a[i], b[j]));
  return c;
}

// Solve A x = b over Q by Gauss-Jordan; A is rows x cols.  Returns one solution.
inline std::optional<std::vector<mpq_class>> gauss_solve(std::vector<std::vector<mpq_class>> A,
                                                         std::vector<mpq_class> b) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows ? static_cast<int>(A[0].size()) : 0;
  std::vector<int> pivcol;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = -1;
    for (int r = row; r < rows; ++r)
      if (A[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[row]);
    std::swap(b[p], b[row]);
    mpq_class inv = 1 / A[row][c];
    for (auto& x : A[row]) x *= inv;
    b[row] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || A[r][c] == 0) continue;
      mpq_class f = A[r][c];
      for (int j = 0; j < cols; ++j) A[r][j] -= f * A[row][j];
      b[r] -= f * b[row];
    }
    pivcol.push_back(c);
    ++row;
  }
  for (int r = row; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<mpq_class> x(cols, 0);
  for (int r = 0; r < row; ++r) x[pivcol[r]] = b[r];
  return x;
}

// Monic lifts g, h of gbar, hbar with f = g h over Q[t]/(t^N), found by solving one
// linear system per power of t for the unknown coefficients.
inline std::pair<UPoly, UPoly> hensel_undetermined(const UPoly& f, const std::vector<mpq_class>& gbar,
                                                   const std::vector<mpq_class>& hbar, int N) {
  const int a = static_cast<int>(gbar.size()) - 1, b = static_cast<int>(hbar.size()) - 1;
  UPoly g(a + 1, Tq(N, 0)), h(b + 1, Tq(N, 0));
  for (int j = 0; j <= a; ++j) g[j][0] = gbar[j];
  for (int j = 0; j <= b; ++j) h[j][0] = hbar[j];
  for (int s = 1; s < N; ++s) {
    // Unknowns: g_s coefficients of u^0..u^{a-1}, then h_s of u^0..u^{b-1}.
    const int n = a + b, deg = a + b;
    std::vector<std::vector<mpq_class>> A(deg + 1, std::vector<mpq_class>(n, 0));
    std::vector<mpq_class> rhs(deg + 1, 0);
    for (int k = 0; k <= deg; ++k) {
      mpq_class known = k < static_cast<int>(f.size()) ? f[k][s] : mpq_class(0);
      for (int i = 0; i <= a; ++i) {
        int j = k - i;
        if (j < 0 || j > b) continue;
        for (int s1 = 1; s1 < s; ++s1) known -= g[i][s1] * h[j][s - s1];
      }
      rhs[k] = known;
      for (int i = 0; i < a; ++i)
        if (k - i >= 0 && k - i <= b) A[k][i] += hbar[k - i];
      for (int j = 0; j < b; ++j)
        if (k - j >= 0 && k - j <= a) A[k][a + j] += gbar[k - j];
    }
    auto x = gauss_solve(A, rhs);
    if (!x) throw std::runtime_error("oracle: no lift");
    for (int i = 0; i < a; ++i) g[i][s] = (*x)[i];
    for (int j = 0; j < b; ++j) h[j][s] = (*x)[a + j];
  }
  return {g, h};
}

// Determinant by Laplace expansion along the first row.
inline Tq det_laplace(const std::vector<std::vector<Tq>>& M, int N) {
  const int n = static_cast<int>(M.size());
  if (n == 0) {
    Tq one(N, 0);
    one[0] = 1;
    return one;
  }
  Tq acc(N, 0);
  for (int c = 0; c < n; ++c) {
    std::vector<std::vector<Tq>> minor;
    for (int r = 1; r < n; ++r) {
      std::vector<Tq> row;
      for (int j = 0; j < n; ++j)
        if (j != c) row.push_back(M[r][j]);
      minor.push_back(row);
    }
    Tq term = tmul(M[0][c], det_laplace(minor, N));
    acc = tadd(acc, c % 2 ? tneg(term) : term);
  }
  return acc;
}

// Coefficients g_1..g_r of 1 / (1 + f_1 v + f_2 v^2 + ...) by the plain recurrence.
inline std::vector<Tq> inverse_recurrence(const std::vector<Tq>& f, int r, int N) {
  std::vector<Tq> g(r + 1, Tq(N, 0));
  g[0][0] = 1;
  for (int k = 1; k <= r; ++k)
    for (int j = 1; j <= k; ++j) {
      Tq fj = j < static_cast<int>(f.size()) ? f[j] : Tq(N, 0);
      g[k] = tadd(g[k], tneg(tmul(fj, g[k - j])));
    }
  return g;
}

// Elementary and complete symmetric polynomials at points, by enumeration.
inline mpq_class elementary(const std::vector<mpq_class>& x, int r) {
  const int n = static_cast<int>(x.size());
  if (r < 0 || r > n) return 0;
  mpq_class acc = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    mpq_class p = 1;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) p *= x[j];
    acc += p;
  }
  return acc;
}
inline mpq_class complete(const std::vector<mpq_class>& x, int r, int start = 0) {
  if (r == 0) return 1;
  mpq_class acc = 0;
  for (int j = start; j < static_cast<int>(x.size()); ++j) acc += x[j] * complete(x, r - 1, j);
  return acc;
}

// The group algebra Q S_d; permutations in one-line notation on 1..d, product
// (a b)(i) = a(b(i)).
using Perm = std::vector<int>;
using GroupElem = std::map<Perm, mpq_class>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}
inline Perm identity(int d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 1);
  return p;
}
inline Perm transposition(int d, int i, int j) {
  Perm p = identity(d);
  std::swap(p[i - 1], p[j - 1]);
  return p;
}
inline GroupElem gmul(const GroupElem& a, const GroupElem& b) {
  GroupElem c;
  for (const auto& [p, x] : a)
    for (const auto& [q, y] : b) c[compose(p, q)] += x * y;
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}
inline GroupElem gadd(GroupElem a, const GroupElem& b, const mpq_class& s = 1) {
  for (const auto& [p, y] : b) a[p] += s * y;
  for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
  return a;
}
// Jucys-Murphy element L_k = sum_{j<k} (j k).
inline GroupElem jucys_murphy(int d, int k) {
  GroupElem L;
  for (int j = 1; j < k; ++j) L[transposition(d, j, k)] += 1;
  return L;
}
inline GroupElem simple(int d, int r) { return {{transposition(d, r, r + 1), 1}}; }

// Conversions from library types (Q only).
inline Tq to_tq(const heis::LocalScalar& a) {
  Tq v;
  for (const auto& c : a.coeffs()) v.push_back(c.value());
  return v;
}
inline UPoly to_upoly(const heis::Poly& p) {
  UPoly v;
  for (const auto& c : p.coeffs()) v.push_back(to_tq(c));
  return v;
}

}  // namespace oracle
