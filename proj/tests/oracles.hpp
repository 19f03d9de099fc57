#pragma once

// Independent reference computations used only by the tests. Nothing here
// may call into the elimination, reduction or resolution code it checks.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "nakayama/laurent.hpp"
#include "nakayama/matrix.hpp"
#include "nakayama/rational.hpp"

namespace oracle {

/// Laplace expansion along the first row.
template <class E>
E cofactor_det(const nakayama::Matrix<E>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return E::one();
  if (n == 1) return m(0, 0);
  E det = E::zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    nakayama::Matrix<E> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const E term = m(0, j) * cofactor_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Sum of the entries of C^{-1} = adj(C)/det(C), with cofactors computed by
/// Laplace expansion. Requires det(C) != 0.
inline nakayama::Rational adjugate_inverse_sum(const nakayama::Matrix<nakayama::Rational>& m) {
  const std::size_t n = m.rows();
  const nakayama::Rational det = cofactor_det(m);
  nakayama::Rational sum;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const nakayama::Rational minor = cofactor_det(m.without({i}, {j}));
      sum += ((i + j) % 2 == 0) ? minor : -minor;
    }
  }
  return sum / det;
}

inline nakayama::Matrix<nakayama::Rational> int_matrix(std::size_t rows, std::size_t cols, const std::vector<long>& v) {
  std::vector<nakayama::Rational> e(v.begin(), v.end());
  return nakayama::Matrix<nakayama::Rational>(rows, cols, std::move(e));
}

/// Composition factors of the projective P_b read top to socle, straight
/// from the definition: S_b, S_{b+1}, ... (indices mod n, 1-based).
inline std::vector<int> projective_factors(const std::vector<int>& p, int b) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out;
  for (int k = 0; k < p[static_cast<std::size_t>(b - 1)]; ++k) out.push_back((b - 1 + k) % n + 1);
  return out;
}

/// Paths ending at a: the vertices c with a path c -> ... -> a of length k
/// surviving in P_c, listed from the socle upward. Its size is dim I_a.
inline std::vector<int> injective_factors(const std::vector<int>& p, int a) {
  const int n = static_cast<int>(p.size());
  std::vector<int> out{a};
  for (int k = 1;; ++k) {
    const int c = ((a - 1 - k) % n + n) % n + 1;
    if (p[static_cast<std::size_t>(c - 1)] <= k) break;
    out.push_back(c);
  }
  return out;
}

/// A graded uniserial module as its composition factors (vertex, degree)
/// listed from top to socle.
using FactorList = std::vector<std::pair<int, long>>;

/// Degree of the arrow leaving vertex a.
inline long arrow_degree(const std::vector<long>& d, int a) { return d[static_cast<std::size_t>(a - 1)]; }

/// P_b with its top in the given degree.
inline FactorList graded_projective(const std::vector<int>& p, const std::vector<long>& d, int b, long top_degree) {
  FactorList out;
  long deg = top_degree;
  for (int v : projective_factors(p, b)) {
    out.emplace_back(v, deg);
    deg += arrow_degree(d, v);
  }
  return out;
}

/// I_a with its socle in the given degree, listed top to socle.
inline FactorList graded_injective(const std::vector<int>& p, const std::vector<long>& d, int a, long socle_degree) {
  FactorList up;
  long deg = socle_degree;
  for (int v : injective_factors(p, a)) {
    up.emplace_back(v, deg);
    const int n = static_cast<int>(p.size());
    const int prev = (v + n - 2) % n + 1;
    deg -= arrow_degree(d, prev);
  }
  return FactorList(up.rbegin(), up.rend());
}

/// Kernel of the projective cover: the tail of P_top below M.
inline FactorList list_syzygy(const std::vector<int>& p, const std::vector<long>& d, const FactorList& M) {
  if (M.empty()) return {};
  const FactorList P = graded_projective(p, d, M.front().first, M.front().second);
  return FactorList(P.begin() + static_cast<std::ptrdiff_t>(M.size()), P.end());
}

/// Cokernel of the injective envelope: the head of I_socle above M.
inline FactorList list_cosyzygy(const std::vector<int>& p, const std::vector<long>& d, const FactorList& M) {
  if (M.empty()) return {};
  const FactorList I = graded_injective(p, d, M.back().first, M.back().second);
  return FactorList(I.begin(), I.end() - static_cast<std::ptrdiff_t>(M.size()));
}

/// Projective dimension of S_a by iterating list syzygies; -1 for infinity.
inline int list_proj_dim(const std::vector<int>& p, int a) {
  const std::vector<long> d(p.size(), 1);
  FactorList M{{a, 0}};
  std::vector<FactorList> seen;
  for (int i = 0;; ++i) {
    for (auto& f : M) f.second = 0;
    if (M.size() == static_cast<std::size_t>(p[static_cast<std::size_t>(M.front().first - 1)])) return i;
    for (const auto& s : seen) {
      if (s == M) return -1;
    }
    seen.push_back(M);
    M = list_syzygy(p, d, M);
  }
}

/// Injective dimension of S_a by iterating list cosyzygies; -1 for infinity.
inline int list_inj_dim(const std::vector<int>& p, int a) {
  const std::vector<long> d(p.size(), 1);
  FactorList M{{a, 0}};
  std::vector<FactorList> seen;
  for (int i = 0;; ++i) {
    for (auto& f : M) f.second = 0;
    if (M.size() == injective_factors(p, M.back().first).size()) return i;
    for (const auto& s : seen) {
      if (s == M) return -1;
    }
    seen.push_back(M);
    M = list_cosyzygy(p, d, M);
  }
}

/// First `count` shifts b_i of the minimal graded injective resolution of
/// S_a (in degree 0): I^i is the envelope of the i-th cosyzygy and its
/// socle sits in degree -b_i. Stops early when a cosyzygy vanishes.
inline std::vector<long> list_injective_shifts(const std::vector<int>& p, const std::vector<long>& d, int a,
                                               std::size_t count) {
  std::vector<long> out;
  FactorList M{{a, 0}};
  while (out.size() < count && !M.empty()) {
    out.push_back(-M.back().second);
    M = list_cosyzygy(p, d, M);
  }
  return out;
}

/// Dimension vector of a factor list.
inline std::vector<int> list_dimvec(const FactorList& M, int n) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  for (const auto& f : M) ++v[static_cast<std::size_t>(f.first - 1)];
  return v;
}

}  // namespace oracle
