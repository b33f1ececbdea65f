#pragma once

// Brute-force reference implementations. They work on plain boolean
// matrices and never call into the library's algorithms, so agreement with
// the library is meaningful.

#include <cstdint>
#include <vector>

#include "topdiff/relation.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix to_matrix(const topdiff::Relation& r) {
  Matrix m(r.size(), std::vector<bool>(r.size(), false));
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) m[i][j] = r.holds(i, j);
  }
  return m;
}

inline Matrix to_matrix(const topdiff::AcyclicOrder& p) {
  return to_matrix(p.relation());
}

inline bool strict(const Matrix& m, std::size_t i, std::size_t j) {
  return m[i][j] && !m[j][i];
}

// Members of mask S that no other member strictly beats.
inline std::vector<bool> maximal(const Matrix& m, std::uint32_t s) {
  const std::size_t n = m.size();
  std::vector<bool> out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (!((s >> x) & 1U)) continue;
    bool beaten = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (((s >> y) & 1U) && strict(m, y, x)) beaten = true;
    }
    out[x] = !beaten;
  }
  return out;
}

inline std::vector<bool> maximum(const Matrix& m, std::uint32_t s) {
  const std::size_t n = m.size();
  std::vector<bool> out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (!((s >> x) & 1U)) continue;
    bool all = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (((s >> y) & 1U) && !m[x][y]) all = false;
    }
    out[x] = all;
  }
  return out;
}

// Sum over every menu of the weighted symmetric difference of choices.
inline double top_difference(const Matrix& p, const Matrix& q,
                             const std::vector<double>& atoms) {
  const std::size_t n = p.size();
  double total = 0.0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const auto a = maximal(p, s);
    const auto b = maximal(q, s);
    for (std::size_t x = 0; x < n; ++x) {
      if (a[x] != b[x]) total += atoms[x];
    }
  }
  return total;
}

inline std::uint64_t hamming(const Matrix& p, const Matrix& q) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) d += p[i][j] != q[i][j];
  }
  return d;
}

// Floyd-Warshall reachability, reflexive entries kept as given.
inline Matrix closure(Matrix m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m[i][k] && m[k][j]) m[i][j] = true;
      }
    }
  }
  return m;
}

inline bool transitive(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (m[i][j] && m[j][k] && !m[i][k]) return false;
  return true;
}

inline bool antisymmetric(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j && m[i][j] && m[j][i]) return false;
  return true;
}

// Strict part acyclic: no element reaches itself through strict steps.
inline bool acyclic(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix s(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = strict(m, i, j);
  s = closure(s);
  for (std::size_t i = 0; i < n; ++i)
    if (s[i][i]) return false;
  return true;
}

inline bool total(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!m[i][j] && !m[j][i]) return false;
  return true;
}

// Calls f on every reflexive relation on n elements.
template <typename F>
void for_each_reflexive(std::size_t n, F&& f) {
  const std::size_t slots = n * (n - 1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots); ++bits) {
    Matrix m(n, std::vector<bool>(n, false));
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) m[i][j] = (bits >> s++) & 1U;
      }
    }
    f(m);
  }
}

// Number of total preorders: sum over k of k! S(n,k).
inline std::uint64_t ordered_partitions(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> S(n + 1,
                                            std::vector<std::uint64_t>(n + 1, 0));
  S[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 1; k <= i; ++k) S[i][k] = k * S[i - 1][k] + S[i - 1][k - 1];
  std::uint64_t total = 0, fact = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    fact *= k;
    total += fact * S[n][k];
  }
  return total;
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace oracle
