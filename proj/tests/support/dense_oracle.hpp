#pragma once

// Naive dense GF(2) elimination and direct complex builders, kept apart from
// the library's packed/echelon code path so tests can cross-check it.

#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<int>>;

inline Dense zeros(std::size_t rows, std::size_t cols) { return Dense(rows, std::vector<int>(cols, 0)); }

inline std::size_t rank(Dense m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && m[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
      }
    }
    ++r;
  }
  return r;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Dense out = zeros(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (std::size_t j = 0; j < m; ++j) out[i][j] ^= b[t][j];
  return out;
}

inline bool is_zero(const Dense& a) {
  for (const auto& row : a)
    for (int v : row)
      if (v) return false;
  return true;
}

// dim H = n - 2 rank(d) for a square d with d^2 = 0.
inline std::size_t homology_rank(const Dense& d) { return d.size() - 2 * rank(d); }

struct Knot {
  std::vector<int> levels;
  std::vector<std::pair<int, int>> arrows;  // from -> to
};

inline std::vector<int> members(const Knot& k, bool (*keep)(int, int), int s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(k.levels.size()); ++i)
    if (keep(k.levels[i], s)) out.push_back(i);
  return out;
}

inline bool at_least(int level, int s) { return level >= s; }
inline bool exactly(int level, int s) { return level == s; }

// Complex spanned by `idx` with the arrows among them. With
// `level_preserving_only` only arrows inside one level are kept.
inline Dense sub_differential(const Knot& k, const std::vector<int>& idx, bool level_preserving_only = false) {
  Dense d = zeros(idx.size(), idx.size());
  for (auto [from, to] : k.arrows) {
    if (level_preserving_only && k.levels[from] != k.levels[to]) continue;
    int fi = -1, ti = -1;
    for (int p = 0; p < static_cast<int>(idx.size()); ++p) {
      if (idx[p] == from) fi = p;
      if (idx[p] == to) ti = p;
    }
    if (fi >= 0 && ti >= 0) d[ti][fi] ^= 1;
  }
  return d;
}

inline Dense full_differential(const Knot& k) {
  std::vector<int> all(k.levels.size());
  for (int i = 0; i < static_cast<int>(all.size()); ++i) all[i] = i;
  return sub_differential(k, all);
}

// X -> B <- Y with X = {level >= x_from}, Y = {level >= y_from}; the
// differential written out entry by entry.
inline Dense three_block(const Knot& k, int x_from, int y_from) {
  const auto xs = members(k, at_least, x_from);
  const auto ys = members(k, at_least, y_from);
  const std::size_t nx = xs.size(), nb = k.levels.size(), ny = ys.size();
  const std::size_t n = nx + nb + ny;
  Dense d = zeros(n, n);
  const Dense dx = sub_differential(k, xs), db = full_differential(k), dy = sub_differential(k, ys);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < nx; ++j) d[i][j] = dx[i][j];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) d[nx + i][nx + j] = db[i][j];
  for (std::size_t i = 0; i < ny; ++i)
    for (std::size_t j = 0; j < ny; ++j) d[nx + nb + i][nx + nb + j] = dy[i][j];
  for (std::size_t j = 0; j < nx; ++j) d[nx + static_cast<std::size_t>(xs[j])][j] ^= 1;
  for (std::size_t j = 0; j < ny; ++j) d[nx + static_cast<std::size_t>(ys[j])][nx + nb + j] ^= 1;
  return d;
}

inline Dense c1(const Knot& k, int s) { return three_block(k, s, -s); }
inline Dense c0(const Knot& k, int s) { return three_block(k, s + 1, -s); }
inline Dense surgery(const Knot& k, int n, int s) { return three_block(k, s - n + 1, -s); }

inline Dense graded_piece(const Knot& k, int s) { return sub_differential(k, members(k, exactly, s), true); }

// Cone of phi_s: C1(s) -> B{s} (x component at level s), built directly.
inline Dense phi_cone(const Knot& k, int s) {
  const Dense src = c1(k, s);
  const auto xs = members(k, at_least, s);
  const auto piece = members(k, exactly, s);
  const Dense tgt = graded_piece(k, s);
  const std::size_t na = src.size(), nb = tgt.size();
  Dense d = zeros(na + nb, na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) d[i][j] = src[i][j];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) d[na + i][na + j] = tgt[i][j];
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (std::size_t p = 0; p < piece.size(); ++p)
      if (xs[j] == piece[p]) d[na + p][j] ^= 1;
  return d;
}

}  // namespace oracle
