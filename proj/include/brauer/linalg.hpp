#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "brauer/field.hpp"

namespace brauer {

/// Sparse row: (column, value) pairs, strictly increasing columns, no zeros.
template <class K>
using SparseVec = std::vector<std::pair<int, K>>;

template <class K>
SparseVec<K> make_sparse(std::map<int, K> entries) {
  SparseVec<K> out;
  out.reserve(entries.size());
  for (auto& [c, v] : entries)
    if (!is_zero(v)) out.emplace_back(c, std::move(v));
  return out;
}

template <class K>
std::optional<K> sparse_at(const SparseVec<K>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != row.end() && it->first == col) return it->second;
  return std::nullopt;
}

/// Incrementally maintained reduced row echelon form.
///
/// The pivot of a row is its smallest column, so callers control pivot
/// preference through the column numbering. Rows are kept fully reduced at
/// all times: every stored row has leading coefficient 1 and no entry in
/// another row's pivot column.
template <class K>
class RowEchelon {
 public:
  /// Reduces `row` against the stored pivots. The result has no entries in
  /// pivot columns.
  SparseVec<K> reduce(const SparseVec<K>& row) const {
    std::map<int, K> acc;
    for (const auto& [c, v] : row) {
      auto p = pivot_of_.find(c);
      if (p == pivot_of_.end()) {
        acc[c] += v;
        continue;
      }
      for (const auto& [c2, v2] : rows_[p->second]) {
        if (c2 == c) continue;
        acc[c2] -= v * v2;
      }
    }
    return make_sparse(std::move(acc));
  }

  /// Adds `row` to the span. Returns true iff the rank increased.
  bool insert(const SparseVec<K>& row) {
    SparseVec<K> r = reduce(row);
    if (r.empty()) return false;
    const K lead = r.front().second;
    if (lead != K(1))
      for (auto& e : r) e.second /= lead;
    const int col = r.front().first;
    for (auto& other : rows_) {
      auto coef = sparse_at(other, col);
      if (!coef) continue;
      std::map<int, K> acc(other.begin(), other.end());
      for (const auto& [c, v] : r) acc[c] -= *coef * v;
      other = make_sparse(std::move(acc));
    }
    pivot_of_[col] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(const SparseVec<K>& row) const { return reduce(row).empty(); }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec<K>>& rows() const { return rows_; }
  bool is_pivot(int col) const { return pivot_of_.count(col) != 0; }

  /// Row whose pivot is `col`, if any.
  const SparseVec<K>* pivot_row(int col) const {
    auto it = pivot_of_.find(col);
    return it == pivot_of_.end() ? nullptr : &rows_[it->second];
  }

  const std::map<int, int>& pivots() const { return pivot_of_; }

 private:
  std::vector<SparseVec<K>> rows_;
  std::map<int, int> pivot_of_;
};

/// Basis of {x : A x = 0} for a matrix given by rows over `ncols` columns.
template <class K>
std::vector<SparseVec<K>> nullspace(const RowEchelon<K>& ech, int ncols) {
  std::vector<SparseVec<K>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (ech.is_pivot(f)) continue;
    std::map<int, K> v;
    v[f] = K(1);
    for (const auto& [pc, ri] : ech.pivots()) {
      auto coef = sparse_at(ech.rows()[ri], f);
      if (coef) v[pc] = -*coef;
    }
    basis.push_back(make_sparse(std::move(v)));
  }
  return basis;
}

/// One solution of A x = b, rows of A given with their right-hand sides.
/// Free variables are set to zero. Returns nullopt if inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const std::vector<std::pair<SparseVec<K>, K>>& system,
                                    int ncols) {
  RowEchelon<K> ech;
  const int rhs = ncols;
  for (const auto& [row, b] : system) {
    SparseVec<K> aug = row;
    if (!is_zero(b)) aug.emplace_back(rhs, b);
    ech.insert(aug);
  }
  if (ech.is_pivot(rhs)) return std::nullopt;
  std::vector<K> x(ncols, K(0));
  for (const auto& [pc, ri] : ech.pivots()) {
    auto v = sparse_at(ech.rows()[ri], rhs);
    if (v) x[pc] = *v;
  }
  return x;
}

/// Determinant of a square integer matrix, computed exactly.
inline long long integer_determinant(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det.get_num().get_si();
}

}  // namespace brauer
