#pragma once

// Hom spaces in the homotopy category K^b(proj A). A degree-0 map C -> D is
// encoded by its coordinates: for every degree n, every entry (r, c) of
// f^n and every basis element of the block e_{C^n_c} A e_{D^n_r}.

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "brauer/complex.hpp"

namespace brauer {

template <class K>
class HomSpace {
 public:
  using Vec = SparseVec<K>;

  HomSpace(const ProjComplex<K>& c, const ProjComplex<K>& d) : c_(c), d_(d), a_(c.algebra()) {
    for (const auto& [n, t] : c_.terms()) {
      const auto& u = d_.term(n);
      for (int r = 0; r < static_cast<int>(u.size()); ++r)
        for (int col = 0; col < static_cast<int>(t.size()); ++col)
          for (int b : a_.block(t[col], u[r])) {
            slots_.emplace(Key{n, r, col, b}, static_cast<int>(slot_keys_.size()));
            slot_keys_.push_back({n, r, col, b});
          }
    }
  }

  int unknowns() const { return static_cast<int>(slot_keys_.size()); }
  int degree_of(int slot) const { return std::get<0>(slot_keys_[slot]); }

  /// Coordinates of a degree-0 map given by its components.
  Vec coordinates(const ChainMap<K>& f) const {
    std::map<int, K> acc;
    for (const auto& [n, m] : f.components)
      for (int r = 0; r < m.rows; ++r)
        for (int col = 0; col < m.cols; ++col)
          for (const auto& [b, x] : m.at(r, col)) {
            auto it = slots_.find(Key{n, r, col, b});
            if (it == slots_.end()) throw InternalError("map component outside the Hom space");
            acc[it->second] += x;
          }
    return make_sparse(std::move(acc));
  }

  ChainMap<K> map_from(const Vec& x) const {
    ChainMap<K> f{c_, d_, {}};
    for (const auto& [s, v] : x) {
      const auto& [n, r, col, b] = slot_keys_[s];
      auto it = f.components.find(n);
      if (it == f.components.end())
        it = f.components.emplace(n, Matrix<K>(static_cast<int>(d_.term(n).size()),
                                               static_cast<int>(c_.term(n).size()))).first;
      it->second.at(r, col) = add(it->second.at(r, col), Vec{{b, v}});
    }
    return f;
  }

  /// Rows of the linear system whose solutions are the chain maps.
  std::vector<Vec> chain_constraints() const {
    // Constraint coordinates: (n, r in D^{n+1}, c in C^n, basis element).
    std::map<Key, std::map<int, K>> rows;
    for (int s = 0; s < unknowns(); ++s) {
      const auto& [n, r, col, b] = slot_keys_[s];
      const Vec x{{b, K(1)}};
      const auto& dnext = d_.term(n + 1);
      if (!dnext.empty()) {
        Matrix<K> dd = d_.d(n);
        for (int r2 = 0; r2 < static_cast<int>(dnext.size()); ++r2) {
          if (dd.at(r2, r).empty()) continue;
          for (const auto& [k, v] : a_.multiply(x, dd.at(r2, r))) rows[Key{n, r2, col, k}][s] += v;
        }
      }
      const auto& cprev = c_.term(n - 1);
      if (!cprev.empty()) {
        Matrix<K> dc = c_.d(n - 1);
        for (int c2 = 0; c2 < static_cast<int>(cprev.size()); ++c2) {
          if (dc.at(col, c2).empty()) continue;
          for (const auto& [k, v] : a_.multiply(dc.at(col, c2), x)) rows[Key{n - 1, r, c2, k}][s] -= v;
        }
      }
    }
    std::vector<Vec> out;
    for (auto& [key, row] : rows) {
      Vec v = make_sparse(std::move(row));
      if (!v.empty()) out.push_back(std::move(v));
    }
    return out;
  }

  /// Images of the elementary homotopies h^n : C^n -> D^{n-1}.
  std::vector<Vec> homotopy_images() const {
    std::vector<Vec> out;
    for (const auto& [n, t] : c_.terms()) {
      const auto& u = d_.term(n - 1);
      for (int r = 0; r < static_cast<int>(u.size()); ++r)
        for (int col = 0; col < static_cast<int>(t.size()); ++col)
          for (int b : a_.block(t[col], u[r])) {
            const Vec x{{b, K(1)}};
            std::map<int, K> acc;
            // h^n then d_D^{n-1} lands in f^n.
            Matrix<K> dd = d_.d(n - 1);
            for (int r2 = 0; r2 < dd.rows; ++r2) {
              if (dd.at(r2, r).empty()) continue;
              for (const auto& [k, v] : a_.multiply(x, dd.at(r2, r)))
                acc[slots_.at(Key{n, r2, col, k})] += v;
            }
            // d_C^{n-1} then h^n lands in f^{n-1}.
            Matrix<K> dc = c_.d(n - 1);
            for (int c2 = 0; c2 < dc.cols; ++c2) {
              if (dc.at(col, c2).empty()) continue;
              for (const auto& [k, v] : a_.multiply(dc.at(col, c2), x))
                acc[slots_.at(Key{n - 1, r, c2, k})] += v;
            }
            Vec img = make_sparse(std::move(acc));
            if (!img.empty()) out.push_back(std::move(img));
          }
    }
    return out;
  }

  RowEchelon<K> homotopy_echelon() const {
    RowEchelon<K> e;
    for (const auto& v : homotopy_images()) e.insert(v);
    return e;
  }

  const ProjComplex<K>& source() const { return c_; }
  const ProjComplex<K>& target() const { return d_; }

 private:
  using Key = std::tuple<int, int, int, int>;
  const ProjComplex<K>& c_;
  const ProjComplex<K>& d_;
  const QuotientAlgebra<K>& a_;
  std::map<Key, int> slots_;
  std::vector<Key> slot_keys_;
};

template <class K>
struct HomotopyHom {
  int dimension = 0;
  std::vector<ChainMap<K>> basis;  // representatives modulo null-homotopic maps
};

/// Hom(C, D[shift]) in the homotopy category.
template <class K>
HomotopyHom<K> homotopy_hom(const ProjComplex<K>& c, const ProjComplex<K>& d, int shift_by = 0,
                            bool with_basis = false) {
  ProjComplex<K> ds = shift(d, shift_by);
  HomSpace<K> h(c, ds);
  RowEchelon<K> cons;
  for (const auto& row : h.chain_constraints()) cons.insert(row);
  RowEchelon<K> htpy = h.homotopy_echelon();
  HomotopyHom<K> out;
  out.dimension = h.unknowns() - static_cast<int>(cons.rank()) - static_cast<int>(htpy.rank());
  if (with_basis)
    for (const auto& z : nullspace(cons, h.unknowns()))
      if (htpy.insert(z)) out.basis.push_back(h.map_from(z));
  return out;
}

template <class K>
bool is_null_homotopic(const ChainMap<K>& f) {
  HomSpace<K> h(f.source, f.target);
  return h.homotopy_echelon().contains(h.coordinates(f));
}

/// A chain map C -> D whose components in the given degrees are
/// prescribed, if one exists.
template <class K>
std::optional<ChainMap<K>> extend_chain_map(const ProjComplex<K>& c, const ProjComplex<K>& d,
                                            const std::map<int, Matrix<K>>& fixed) {
  HomSpace<K> h(c, d);
  const int n = h.unknowns();
  std::vector<std::pair<SparseVec<K>, K>> system;
  for (auto& row : h.chain_constraints()) system.emplace_back(std::move(row), K(0));
  ChainMap<K> partial{c, d, fixed};
  std::map<int, K> given;
  for (const auto& [s, v] : h.coordinates(partial)) given[s] = v;
  // Every slot of a fixed degree is pinned, zero where the prescription is.
  for (int s = 0; s < n; ++s) {
    if (!fixed.count(h.degree_of(s))) continue;
    auto it = given.find(s);
    system.emplace_back(SparseVec<K>{{s, K(1)}}, it == given.end() ? K(0) : it->second);
  }
  auto x = solve(system, n);
  if (!x) return std::nullopt;
  std::map<int, K> acc;
  for (int s = 0; s < n; ++s) acc[s] = (*x)[s];
  return h.map_from(make_sparse(std::move(acc)));
}

/// S[z][i] = sum_r (-1)^r (multiplicity of P(i) in degree r of summand z).
template <class K>
std::vector<std::vector<long long>> sign_matrix(const std::vector<ProjComplex<K>>& summands, int vertices) {
  std::vector<std::vector<long long>> s(summands.size(), std::vector<long long>(vertices, 0));
  for (std::size_t z = 0; z < summands.size(); ++z)
    for (const auto& [n, t] : summands[z].terms())
      for (int v : t) s[z][v] += (n % 2 == 0) ? 1 : -1;
  return s;
}

/// Happel's alternating sum: c~[z][z'] = sum_{r,s} (-1)^{r-s} dim Hom(Q_z^r, Q_z'^s).
template <class K>
CartanMatrix happel_cartan(const std::vector<ProjComplex<K>>& summands, const CartanMatrix& c,
                           std::vector<std::string> labels = {}) {
  const std::size_t m = summands.size();
  if (labels.empty())
    for (std::size_t z = 0; z < m; ++z) labels.push_back(std::to_string(z));
  CartanMatrix out{labels, std::vector<std::vector<long long>>(m, std::vector<long long>(m, 0))};
  for (std::size_t z = 0; z < m; ++z)
    for (std::size_t w = 0; w < m; ++w) {
      long long acc = 0;
      for (const auto& [r, tz] : summands[z].terms())
        for (const auto& [s, tw] : summands[w].terms()) {
          const long long sign = ((r - s) % 2 == 0) ? 1 : -1;
          for (int i : tz)
            for (int j : tw) acc += sign * c.matrix[i][j];
        }
      out.matrix[z][w] = acc;
    }
  return out;
}

}  // namespace brauer
