#pragma once

// Exact finite-dimensional quotients KQ/J. Paths that contain a known zero
// monomial are never enumerated ("dead"); the remaining live paths up to a
// length bound are row-reduced against the relation multiples u·ρ·v with the
// largest path of each row as its pivot. Non-pivot live paths shorter than
// `cap` are the normal-form basis.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/field.hpp"
#include "brauer/linalg.hpp"
#include "brauer/path.hpp"
#include "brauer/presentation.hpp"

namespace brauer {

struct EngineOptions {
  int cap = -1;     // -1: default
  int margin = -1;  // -1: default
  bool check_stability = true;
};

inline int default_cap(const BrauerQuiver& q) {
  int total = 0;
  for (const auto& c : q.cycles) total += static_cast<int>(c.arrows.size());
  return 2 * total + 4;
}

inline int default_margin(const BrauerQuiver& q) {
  int longest = 0;
  for (const auto& c : q.cycles) longest = std::max(longest, static_cast<int>(c.arrows.size()));
  return longest + 2;
}

struct CartanMatrix {
  std::vector<std::string> order;
  std::vector<std::vector<long long>> matrix;

  long long dim() const {
    long long s = 0;
    for (const auto& row : matrix)
      for (long long x : row) s += x;
    return s;
  }
  long long det() const { return integer_determinant(matrix); }
  int size() const { return static_cast<int>(order.size()); }
  int index(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (order[i] == label) return i;
    throw DomainError("no Cartan row for '" + label + "'");
  }
  /// The same matrix with rows and columns in the given label order.
  CartanMatrix reordered(const std::vector<std::string>& labels) const {
    CartanMatrix out{labels, std::vector<std::vector<long long>>(labels.size(),
                                                                  std::vector<long long>(labels.size()))};
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < labels.size(); ++j)
        out.matrix[i][j] = matrix[index(labels[i])][index(labels[j])];
    return out;
  }
  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

template <class K>
class QuotientAlgebra {
 public:
  using Vec = SparseVec<K>;

  static QuotientAlgebra build(const Presentation& p, EngineOptions opt = {}) {
    check_presentation(p);
    QuotientAlgebra a;
    a.pres_ = p;
    a.cap_ = opt.cap >= 0 ? opt.cap : default_cap(p.quiver);
    a.margin_ = opt.margin >= 0 ? opt.margin : default_margin(p.quiver);
    if (a.cap_ < 2) throw NotStabilized("cap must be at least 2");

    Engine eng(p);
    Run main = eng.discover_zeros(a.cap_ + a.margin_);
    a.check_witness(main);
    a.assemble(main);

    if (opt.check_stability) {
      QuotientAlgebra wider;
      wider.pres_ = p;
      wider.cap_ = a.cap_;
      wider.margin_ = a.margin_ + 1;
      Run more = eng.run(a.cap_ + a.margin_ + 1);
      wider.check_witness(more);
      wider.assemble(more);
      if (wider.block_dims() != a.block_dims())
        throw NotStabilized("dimensions change when the margin grows from " +
                            std::to_string(a.margin_) + " to " + std::to_string(a.margin_ + 1));
    }
    return a;
  }

  const Presentation& presentation() const { return pres_; }
  const BrauerQuiver& quiver() const { return pres_.quiver; }
  int vertex_count() const { return pres_.quiver.vertex_count(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  int cap() const { return cap_; }
  int margin() const { return margin_; }

  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int b) const { return basis_[b]; }
  /// Global basis indices of e_i A e_j, ascending in path order.
  const std::vector<int>& block(int i, int j) const { return blocks_[i * vertex_count() + j]; }
  int block_dim(int i, int j) const { return static_cast<int>(block(i, j).size()); }
  std::vector<int> block_dims() const {
    std::vector<int> d;
    for (const auto& b : blocks_) d.push_back(static_cast<int>(b.size()));
    return d;
  }

  Vec unit(int b) const { return Vec{{b, K(1)}}; }
  Vec idempotent(int v) const { return unit(basis_index(trivial_path(v))); }
  Vec arrow(int a) const { return reduce(make_path(quiver(), {a})); }

  /// Coordinates of the class of `p`.
  Vec reduce(const Path& p) const {
    if (p.length() <= cap_) {
      auto it = table_.find(p);
      return it == table_.end() ? Vec{} : it->second;
    }
    Path head{p.source, -1, std::vector<int>(p.arrows.begin(), p.arrows.begin() + cap_)};
    head.target = quiver().arrows[head.arrows.back()].target;
    Vec x = reduce(head);
    for (std::size_t k = cap_; k < p.arrows.size() && !x.empty(); ++k)
      x = multiply_arrow(x, p.arrows[k]);
    return x;
  }

  /// Product of two basis elements; zero unless composable.
  const Vec& product(int b1, int b2) const { return products_[b1 * dim() + b2]; }

  Vec multiply(const Vec& x, const Vec& y) const {
    if (!x.empty() && !y.empty()) {
      auto t = homogeneous_target(x);
      auto s = homogeneous_source(y);
      if (t && s && *t != *s)
        throw CompositionMismatch("product of an element ending at " + quiver().labels[*t] +
                                  " with one starting at " + quiver().labels[*s]);
    }
    std::map<int, K> acc;
    for (const auto& [b1, c1] : x)
      for (const auto& [b2, c2] : y) {
        if (basis_[b1].target != basis_[b2].source) continue;
        for (const auto& [b, c] : product(b1, b2)) acc[b] += c1 * c2 * c;
      }
    return make_sparse(std::move(acc));
  }

  std::optional<int> homogeneous_target(const Vec& x) const {
    if (x.empty()) return std::nullopt;
    int t = basis_[x.front().first].target;
    for (const auto& [b, c] : x)
      if (basis_[b].target != t) return std::nullopt;
    return t;
  }
  std::optional<int> homogeneous_source(const Vec& x) const {
    if (x.empty()) return std::nullopt;
    int s = basis_[x.front().first].source;
    for (const auto& [b, c] : x)
      if (basis_[b].source != s) return std::nullopt;
    return s;
  }

  int basis_index(const Path& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InternalError("path is not a basis element");
    return it->second;
  }
  bool is_basis_path(const Path& p) const { return index_.count(p) != 0; }

  std::string element_to_string(const Vec& x) const {
    if (x.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : x) {
      std::string coef = scalar_to_string(c);
      bool neg = !coef.empty() && coef[0] == '-';
      if (neg) coef.erase(0, 1);
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (coef != "1") out += coef + " ";
      out += path_to_string(quiver(), basis_[b]);
      first = false;
    }
    return out;
  }

  /// One line per nonzero block: "i -> j: paths".
  std::string basis_dump() const {
    std::ostringstream os;
    const int n = vertex_count();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (block(i, j).empty()) continue;
        os << quiver().labels[i] << " -> " << quiver().labels[j] << ":";
        for (int b : block(i, j)) os << "  " << path_to_string(quiver(), basis_[b]);
        os << "\n";
      }
    return os.str();
  }

  /// Checks (xy)z = x(yz) on all composable basis triples.
  bool associative() const {
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < dim(); ++b) {
        if (basis_[a].target != basis_[b].source) continue;
        Vec ab = product(a, b);
        for (int c = 0; c < dim(); ++c) {
          if (basis_[b].target != basis_[c].source) continue;
          if (multiply(ab, unit(c)) != multiply(unit(a), product(b, c))) return false;
        }
      }
    return true;
  }

  /// Projection onto A / I for a two-sided ideal I spanned, blockwise, by
  /// the given vectors. The leading (largest) basis path of each reduced
  /// spanning vector leaves the basis.
  QuotientAlgebra quotient_by(const std::vector<Vec>& ideal) const {
    RowEchelon<K> ech;
    // Column order puts larger paths first.
    auto col = [&](int b) { return dim() - 1 - b; };
    for (const auto& v : ideal) {
      Vec row;
      for (const auto& [b, c] : v) row.emplace_back(col(b), c);
      std::sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
      ech.insert(row);
    }
    std::vector<int> new_index(dim(), -1);
    QuotientAlgebra out;
    out.pres_ = pres_;
    out.cap_ = cap_;
    out.margin_ = margin_;
    for (int b = 0; b < dim(); ++b)
      if (!ech.is_pivot(col(b))) {
        new_index[b] = static_cast<int>(out.basis_.size());
        out.basis_.push_back(basis_[b]);
      }
    auto project = [&](const Vec& x) {
      Vec row;
      for (const auto& [b, c] : x) row.emplace_back(col(b), c);
      std::sort(row.begin(), row.end(), [](auto& p, auto& q) { return p.first < q.first; });
      Vec red = ech.reduce(row);
      std::map<int, K> acc;
      for (const auto& [cl, c] : red) acc[new_index[dim() - 1 - cl]] += c;
      return make_sparse(std::move(acc));
    };
    for (const auto& [p, v] : table_) {
      Vec w = project(v);
      if (!w.empty()) out.table_.emplace(p, std::move(w));
    }
    out.finish_blocks();
    out.products_.assign(static_cast<std::size_t>(out.dim()) * out.dim(), Vec{});
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < dim(); ++b)
        if (new_index[a] >= 0 && new_index[b] >= 0)
          out.products_[new_index[a] * out.dim() + new_index[b]] = project(product(a, b));
    return out;
  }

 private:
  struct Run {
    std::vector<Path> live;  // ascending path order
    std::map<Path, int, PathLess> index;
    RowEchelon<K> ech;  // column of live[i] is live.size()-1-i
    int bound = 0;

    int col(int i) const { return static_cast<int>(live.size()) - 1 - i; }
    int live_index(int c) const { return static_cast<int>(live.size()) - 1 - c; }
  };

  class Engine {
   public:
    explicit Engine(const Presentation& p) : p_(p) {
      for (const auto& r : p.relations)
        if (r.monomial()) add_zero(r.terms.front().path.arrows);
    }

    /// Staged search for zero monomials at increasing length bounds; returns
    /// the run at `final_bound` once it yields no new zeros.
    Run discover_zeros(int final_bound) {
      int start = 0;
      for (const auto& r : p_.relations) start = std::max(start, r.max_length() + 1);
      int bound = std::min(start, final_bound);
      while (true) {
        Run r = run(bound);
        bool fresh = harvest(r);
        bool closed = true;
        for (const auto& path : r.live)
          if (path.length() == bound) closed = false;
        if (bound >= final_bound) {
          if (!fresh) return r;
          continue;
        }
        bound = closed && !fresh ? final_bound : std::min(bound + 2, final_bound);
      }
    }

    Run run(int bound) const {
      Run r;
      r.bound = bound;
      const auto& q = p_.quiver;
      std::vector<Path> frontier;
      for (int v = 0; v < q.vertex_count(); ++v) frontier.push_back(trivial_path(v));
      std::vector<Path> all = frontier;
      for (int len = 1; len <= bound && !frontier.empty(); ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier)
          for (int a : {q.beta_out[p.target], q.alpha_out[p.target]}) {
            if (a < 0) continue;
            Path e = p;
            e.arrows.push_back(a);
            e.target = q.arrows[a].target;
            if (ends_in_zero(e.arrows)) continue;
            next.push_back(std::move(e));
          }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
      }
      std::sort(all.begin(), all.end(), path_less);
      r.live = std::move(all);
      for (int i = 0; i < static_cast<int>(r.live.size()); ++i) r.index.emplace(r.live[i], i);

      std::vector<std::vector<int>> ending(q.vertex_count()), starting(q.vertex_count());
      for (int i = 0; i < static_cast<int>(r.live.size()); ++i) {
        ending[r.live[i].target].push_back(i);
        starting[r.live[i].source].push_back(i);
      }
      for (const auto& rel : p_.relations) {
        if (rel.monomial()) continue;
        const int ml = rel.max_length();
        for (int ui : ending[rel.source()]) {
          const Path& u = r.live[ui];
          if (u.length() + ml > bound) break;
          for (int vi : starting[rel.target()]) {
            const Path& v = r.live[vi];
            if (u.length() + ml + v.length() > bound) break;
            Vec row;
            for (const auto& t : rel.terms) {
              auto it = r.index.find(concat(concat(u, t.path), v));
              if (it != r.index.end()) row.emplace_back(r.col(it->second), K(t.coef));
            }
            if (row.empty()) continue;
            std::sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
            r.ech.insert(row);
          }
        }
      }
      return r;
    }

   private:
    void add_zero(const std::vector<int>& w) {
      zeros_.insert(w);
      max_zero_ = std::max(max_zero_, static_cast<int>(w.size()));
    }

    bool ends_in_zero(const std::vector<int>& w) const {
      const int n = static_cast<int>(w.size());
      for (int len = 1; len <= std::min(n, max_zero_); ++len)
        if (zeros_.count(std::vector<int>(w.end() - len, w.end()))) return true;
      return false;
    }

    // Records live paths whose pivot row is the path alone.
    bool harvest(const Run& r) {
      bool fresh = false;
      for (const auto& [c, ri] : r.ech.pivots()) {
        if (r.ech.rows()[ri].size() != 1) continue;
        const Path& p = r.live[r.live_index(c)];
        if (!zeros_.count(p.arrows)) {
          add_zero(p.arrows);
          fresh = true;
        }
      }
      return fresh;
    }

    const Presentation& p_;
    std::set<std::vector<int>> zeros_;
    int max_zero_ = 0;
  };

  void check_witness(const Run& r) const {
    for (int i = 0; i < static_cast<int>(r.live.size()); ++i) {
      const Path& p = r.live[i];
      if (p.length() != cap_) continue;
      const auto* row = r.ech.pivot_row(r.col(i));
      if (!row)
        throw NotStabilized("path " + path_to_string(quiver(), p) + " of length cap=" +
                            std::to_string(cap_) + " is not reducible; raise cap");
      for (const auto& [c, v] : *row)
        if (c != r.col(i) && r.live[r.live_index(c)].length() >= cap_)
          throw NotStabilized("path " + path_to_string(quiver(), p) +
                              " does not reduce to shorter classes; raise cap");
    }
  }

  void assemble(const Run& r) {
    basis_.clear();
    index_.clear();
    table_.clear();
    // Basis ordered by block, then path order.
    std::vector<int> chosen;
    for (int i = 0; i < static_cast<int>(r.live.size()); ++i)
      if (r.live[i].length() < cap_ && !r.ech.is_pivot(r.col(i))) chosen.push_back(i);
    std::stable_sort(chosen.begin(), chosen.end(), [&](int x, int y) {
      const Path &a = r.live[x], &b = r.live[y];
      if (a.source != b.source) return a.source < b.source;
      return a.target < b.target;
    });
    std::map<int, int> basis_of_live;
    for (int i : chosen) {
      basis_of_live[i] = static_cast<int>(basis_.size());
      basis_.push_back(r.live[i]);
    }
    for (int i = 0; i < static_cast<int>(r.live.size()); ++i) {
      const Path& p = r.live[i];
      if (p.length() > cap_) break;
      auto it = basis_of_live.find(i);
      if (it != basis_of_live.end()) {
        table_.emplace(p, Vec{{it->second, K(1)}});
        continue;
      }
      const auto* row = r.ech.pivot_row(r.col(i));
      if (!row) continue;  // length == cap non-pivot is excluded by the witness
      std::map<int, K> acc;
      for (const auto& [c, v] : *row) {
        if (c == r.col(i)) continue;
        auto b = basis_of_live.find(r.live_index(c));
        if (b == basis_of_live.end())
          throw InternalError("normal form of " + path_to_string(quiver(), p) +
                              " leaves the basis");
        acc[b->second] -= v;
      }
      Vec w = make_sparse(std::move(acc));
      if (!w.empty()) table_.emplace(p, std::move(w));
    }
    finish_blocks();
    compute_products();
  }

  void finish_blocks() {
    const int n = vertex_count();
    blocks_.assign(static_cast<std::size_t>(n) * n, {});
    index_.clear();
    for (int b = 0; b < dim(); ++b) {
      blocks_[basis_[b].source * n + basis_[b].target].push_back(b);
      index_.emplace(basis_[b], b);
    }
  }

  Vec multiply_arrow(const Vec& x, int a) const {
    std::map<int, K> acc;
    for (const auto& [b, c] : x) {
      const Path& p = basis_[b];
      if (p.target != quiver().arrows[a].source) continue;
      Path e = p;
      e.arrows.push_back(a);
      e.target = quiver().arrows[a].target;
      auto it = table_.find(e);
      if (it == table_.end()) continue;
      for (const auto& [b2, c2] : it->second) acc[b2] += c * c2;
    }
    return make_sparse(std::move(acc));
  }

  void compute_products() {
    products_.assign(static_cast<std::size_t>(dim()) * dim(), Vec{});
    for (int b1 = 0; b1 < dim(); ++b1)
      for (int b2 = 0; b2 < dim(); ++b2) {
        if (basis_[b1].target != basis_[b2].source) continue;
        Vec x = unit(b1);
        for (int a : basis_[b2].arrows) {
          x = multiply_arrow(x, a);
          if (x.empty()) break;
        }
        products_[b1 * dim() + b2] = std::move(x);
      }
  }

  Presentation pres_;
  int cap_ = 0;
  int margin_ = 0;
  std::vector<Path> basis_;
  std::map<Path, int, PathLess> index_;
  std::map<Path, Vec, PathLess> table_;  // live paths of length <= cap with nonzero class
  std::vector<std::vector<int>> blocks_;
  std::vector<Vec> products_;
};

template <class K>
CartanMatrix cartan(const QuotientAlgebra<K>& a) {
  const int n = a.vertex_count();
  CartanMatrix c{a.quiver().labels, std::vector<std::vector<long long>>(n, std::vector<long long>(n))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.matrix[i][j] = a.block_dim(i, j);
  return c;
}

/// Basis of the two-sided socle, block by block: elements killed by every
/// arrow on both sides.
template <class K>
std::vector<SparseVec<K>> socle_basis(const QuotientAlgebra<K>& a) {
  const auto& q = a.quiver();
  const int n = a.vertex_count();
  std::vector<SparseVec<K>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& blk = a.block(i, j);
      if (blk.empty()) continue;
      // One row per (arrow, side, output coordinate); columns are block positions.
      std::map<std::tuple<int, int, int>, std::map<int, K>> rows;
      for (int local = 0; local < static_cast<int>(blk.size()); ++local) {
        auto x = a.unit(blk[local]);
        for (int ar = 0; ar < static_cast<int>(q.arrows.size()); ++ar) {
          if (q.arrows[ar].source == j)
            for (const auto& [b, c] : a.multiply(x, a.arrow(ar))) rows[{ar, 0, b}][local] += c;
          if (q.arrows[ar].target == i)
            for (const auto& [b, c] : a.multiply(a.arrow(ar), x)) rows[{ar, 1, b}][local] += c;
        }
      }
      RowEchelon<K> ech;
      for (auto& [key, r] : rows) ech.insert(make_sparse(std::move(r)));
      for (const auto& v : nullspace(ech, static_cast<int>(blk.size()))) {
        SparseVec<K> g;
        for (const auto& [local, c] : v) g.emplace_back(blk[local], c);
        out.push_back(std::move(g));
      }
    }
  return out;
}

template <class K>
QuotientAlgebra<K> socle_quotient(const QuotientAlgebra<K>& a) {
  return a.quotient_by(socle_basis(a));
}

template <class K>
bool presentations_equal_on_basis(const QuotientAlgebra<K>& a, const QuotientAlgebra<K>& b) {
  if (!same_shape(a.quiver(), b.quiver()))
    throw QuiverMismatch("algebras are defined over different quivers");
  if (a.basis() != b.basis()) return false;
  for (int x = 0; x < a.dim(); ++x)
    for (int y = 0; y < a.dim(); ++y)
      if (a.product(x, y) != b.product(x, y)) return false;
  return true;
}

template <class K = Rational>
QuotientAlgebra<K> omega_algebra(const BrauerGraph& g, EngineOptions opt = {}) {
  return QuotientAlgebra<K>::build(omega_relations(build_quiver(g)), opt);
}

}  // namespace brauer
