#pragma once

// Bounded cochain complexes of projectives over a QuotientAlgebra.
//
// A map P(i) -> P(j) is an element of e_i A e_j; composing P(i) -> P(j) with
// P(j) -> P(k) multiplies the elements in that order. Matrices are indexed
// (row = target summand, column = source summand).

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/errors.hpp"

namespace brauer {

template <class K>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec<K>> entries;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

  SparseVec<K>& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const SparseVec<K>& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }
  bool zero() const {
    for (const auto& e : entries)
      if (!e.empty()) return false;
    return true;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

template <class K>
SparseVec<K> add(const SparseVec<K>& x, const SparseVec<K>& y,
                 const std::type_identity_t<K>& s = K(1)) {
  std::map<int, K> acc(x.begin(), x.end());
  for (const auto& [b, c] : y) acc[b] += s * c;
  return make_sparse(std::move(acc));
}

template <class K>
SparseVec<K> scale(SparseVec<K> x, const std::type_identity_t<K>& s) {
  if (is_zero(s)) return {};
  for (auto& e : x) e.second *= s;
  return x;
}

/// `a` then `b`: the matrix of the composite, rows of b by columns of a.
template <class K>
Matrix<K> then(const QuotientAlgebra<K>& alg, const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows != b.cols) throw InternalError("matrix composition shape mismatch");
  Matrix<K> out(b.rows, a.cols);
  for (int r = 0; r < b.rows; ++r)
    for (int c = 0; c < a.cols; ++c) {
      SparseVec<K> acc;
      for (int m = 0; m < a.rows; ++m) {
        const auto& x = a.at(m, c);
        const auto& y = b.at(r, m);
        if (x.empty() || y.empty()) continue;
        acc = add(acc, alg.multiply(x, y));
      }
      out.at(r, c) = std::move(acc);
    }
  return out;
}

template <class K>
class ProjComplex {
 public:
  ProjComplex() = default;
  explicit ProjComplex(const QuotientAlgebra<K>& a) : alg_(&a) {}

  static ProjComplex stalk(const QuotientAlgebra<K>& a, int vertex, int degree = 0) {
    ProjComplex c(a);
    c.terms_[degree] = {vertex};
    return c;
  }

  const QuotientAlgebra<K>& algebra() const { return *alg_; }
  bool has_algebra() const { return alg_ != nullptr; }

  /// Summand vertices in degree n (empty if zero).
  const std::vector<int>& term(int n) const {
    static const std::vector<int> none;
    auto it = terms_.find(n);
    return it == terms_.end() ? none : it->second;
  }
  /// Differential from degree n to n+1.
  Matrix<K> d(int n) const {
    auto it = diff_.find(n);
    if (it != diff_.end()) return it->second;
    return Matrix<K>(static_cast<int>(term(n + 1).size()), static_cast<int>(term(n).size()));
  }

  void set_term(int n, std::vector<int> vertices) {
    if (vertices.empty())
      terms_.erase(n);
    else
      terms_[n] = std::move(vertices);
  }
  void set_d(int n, Matrix<K> m) {
    if (m.rows != static_cast<int>(term(n + 1).size()) || m.cols != static_cast<int>(term(n).size()))
      throw InternalError("differential shape does not match the terms in degree " +
                          std::to_string(n));
    if (m.zero())
      diff_.erase(n);
    else
      diff_[n] = std::move(m);
  }

  const std::map<int, std::vector<int>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  int width() const { return max_degree() - min_degree(); }
  std::size_t summand_count() const {
    std::size_t s = 0;
    for (const auto& [n, t] : terms_) s += t.size();
    return s;
  }
  /// Number of copies of P(v) in degree n.
  int multiplicity(int n, int v) const {
    int m = 0;
    for (int x : term(n)) m += x == v;
    return m;
  }
  bool is_stalk_of(int vertex, int degree) const {
    return terms_.size() == 1 && term(degree) == std::vector<int>{vertex};
  }

  friend bool operator==(const ProjComplex& a, const ProjComplex& b) {
    return a.terms_ == b.terms_ && a.diff_ == b.diff_;
  }

 private:
  const QuotientAlgebra<K>* alg_ = nullptr;
  std::map<int, std::vector<int>> terms_;
  std::map<int, Matrix<K>> diff_;
};

template <class K>
void check_complex(const ProjComplex<K>& c) {
  const auto& a = c.algebra();
  for (const auto& [n, t] : c.terms()) {
    Matrix<K> dn = c.d(n);
    for (int r = 0; r < dn.rows; ++r)
      for (int col = 0; col < dn.cols; ++col) {
        const auto& x = dn.at(r, col);
        if (x.empty()) continue;
        auto s = a.homogeneous_source(x);
        auto e = a.homogeneous_target(x);
        if (!s || !e || *s != t[col] || *e != c.term(n + 1)[r])
          throw NotAComplex("entry (" + std::to_string(r) + "," + std::to_string(col) +
                            ") of d^" + std::to_string(n) + " is not a map between the given projectives");
      }
    if (c.term(n + 2).empty() || c.term(n + 1).empty()) continue;
    Matrix<K> dd = then(a, dn, c.d(n + 1));
    for (int r = 0; r < dd.rows; ++r)
      for (int col = 0; col < dd.cols; ++col)
        if (!dd.at(r, col).empty())
          throw NotAComplex("d^" + std::to_string(n + 1) + " d^" + std::to_string(n) +
                            " is nonzero at entry (" + std::to_string(r) + "," +
                            std::to_string(col) + "): " + a.element_to_string(dd.at(r, col)));
  }
}

/// (C[k])^n = C^{n+k}, differential multiplied by (-1)^k.
template <class K>
ProjComplex<K> shift(const ProjComplex<K>& c, int k) {
  ProjComplex<K> out(c.algebra());
  for (const auto& [n, t] : c.terms()) out.set_term(n - k, t);
  const K sign = k % 2 == 0 ? K(1) : K(-1);
  for (const auto& [n, t] : c.terms()) {
    Matrix<K> m = c.d(n);
    for (auto& e : m.entries) e = scale(e, sign);
    out.set_d(n - k, std::move(m));
  }
  return out;
}

template <class K>
ProjComplex<K> direct_sum(const ProjComplex<K>& x, const ProjComplex<K>& y) {
  ProjComplex<K> out(x.algebra());
  std::set<int> degrees;
  for (const auto& [n, t] : x.terms()) degrees.insert(n);
  for (const auto& [n, t] : y.terms()) degrees.insert(n);
  for (int n : degrees) {
    auto t = x.term(n);
    t.insert(t.end(), y.term(n).begin(), y.term(n).end());
    out.set_term(n, t);
  }
  for (int n : degrees) {
    Matrix<K> dx = x.d(n), dy = y.d(n);
    Matrix<K> m(dx.rows + dy.rows, dx.cols + dy.cols);
    for (int r = 0; r < dx.rows; ++r)
      for (int c = 0; c < dx.cols; ++c) m.at(r, c) = dx.at(r, c);
    for (int r = 0; r < dy.rows; ++r)
      for (int c = 0; c < dy.cols; ++c) m.at(dx.rows + r, dx.cols + c) = dy.at(r, c);
    out.set_d(n, std::move(m));
  }
  return out;
}

template <class K>
ProjComplex<K> direct_sum(const std::vector<ProjComplex<K>>& parts) {
  if (parts.empty()) throw InternalError("empty direct sum");
  ProjComplex<K> out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out = direct_sum(out, parts[k]);
  return out;
}

/// A degree-preserving map of complexes.
template <class K>
struct ChainMap {
  ProjComplex<K> source;
  ProjComplex<K> target;
  std::map<int, Matrix<K>> components;

  Matrix<K> at(int n) const {
    auto it = components.find(n);
    if (it != components.end()) return it->second;
    return Matrix<K>(static_cast<int>(target.term(n).size()), static_cast<int>(source.term(n).size()));
  }
};

template <class K>
ChainMap<K> zero_map(const ProjComplex<K>& s, const ProjComplex<K>& t) {
  return ChainMap<K>{s, t, {}};
}

template <class K>
ChainMap<K> identity_map(const ProjComplex<K>& c) {
  ChainMap<K> f{c, c, {}};
  const auto& a = c.algebra();
  for (const auto& [n, t] : c.terms()) {
    Matrix<K> m(static_cast<int>(t.size()), static_cast<int>(t.size()));
    for (int k = 0; k < static_cast<int>(t.size()); ++k) m.at(k, k) = a.idempotent(t[k]);
    f.components[n] = std::move(m);
  }
  return f;
}

/// True iff f commutes with the differentials.
template <class K>
bool is_chain_map(const ChainMap<K>& f) {
  const auto& a = f.source.algebra();
  std::set<int> degrees;
  for (const auto& [n, t] : f.source.terms()) degrees.insert(n);
  for (const auto& [n, t] : f.target.terms()) degrees.insert(n - 1);
  for (int n : degrees) {
    Matrix<K> lhs = then(a, f.at(n), f.target.d(n));
    Matrix<K> rhs = then(a, f.source.d(n), f.at(n + 1));
    for (std::size_t k = 0; k < lhs.entries.size(); ++k)
      if (add(lhs.entries[k], rhs.entries[k], K(-1)) != SparseVec<K>{}) return false;
  }
  return true;
}

/// `f` then `g`.
template <class K>
ChainMap<K> compose(const ChainMap<K>& f, const ChainMap<K>& g) {
  ChainMap<K> out{f.source, g.target, {}};
  const auto& a = f.source.algebra();
  for (const auto& [n, t] : f.source.terms()) {
    if (g.target.term(n).empty()) continue;
    Matrix<K> m = then(a, f.at(n), g.at(n));
    if (!m.zero()) out.components[n] = std::move(m);
  }
  return out;
}

template <class K>
ChainMap<K> linear_combination(const std::vector<std::pair<K, ChainMap<K>>>& terms) {
  ChainMap<K> out{terms.front().second.source, terms.front().second.target, {}};
  for (const auto& [s, f] : terms)
    for (const auto& [n, t] : out.source.terms()) {
      if (out.target.term(n).empty()) continue;
      Matrix<K> m = out.at(n);
      Matrix<K> fn = f.at(n);
      for (std::size_t k = 0; k < m.entries.size(); ++k) m.entries[k] = add(m.entries[k], fn.entries[k], s);
      out.components[n] = std::move(m);
    }
  return out;
}

/// cone^n = source^{n+1} (+) target^n, differential [[-d_src, 0], [f, d_tgt]].
template <class K>
ProjComplex<K> mapping_cone(const ChainMap<K>& f) {
  const auto& src = f.source;
  const auto& tgt = f.target;
  ProjComplex<K> out(src.algebra());
  std::set<int> degrees;
  for (const auto& [n, t] : src.terms()) degrees.insert(n - 1);
  for (const auto& [n, t] : tgt.terms()) degrees.insert(n);
  for (int n : degrees) {
    auto t = src.term(n + 1);
    t.insert(t.end(), tgt.term(n).begin(), tgt.term(n).end());
    out.set_term(n, t);
  }
  for (int n : degrees) {
    const int s1 = static_cast<int>(src.term(n + 1).size());  // source block of cone^n
    const int t1 = static_cast<int>(tgt.term(n).size());
    const int s2 = static_cast<int>(src.term(n + 2).size());  // blocks of cone^{n+1}
    const int t2 = static_cast<int>(tgt.term(n + 1).size());
    Matrix<K> m(s2 + t2, s1 + t1);
    Matrix<K> ds = src.d(n + 1), dt = tgt.d(n), fn = f.at(n + 1);
    for (int r = 0; r < s2; ++r)
      for (int c = 0; c < s1; ++c) m.at(r, c) = scale(ds.at(r, c), K(-1));
    for (int r = 0; r < t2; ++r) {
      for (int c = 0; c < s1; ++c) m.at(s2 + r, c) = fn.at(r, c);
      for (int c = 0; c < t1; ++c) m.at(s2 + r, s1 + c) = dt.at(r, c);
    }
    out.set_d(n, std::move(m));
  }
  return out;
}

/// Inverse of a unit of the local ring e_v A e_v.
template <class K>
SparseVec<K> local_inverse(const QuotientAlgebra<K>& a, int v, const SparseVec<K>& u) {
  const int e = a.basis_index(trivial_path(v));
  auto lambda = sparse_at(u, e);
  if (!lambda || is_zero(*lambda)) throw InternalError("element is not a unit");
  const K inv = K(1) / *lambda;
  SparseVec<K> r = add(u, a.idempotent(v), -*lambda);  // radical part
  SparseVec<K> step = scale(r, -inv);                    // -lambda^-1 r
  SparseVec<K> power = a.idempotent(v);
  SparseVec<K> sum = power;
  for (int k = 0; k <= a.dim(); ++k) {
    power = a.multiply(power, step);
    if (power.empty()) break;
    sum = add(sum, power);
  }
  return scale(sum, inv);
}

/// Removes contractible pairs P(v) --unit--> P(v) until every differential
/// entry lies in the radical.
template <class K>
ProjComplex<K> minimize(ProjComplex<K> c) {
  const auto& a = c.algebra();
  while (true) {
    bool found = false;
    int n = 0, ur = -1, uc = -1;
    for (const auto& [deg, t] : c.terms()) {
      Matrix<K> dn = c.d(deg);
      for (int r = 0; r < dn.rows && !found; ++r)
        for (int col = 0; col < dn.cols && !found; ++col) {
          const int v = t[col];
          if (c.term(deg + 1)[r] != v || dn.at(r, col).empty()) continue;
          auto lam = sparse_at(dn.at(r, col), a.basis_index(trivial_path(v)));
          if (lam && !is_zero(*lam)) {
            found = true;
            n = deg;
            ur = r;
            uc = col;
          }
        }
      if (found) break;
    }
    if (!found) return c;

    Matrix<K> dn = c.d(n);
    const int v = c.term(n)[uc];
    SparseVec<K> uinv = local_inverse(a, v, dn.at(ur, uc));
    std::vector<int> src = c.term(n), tgt = c.term(n + 1);
    std::vector<int> src2, tgt2;
    for (int k = 0; k < static_cast<int>(src.size()); ++k)
      if (k != uc) src2.push_back(src[k]);
    for (int k = 0; k < static_cast<int>(tgt.size()); ++k)
      if (k != ur) tgt2.push_back(tgt[k]);

    Matrix<K> prev = c.d(n - 1), next = c.d(n + 1);
    Matrix<K> m(static_cast<int>(tgt2.size()), static_cast<int>(src2.size()));
    for (int r = 0, r2 = 0; r < dn.rows; ++r) {
      if (r == ur) continue;
      for (int col = 0, c2 = 0; col < dn.cols; ++col) {
        if (col == uc) continue;
        SparseVec<K> x = dn.at(r, col);
        const auto& cx = dn.at(ur, col);  // X -> P'
        const auto& bx = dn.at(r, uc);    // P -> Y
        if (!cx.empty() && !bx.empty()) x = add(x, a.multiply(a.multiply(cx, uinv), bx), K(-1));
        m.at(r2, c2) = std::move(x);
        ++c2;
      }
      ++r2;
    }
    Matrix<K> prev2(static_cast<int>(src2.size()), prev.cols);
    for (int r = 0, r2 = 0; r < prev.rows; ++r) {
      if (r == uc) continue;
      for (int col = 0; col < prev.cols; ++col) prev2.at(r2, col) = prev.at(r, col);
      ++r2;
    }
    Matrix<K> next2(next.rows, static_cast<int>(tgt2.size()));
    for (int r = 0; r < next.rows; ++r)
      for (int col = 0, c2 = 0; col < next.cols; ++col) {
        if (col == ur) continue;
        next2.at(r, c2++) = next.at(r, col);
      }

    ProjComplex<K> out(a);
    for (const auto& [deg, t] : c.terms())
      if (deg != n && deg != n + 1) out.set_term(deg, t);
    out.set_term(n, src2);
    out.set_term(n + 1, tgt2);
    for (const auto& [deg, t] : c.terms()) {
      if (deg == n - 1 || deg == n || deg == n + 1) continue;
      out.set_d(deg, c.d(deg));
    }
    if (!out.term(n - 1).empty()) out.set_d(n - 1, prev2);
    if (!out.term(n).empty() && !out.term(n + 1).empty()) out.set_d(n, m);
    if (!out.term(n + 1).empty() && !out.term(n + 2).empty()) out.set_d(n + 1, next2);
    c = std::move(out);
  }
}

/// "deg r: P(i)^m (+) ..." per degree, then each nonzero differential.
template <class K>
std::string complex_to_string(const ProjComplex<K>& c) {
  const auto& a = c.algebra();
  const auto& labels = a.quiver().labels;
  std::ostringstream os;
  if (c.empty()) return "0\n";
  for (const auto& [n, t] : c.terms()) {
    os << "deg " << n << ":";
    std::map<int, int> mult;
    std::vector<int> order;
    for (int v : t)
      if (mult[v]++ == 0) order.push_back(v);
    bool first = true;
    for (int v : order) {
      os << (first ? " " : " ⊕ ") << "P(" << labels[v] << ")";
      if (mult[v] > 1) os << "^" << mult[v];
      first = false;
    }
    os << "\n";
  }
  for (const auto& [n, t] : c.terms()) {
    Matrix<K> m = c.d(n);
    if (m.zero()) continue;
    os << "d^" << n << ":\n";
    for (int r = 0; r < m.rows; ++r) {
      os << "  [";
      for (int col = 0; col < m.cols; ++col) os << (col ? ", " : "") << a.element_to_string(m.at(r, col));
      os << "]\n";
    }
  }
  return os.str();
}

/// Short form "P(2) -> P(3)" with degrees, used in reports.
template <class K>
std::string complex_summary(const ProjComplex<K>& c) {
  if (c.empty()) return "0";
  const auto& labels = c.algebra().quiver().labels;
  std::string out;
  for (const auto& [n, t] : c.terms()) {
    if (!out.empty()) out += " -> ";
    for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "+" : "") + ("P(" + labels[t[k]] + ")");
    out += "[" + std::to_string(-n) + "]";
  }
  return out;
}

}  // namespace brauer
