#pragma once

// Shared fixtures: corpus loading and a dense path-enumeration oracle for
// quotient dimensions, written independently of the sparse engine.

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/graph.hpp"
#include "brauer/homotopy.hpp"

namespace testing_support {

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::filesystem::path data_dir() { return BRAUER_DATA_DIR; }

inline brauer::BrauerGraph corpus_graph(const std::string& name) {
  return brauer::parse_graph(read_file(data_dir() / "graphs" / (name + ".json")));
}

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& e : std::filesystem::directory_iterator(data_dir() / "graphs"))
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

// Dense oracle. Every path of length <= L is a column (no pruning of any
// kind, monomial relations included as ordinary rows), every multiple
// u*rho*v of length <= L is a row, columns are ordered longest first and
// the rank profile is taken by Gaussian elimination modulo a large prime.
// A path shorter than `keep` that is not a pivot column is a basis element.
struct DenseOracle {
  std::vector<std::vector<long long>> cartan;
  long long dim = 0;
};

inline DenseOracle dense_oracle(const brauer::Presentation& p, int L, int keep) {
  using brauer::Path;
  constexpr long long M = 1000000007LL;
  auto inv = [](long long a) {
    long long r = 1, e = M - 2;
    a %= M;
    while (e) {
      if (e & 1) r = r * a % M;
      a = a * a % M;
      e >>= 1;
    }
    return r;
  };
  const auto& q = p.quiver;
  const int n = q.vertex_count();

  std::vector<Path> paths;
  for (int v = 0; v < n; ++v) paths.push_back(brauer::trivial_path(v));
  for (std::size_t k = 0; k < paths.size(); ++k) {
    if (paths[k].length() == L) continue;
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
      if (q.arrows[a].source == paths[k].target) {
        Path e = paths[k];
        e.arrows.push_back(a);
        e.target = q.arrows[a].target;
        paths.push_back(e);
      }
  }
  std::stable_sort(paths.begin(), paths.end(),
                   [](const Path& a, const Path& b) { return a.length() > b.length(); });
  const std::size_t nc = paths.size();
  std::map<std::pair<int, std::vector<int>>, int> col;
  for (std::size_t i = 0; i < nc; ++i) col[{paths[i].source, paths[i].arrows}] = static_cast<int>(i);

  std::vector<std::vector<long long>> piv(nc);  // pivot column -> normalized row
  for (const auto& rel : p.relations)
    for (const auto& u : paths) {
      if (u.target != rel.source() || u.length() + rel.max_length() > L) continue;
      for (const auto& v : paths) {
        if (v.source != rel.target() || u.length() + rel.max_length() + v.length() > L) continue;
        std::vector<long long> row(nc, 0);
        for (const auto& t : rel.terms) {
          Path w = brauer::concat(brauer::concat(u, t.path), v);
          auto& x = row[col.at({w.source, w.arrows})];
          x = ((x + t.coef) % M + M) % M;
        }
        for (std::size_t c = 0; c < nc; ++c) {
          if (row[c] == 0) continue;
          if (piv[c].empty()) {
            long long f = inv(row[c]);
            for (std::size_t j = c; j < nc; ++j) row[j] = row[j] * f % M;
            piv[c] = std::move(row);
            break;
          }
          long long f = row[c];
          for (std::size_t j = c; j < nc; ++j) row[j] = ((row[j] - f * piv[c][j]) % M + M) % M;
        }
      }
    }

  DenseOracle out;
  out.cartan.assign(n, std::vector<long long>(n, 0));
  for (std::size_t c = 0; c < nc; ++c)
    if (piv[c].empty() && paths[c].length() < keep) {
      ++out.cartan[paths[c].source][paths[c].target];
      ++out.dim;
    }
  return out;
}

// Random bounded complexes: two-term complexes with random differentials,
// cones of random chain maps between those, shifts and direct sums.
template <class K>
class ComplexGenerator {
 public:
  ComplexGenerator(const brauer::QuotientAlgebra<K>& a, unsigned seed) : a_(a), rng_(seed) {}

  brauer::ProjComplex<K> two_term() {
    using namespace brauer;
    const int n = a_.vertex_count();
    std::uniform_int_distribution<int> count(1, 2), vert(0, n - 1), coin(0, 2), deg(-1, 1);
    std::vector<int> s(count(rng_)), t(count(rng_));
    for (auto& v : s) v = vert(rng_);
    for (auto& v : t) v = vert(rng_);
    ProjComplex<K> c(a_);
    const int d0 = deg(rng_);
    c.set_term(d0, s);
    c.set_term(d0 + 1, t);
    Matrix<K> m(static_cast<int>(t.size()), static_cast<int>(s.size()));
    for (int r = 0; r < m.rows; ++r)
      for (int col = 0; col < m.cols; ++col) m.at(r, col) = random_element(s[col], t[r]);
    c.set_d(d0, m);
    return c;
  }

  brauer::ProjComplex<K> next() {
    using namespace brauer;
    std::uniform_int_distribution<int> kind(0, 3), sh(-1, 1);
    switch (kind(rng_)) {
      case 0:
        return two_term();
      case 1:
        return direct_sum(two_term(), shift(two_term(), sh(rng_)));
      default: {
        auto x = two_term();
        auto y = two_term();
        HomSpace<K> h(x, y);
        RowEchelon<K> cons;
        for (const auto& row : h.chain_constraints()) cons.insert(row);
        auto basis = nullspace(cons, h.unknowns());
        std::uniform_int_distribution<int> c(-2, 2);
        std::map<int, K> acc;
        for (const auto& z : basis) {
          K coef(c(rng_));
          for (const auto& [i, v] : z) acc[i] += coef * v;
        }
        return mapping_cone(h.map_from(make_sparse(std::move(acc))));
      }
    }
  }

 private:
  brauer::SparseVec<K> random_element(int i, int j) {
    const auto& blk = a_.block(i, j);
    std::uniform_int_distribution<int> c(-2, 2);
    std::map<int, K> acc;
    for (int b : blk)
      if (c(rng_) != 0) acc[b] = K(c(rng_));
    return brauer::make_sparse(std::move(acc));
  }

  const brauer::QuotientAlgebra<K>& a_;
  std::mt19937 rng_;
};

/// S * C * S^T.
inline std::vector<std::vector<long long>> sandwich(const std::vector<std::vector<long long>>& s,
                                                   const std::vector<std::vector<long long>>& c) {
  const std::size_t m = s.size(), n = c.size();
  std::vector<std::vector<long long>> out(m, std::vector<long long>(m, 0));
  for (std::size_t z = 0; z < m; ++z)
    for (std::size_t w = 0; w < m; ++w)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[z][w] += s[z][i] * c[i][j] * s[w][j];
  return out;
}

}  // namespace testing_support
