#pragma once

// Two-term and tree-shaped tilting complexes over Omega(T).
//
// shrink: Q(z) = P(z)[0] on the cycle, P(i) -> P(z1) -> ... -> P(z) along
// the tree path of a tree edge. End(Q) is Omega(n).
// enlarge at a cycle edge: Q'(s) = P(at) (+) P(2^k) -> P(s) for the
// alpha-successor s of `at`, stalks elsewhere. End(Q') is Omega(T') where
// T' moves s onto the cycle.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/homotopy.hpp"

namespace brauer {

enum class TiltKind { shrink, enlarge };

struct EnlargeData {
  EdgeId at;                     // cycle edge whose tree loses an edge
  EdgeId succ;                   // alpha-successor of `at`, moved onto the cycle
  EdgeId pred;                   // beta-predecessor of `at` on the cycle
  std::vector<EdgeId> beta_fan;  // 2^1 .. 2^k around the beta-cycle of succ
};

template <class K>
struct GenerationWitness {
  std::string description;  // "cone(Q(3) -> Q(2))"
  ChainMap<K> map;
  int vertex = -1;
  int degree = 0;
};

template <class K>
struct TiltingComplex {
  TiltKind kind = TiltKind::shrink;
  const QuotientAlgebra<K>* algebra = nullptr;
  BrauerGraph graph;
  std::vector<EdgeId> order;  // vertex order of End
  std::map<EdgeId, ProjComplex<K>> summands;
  Presentation end_presentation;  // expected presentation of End, on `order`
  std::vector<ChainMap<K>> generators;  // one per arrow of end_presentation
  std::vector<GenerationWitness<K>> witnesses;
  std::optional<EnlargeData> enlarge;
  std::optional<BrauerGraph> target_graph;

  std::vector<ProjComplex<K>> ordered() const {
    std::vector<ProjComplex<K>> out;
    for (const auto& z : order) out.push_back(summands.at(z));
    return out;
  }
  ProjComplex<K> total() const { return direct_sum(ordered()); }
  int width() const {
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [z, q] : summands) {
      if (q.empty()) continue;
      lo = first ? q.min_degree() : std::min(lo, q.min_degree());
      hi = first ? q.max_degree() : std::max(hi, q.max_degree());
      first = false;
    }
    return hi - lo;
  }
};

struct TiltCertificate {
  std::map<int, long long> hom_vanishing;  // shift -> sum of dim Hom(Q_z, Q_w[shift])
  std::vector<std::pair<std::string, std::string>> generation;  // cone, minimal form
  CartanMatrix end_cartan;
  long long det_source = 0;
  long long det_end = 0;
  int relations_checked = 0;
};

namespace detail {

template <class K>
Matrix<K> single(SparseVec<K> x) {
  Matrix<K> m(1, 1);
  m.at(0, 0) = std::move(x);
  return m;
}

template <class K>
SparseVec<K> word_element(const QuotientAlgebra<K>& a, const std::vector<int>& word) {
  if (word.empty()) throw InternalError("empty cycle word");
  return a.reduce(make_path(a.quiver(), word));
}

template <class K>
ChainMap<K> degree_zero_map(const ProjComplex<K>& c, const ProjComplex<K>& d, Matrix<K> m) {
  ChainMap<K> f{c, d, {}};
  if (!m.zero()) f.components[0] = std::move(m);
  if (!is_chain_map(f)) throw InternalError("degree-zero component is not a chain map");
  return f;
}

/// The chain map extending the identity of the common degree-0 term P(v).
template <class K>
std::optional<ChainMap<K>> identity_extension(const ProjComplex<K>& c, const ProjComplex<K>& d, int v) {
  const auto& a = c.algebra();
  return extend_chain_map(c, d, {{0, single(a.idempotent(v))}});
}

inline int alpha_successor(const BrauerQuiver& q, int v) {
  const int ar = q.alpha_out[v];
  return ar < 0 ? -1 : q.arrows[ar].target;
}

}  // namespace detail

// --- shrink ----------------------------------------------------------------

template <class K>
ProjComplex<K> shrink_summand(const QuotientAlgebra<K>& a, const BrauerGraph& g, const EdgeId& z) {
  const auto& q = a.quiver();
  const auto path = g.tree_path(z);
  ProjComplex<K> c(a);
  for (std::size_t j = 0; j < path.size(); ++j) c.set_term(static_cast<int>(j), {q.vertex(path[j])});
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    const int s = q.vertex(path[j]), t = q.vertex(path[j + 1]);
    const auto& blk = a.block(s, t);
    if (blk.size() != 1)
      throw NonUniqueHom("Hom(P(" + path[j] + "), P(" + path[j + 1] + ")) has dimension " +
                         std::to_string(blk.size()));
    c.set_d(static_cast<int>(j), detail::single(a.unit(blk[0])));
  }
  check_complex(c);
  return c;
}

template <class K>
TiltingComplex<K> shrink_complex(const QuotientAlgebra<K>& a, const BrauerGraph& g) {
  const auto& q = a.quiver();
  TiltingComplex<K> t;
  t.kind = TiltKind::shrink;
  t.algebra = &a;
  t.graph = g;
  for (const auto& z : g.edges()) t.summands.emplace(z, shrink_summand(a, g, z));

  // Within the star on T_i + {i}, order by how many identity extensions
  // leave each summand; consecutive summands must be joined by one.
  t.order.push_back(g.loop_edge());
  const auto& cyc = g.cycle_edges();
  for (std::size_t ci = 1; ci < cyc.size(); ++ci) {
    const EdgeId& i = cyc[ci];
    const int vi = q.vertex(i);
    std::vector<EdgeId> block = g.tree(i);
    std::map<EdgeId, int> out_degree;
    std::map<std::pair<EdgeId, EdgeId>, bool> joined;
    std::vector<EdgeId> members = block;
    members.push_back(i);
    for (const auto& x : members)
      for (const auto& y : members) {
        if (x == y) continue;
        bool ok = detail::identity_extension(t.summands.at(x), t.summands.at(y), vi).has_value();
        joined[{x, y}] = ok;
        if (ok) ++out_degree[x];
      }
    std::stable_sort(block.begin(), block.end(),
                     [&](const EdgeId& x, const EdgeId& y) { return out_degree[x] > out_degree[y]; });
    block.push_back(i);
    for (std::size_t k = 0; k + 1 < block.size(); ++k)
      if (!joined[{block[k], block[k + 1]}])
        throw InternalError("tree at " + i + " does not form a star of summands");
    t.order.insert(t.order.end(), block.begin(), block.end());
  }

  // Generators of End(Q) against Omega(n) on vertices 1..n = order.
  const int n = static_cast<int>(t.order.size());
  t.end_presentation = omega_n_presentation(n);
  const auto& eq = t.end_presentation.quiver;
  for (const auto& ar : eq.arrows) {
    const EdgeId& x = t.order[ar.source];
    const EdgeId& y = t.order[ar.target];
    const auto& qx = t.summands.at(x);
    const auto& qy = t.summands.at(y);
    if (ar.camp == Camp::alpha) {
      t.generators.push_back(detail::degree_zero_map(qx, qy, detail::single(a.arrow(q.loop_arrow))));
    } else if (g.is_cycle_edge(x)) {
      const int b = q.beta_out[q.vertex(x)];
      if (b < 0) throw InternalError("no beta arrow at " + x);
      t.generators.push_back(detail::degree_zero_map(qx, qy, detail::single(a.arrow(b))));
    } else {
      auto f = detail::identity_extension(qx, qy, q.vertex(g.root_of(x)));
      if (!f) throw InternalError("no identity extension Q(" + x + ") -> Q(" + y + ")");
      t.generators.push_back(std::move(*f));
    }
  }

  // Q(z_j) -> Q(z_{j-1}), the identity where both live, has cone P(z_j)
  // in degree j-1.
  for (const auto& z : g.edges()) {
    if (g.is_cycle_edge(z)) continue;
    const auto path = g.tree_path(z);
    const int r = static_cast<int>(path.size()) - 1;
    const auto& src = t.summands.at(z);
    const auto& tgt = t.summands.at(path[r - 1]);
    ChainMap<K> f{src, tgt, {}};
    for (int j = 0; j < r; ++j) f.components[j] = detail::single(a.idempotent(q.vertex(path[j])));
    t.witnesses.push_back({"cone(Q(" + z + ") -> Q(" + path[r - 1] + "))", std::move(f), q.vertex(z), r - 1});
  }
  return t;
}

// --- enlarge ---------------------------------------------------------------

inline EnlargeData enlarge_data(const BrauerGraph& g, const EdgeId& at) {
  if (!g.has_edge(at)) throw DomainError("unknown edge '" + at + "'");
  if (!g.is_cycle_edge(at) || at == g.loop_edge())
    throw DomainError("'" + at + "' is not a non-loop cycle edge");
  if (g.tree(at).empty()) throw EmptyTree("no tree is attached at " + at);
  const auto q = build_quiver(g);
  const int v = q.vertex(at);
  EnlargeData d;
  d.at = at;
  d.succ = q.labels[detail::alpha_successor(q, v)];
  d.pred = q.labels[q.arrows[q.beta_in[v]].source];
  const int s = q.vertex(d.succ);
  const auto& bc = q.cycle_of(s, Camp::beta);
  if (!bc.trivial())
    for (int cur = q.arrows[q.beta_out[s]].target; cur != s; cur = q.arrows[q.beta_out[cur]].target)
      d.beta_fan.push_back(q.labels[cur]);
  return d;
}

/// T': s moves onto the cycle between pred and `at`; its alpha-cycle
/// becomes s, 2^k and the old alpha-cycle of 2^k.
inline BrauerGraph enlarge_graph_move(const BrauerGraph& g, const EdgeId& at) {
  const EnlargeData d = enlarge_data(g, at);
  const EdgeId& s = d.succ;
  auto vs = g.vertices();
  auto erase = [](std::vector<EdgeId>& cyc, const EdgeId& e) {
    auto it = std::find(cyc.begin(), cyc.end(), e);
    if (it == cyc.end()) throw InternalError("edge " + e + " missing from a cyclic order");
    cyc.erase(it);
  };
  auto insert_before = [](std::vector<EdgeId>& cyc, const EdgeId& anchor, const EdgeId& e) {
    auto it = std::find(cyc.begin(), cyc.end(), anchor);
    if (it == cyc.end()) throw InternalError("edge " + anchor + " missing from a cyclic order");
    cyc.insert(it, e);
  };
  const int centre = g.center();
  const int v = g.other_end(at, centre);
  const int w = g.other_end(s, v);
  insert_before(vs[centre].cyclic, at, s);
  erase(vs[v].cyclic, s);
  if (!d.beta_fan.empty()) {
    const EdgeId& last = d.beta_fan.back();
    const int x = g.other_end(last, w);
    erase(vs[w].cyclic, s);
    insert_before(vs[x].cyclic, last, s);
    if (vs[x].implicit) {
      // A synthesized leaf that stops being a leaf gets an ordinary name.
      std::set<std::string> ids;
      for (const auto& gv : vs) ids.insert(gv.id);
      std::string id = "v" + last;
      while (ids.count(id)) id += "'";
      vs[x].id = id;
      vs[x].implicit = false;
    }
  }
  return BrauerGraph::from_vertices(std::move(vs));
}

template <class K>
TiltingComplex<K> enlarge_complex(const QuotientAlgebra<K>& a, const BrauerGraph& g, const EdgeId& at) {
  const auto& q = a.quiver();
  TiltingComplex<K> t;
  t.kind = TiltKind::enlarge;
  t.algebra = &a;
  t.graph = g;
  t.enlarge = enlarge_data(g, at);
  const EnlargeData& e = *t.enlarge;
  t.target_graph = enlarge_graph_move(g, at);
  const BrauerGraph& tg = *t.target_graph;

  const int v_at = q.vertex(e.at), v_s = q.vertex(e.succ);
  const bool fan = !e.beta_fan.empty();
  const int v_last = fan ? q.vertex(e.beta_fan.back()) : -1;

  ProjComplex<K> qs(a);
  std::vector<int> head{v_at};
  if (fan) head.push_back(v_last);
  qs.set_term(0, head);
  qs.set_term(1, {v_s});
  Matrix<K> d0(1, static_cast<int>(head.size()));
  d0.at(0, 0) = a.arrow(q.alpha_out[v_at]);
  if (fan) d0.at(0, 1) = a.arrow(q.beta_out[v_last]);
  qs.set_d(0, d0);
  check_complex(qs);
  for (const auto& z : g.edges())
    t.summands.emplace(z, z == e.succ ? qs : ProjComplex<K>::stalk(a, q.vertex(z)));

  t.order = tg.edges();
  t.end_presentation = omega_relations(build_quiver(tg));
  const auto& nq = t.end_presentation.quiver;
  const int width_s = static_cast<int>(head.size());

  // Degree-0 maps into or out of Q'(s): rows/columns follow `head`.
  auto into_s = [&](int slot, SparseVec<K> x) {
    Matrix<K> m(width_s, 1);
    m.at(slot, 0) = std::move(x);
    return m;
  };
  auto out_of_s = [&](int slot, SparseVec<K> x) {
    Matrix<K> m(1, width_s);
    m.at(0, slot) = std::move(x);
    return m;
  };
  for (const auto& ar : nq.arrows) {
    const EdgeId& x = nq.labels[ar.source];
    const EdgeId& y = nq.labels[ar.target];
    const int vx = q.vertex(x), vy = q.vertex(y);
    const auto& qx = t.summands.at(x);
    const auto& qy = t.summands.at(y);
    Matrix<K> m;
    if (ar.camp == Camp::beta && y == e.succ) {
      m = into_s(0, a.arrow(q.beta_out[vx]));  // (beta_pred, 0)
    } else if (ar.camp == Camp::beta && x == e.succ) {
      m = out_of_s(0, a.idempotent(v_at));  // (e_at, 0)
    } else if (ar.camp == Camp::alpha && x == e.succ) {
      m = out_of_s(1, a.idempotent(v_last));  // projection onto P(2^k)
    } else if (ar.camp == Camp::alpha && y == e.succ) {
      if (vx == v_last)
        m = into_s(1, detail::word_element(a, cycle_at(q, v_last, Camp::beta)));  // (0, B_{2^k})
      else
        m = into_s(1, a.arrow(q.alpha_out[vx]));  // (0, alpha_last)
    } else if (ar.camp == Camp::alpha && x == e.at) {
      m = detail::single(detail::word_element(a, {q.alpha_out[v_at], q.alpha_out[v_s]}));
    } else if (ar.camp == Camp::beta && vx == v_last) {
      m = detail::single(detail::word_element(a, {q.beta_out[v_last], q.beta_out[v_s]}));
    } else {
      const int old = q.out_arrow(vx, ar.camp);
      if (old < 0 || q.arrows[old].target != vy)
        throw InternalError("no arrow " + ar.name + " to reuse for " + x + " -> " + y);
      m = detail::single(a.arrow(old));
    }
    t.generators.push_back(detail::degree_zero_map(qx, qy, std::move(m)));
  }

  ProjComplex<K> heads(a);
  heads.set_term(0, head);
  ChainMap<K> f{qs, heads, {}};
  Matrix<K> id(width_s, width_s);
  for (int k = 0; k < width_s; ++k) id.at(k, k) = a.idempotent(head[k]);
  f.components[0] = id;
  std::string hd = "P(" + e.at + ")";
  if (fan) hd += "+P(" + e.beta_fan.back() + ")";
  t.witnesses.push_back({"cone(Q(" + e.succ + ") -> " + hd + ")", std::move(f), v_s, 0});
  return t;
}

// --- certificates ----------------------------------------------------------

template <class K>
CartanMatrix end_cartan(const TiltingComplex<K>& t) {
  return happel_cartan(t.ordered(), cartan(*t.algebra), t.order);
}

/// Each generator is a chain map that is not null-homotopic and every
/// relation of the expected presentation holds up to homotopy. Returns the
/// number of relations checked.
template <class K>
int verify_end_generators(const TiltingComplex<K>& t) {
  const auto& pq = t.end_presentation.quiver;
  if (t.generators.size() != pq.arrows.size())
    throw RelationFailure("generator count differs from the arrow count");
  for (std::size_t k = 0; k < t.generators.size(); ++k) {
    if (!is_chain_map(t.generators[k])) throw RelationFailure(pq.arrows[k].name + " is not a chain map");
    if (is_null_homotopic(t.generators[k])) throw RelationFailure(pq.arrows[k].name + " is null-homotopic");
  }
  int checked = 0;
  for (const auto& rel : t.end_presentation.relations) {
    std::vector<std::pair<K, ChainMap<K>>> terms;
    for (const auto& term : rel.terms) {
      ChainMap<K> f = t.generators[term.path.arrows.front()];
      for (std::size_t k = 1; k < term.path.arrows.size(); ++k)
        f = compose(f, t.generators[term.path.arrows[k]]);
      terms.emplace_back(K(term.coef), std::move(f));
    }
    if (!is_null_homotopic(linear_combination(terms)))
      throw RelationFailure("relation " + relation_to_string(pq, rel) + " fails in End");
    ++checked;
  }
  return checked;
}

/// Hom vanishing, generation, the End Cartan matrix against direct Hom
/// dimensions and the generator relations. Throws CertificateFailure.
template <class K>
TiltCertificate check_tilting(const TiltingComplex<K>& t) {
  const auto& a = *t.algebra;
  TiltCertificate cert;
  const auto parts = t.ordered();
  const int w = t.width();
  for (int r = -(w + 1); r <= w + 1; ++r) {
    if (r == 0) continue;
    long long total = 0;
    for (const auto& x : parts)
      for (const auto& y : parts) total += homotopy_hom(x, y, r).dimension;
    cert.hom_vanishing[r] = total;
    if (total != 0) throw CertificateFailure("Hom(Q, Q[" + std::to_string(r) + "]) is nonzero");
  }

  std::set<int> reached;
  for (const auto& [z, c] : t.summands)
    for (int v = 0; v < a.vertex_count(); ++v)
      if (c.is_stalk_of(v, c.min_degree())) reached.insert(v);
  for (const auto& wit : t.witnesses) {
    if (!is_chain_map(wit.map)) throw CertificateFailure(wit.description + ": not a chain map");
    auto m = minimize(mapping_cone(wit.map));
    cert.generation.emplace_back(wit.description, complex_summary(m));
    if (!m.is_stalk_of(wit.vertex, wit.degree))
      throw CertificateFailure(wit.description + " minimizes to " + complex_summary(m));
    reached.insert(wit.vertex);
  }
  if (static_cast<int>(reached.size()) != a.vertex_count())
    throw CertificateFailure("summands and cones do not reach every indecomposable projective");

  cert.end_cartan = end_cartan(t);
  for (std::size_t z = 0; z < parts.size(); ++z)
    for (std::size_t y = 0; y < parts.size(); ++y)
      if (homotopy_hom(parts[z], parts[y], 0).dimension != cert.end_cartan.matrix[z][y])
        throw CertificateFailure("Hom(Q(" + t.order[z] + "), Q(" + t.order[y] +
                                 ")) differs from the alternating sum");
  cert.det_source = cartan(a).det();
  cert.det_end = cert.end_cartan.det();
  if (cert.det_source != cert.det_end && cert.det_source != -cert.det_end)
    throw CertificateFailure("Cartan determinants differ");
  try {
    cert.relations_checked = verify_end_generators(t);
  } catch (const RelationFailure& err) {
    throw CertificateFailure(err.what());
  }
  return cert;
}

}  // namespace brauer
