#pragma once

// One-loop Brauer graphs: a finite connected graph with a clockwise cyclic
// order of edge incidences at each vertex, exactly one loop, and no other
// cycle. The loop's two incidences are adjacent at its vertex S.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "brauer/errors.hpp"
#include "json.hpp"

namespace brauer {

using EdgeId = std::string;

struct GraphVertex {
  std::string id;
  std::vector<EdgeId> cyclic;  // clockwise; rotations are equal
  bool implicit = false;       // synthesized leaf, omitted from the file format

  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

class BrauerGraph {
 public:
  struct Incidence {
    int vertex = -1;
    int position = -1;
  };

  /// Validates the vertex list, adds implicit leaves for edges listed only
  /// once and derives the loop, S, the cycle and the attached trees.
  static BrauerGraph from_vertices(std::vector<GraphVertex> vertices);

  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const EdgeId& loop_edge() const { return loop_; }
  int center() const { return center_; }
  const std::string& center_id() const { return vertices_[center_].id; }

  /// Cycle edges in β-order at S, starting with the loop.
  const std::vector<EdgeId>& cycle_edges() const { return cycle_; }

  /// Edges of the tree attached at the far end of a cycle edge, in
  /// depth-first clockwise order. Empty for the loop.
  const std::vector<EdgeId>& tree(const EdgeId& cycle_edge) const {
    static const std::vector<EdgeId> none;
    auto it = trees_.find(cycle_edge);
    return it == trees_.end() ? none : it->second;
  }

  /// Canonical edge order: cycle edges, then each tree in cycle order.
  const std::vector<EdgeId>& edges() const { return edges_; }
  int edge_index(const EdgeId& e) const;
  bool has_edge(const EdgeId& e) const { return index_.count(e) != 0; }

  const std::array<Incidence, 2>& incidences(const EdgeId& e) const {
    return incidences_.at(e);
  }
  /// The endpoint of `e` other than `vertex` (S for the loop).
  int other_end(const EdgeId& e, int vertex) const;

  /// For a tree edge: the cycle edge whose tree contains it; for a cycle
  /// edge: itself.
  const EdgeId& root_of(const EdgeId& e) const { return root_.at(e); }
  bool is_cycle_edge(const EdgeId& e) const { return root_.at(e) == e; }

  /// Shortest edge path i = z0, z1, ..., zr = z from the cycle edge of z's
  /// tree to z. For a cycle edge returns {z}.
  std::vector<EdgeId> tree_path(const EdgeId& z) const;

  /// Distance of a graph vertex from S in the tree obtained by deleting
  /// the loop.
  int depth(int vertex) const { return depth_[vertex]; }

  std::size_t edge_count() const { return edges_.size(); }
  std::size_t tree_edge_count() const { return edges_.size() - cycle_.size(); }
  bool is_loop_star() const { return tree_edge_count() == 0; }
  int vertex_index(const std::string& id) const;

  friend bool operator==(const BrauerGraph& a, const BrauerGraph& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<GraphVertex> vertices_;
  EdgeId loop_;
  int center_ = -1;
  std::vector<EdgeId> cycle_;
  std::map<EdgeId, std::vector<EdgeId>> trees_;
  std::vector<EdgeId> edges_;
  std::map<EdgeId, int> index_;
  std::map<EdgeId, std::array<Incidence, 2>> incidences_;
  std::map<EdgeId, EdgeId> parent_;  // tree edge -> edge entering its near vertex
  std::map<EdgeId, EdgeId> root_;
  std::vector<int> depth_;
};

/// Name of the first violated invariant, or nullopt when the vertex list
/// describes a valid one-loop Brauer graph. Leaves may be omitted.
inline std::optional<std::string> find_violation(const std::vector<GraphVertex>& vertices);

inline void validate(const BrauerGraph& g) {
  if (auto v = find_violation(g.vertices())) throw ValidationError(*v);
}

inline std::size_t edge_count(const BrauerGraph& g) { return g.edge_count(); }

inline BrauerGraph parse_graph(std::string_view text);
inline nlohmann::ordered_json graph_to_json(const BrauerGraph& g);
inline std::string serialize_graph(const BrauerGraph& g);

/// S:[1,1,2,...,n].
inline BrauerGraph loop_star(int n);

// ---------------------------------------------------------------------------

namespace detail {

inline std::string implicit_leaf_id(const EdgeId& e) { return "~" + e; }

}  // namespace detail

inline std::optional<std::string> find_violation(const std::vector<GraphVertex>& vertices) {
  if (vertices.empty()) return "graph has no vertices";
  std::set<std::string> ids;
  for (const auto& v : vertices) {
    if (v.id.empty()) return "vertex id must be non-empty";
    if (!ids.insert(v.id).second) return "duplicate vertex id '" + v.id + "'";
    if (v.cyclic.empty()) return "cyclic list of vertex '" + v.id + "' is empty";
    for (const auto& e : v.cyclic)
      if (e.empty()) return "edge label must be non-empty";
  }

  // Loops first: an edge listed twice at one vertex.
  std::map<EdgeId, int> total;
  std::vector<std::pair<int, EdgeId>> loops;
  for (int vi = 0; vi < static_cast<int>(vertices.size()); ++vi) {
    std::map<EdgeId, int> local;
    for (const auto& e : vertices[vi].cyclic) ++local[e];
    for (const auto& [e, c] : local) {
      total[e] += c;
      if (c > 2) return "edge '" + e + "' has more than two incidences";
      if (c == 2) loops.emplace_back(vi, e);
    }
  }
  if (loops.size() != 1) return "exactly one loop";
  for (const auto& [e, c] : total)
    if (c > 2) return "edge '" + e + "' has more than two incidences";

  const auto& [s, loop] = loops.front();
  const auto& sc = vertices[s].cyclic;
  const int m = static_cast<int>(sc.size());
  std::vector<int> pos;
  for (int k = 0; k < m; ++k)
    if (sc[k] == loop) pos.push_back(k);
  const bool adjacent = pos[1] == pos[0] + 1 || (pos[0] == 0 && pos[1] == m - 1);
  if (!adjacent) return "loop not its own direct successor";

  // Connectivity over explicit vertices plus one implicit leaf per
  // once-listed edge.
  std::map<EdgeId, std::vector<int>> ends;
  for (int vi = 0; vi < static_cast<int>(vertices.size()); ++vi)
    for (const auto& e : vertices[vi].cyclic) ends[e].push_back(vi);
  int vertex_count = static_cast<int>(vertices.size());
  for (auto& [e, vs] : ends)
    if (vs.size() == 1) vs.push_back(vertex_count++);
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& [e, vs] : ends) {
    adj[vs[0]].push_back(vs[1]);
    adj[vs[1]].push_back(vs[0]);
  }
  std::vector<bool> seen(vertex_count, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != vertex_count) return "not connected";
  if (static_cast<int>(ends.size()) != vertex_count)
    return "deleting the loop must leave a tree";
  return std::nullopt;
}

inline BrauerGraph BrauerGraph::from_vertices(std::vector<GraphVertex> vertices) {
  // Drop stale implicit leaves; they are re-synthesized below.
  std::erase_if(vertices, [](const GraphVertex& v) {
    return v.implicit && v.cyclic.size() == 1;
  });
  for (auto& v : vertices) v.implicit = false;
  if (auto violation = find_violation(vertices)) throw ValidationError(*violation);

  BrauerGraph g;
  std::map<EdgeId, int> count;
  for (const auto& v : vertices)
    for (const auto& e : v.cyclic) ++count[e];
  std::set<std::string> ids;
  for (const auto& v : vertices) ids.insert(v.id);
  for (const auto& [e, c] : count) {
    if (c != 1) continue;
    std::string id = detail::implicit_leaf_id(e);
    while (ids.count(id)) id = "~" + id;
    ids.insert(id);
    vertices.push_back(GraphVertex{id, {e}, true});
  }
  g.vertices_ = std::move(vertices);

  for (int vi = 0; vi < static_cast<int>(g.vertices_.size()); ++vi) {
    const auto& cyc = g.vertices_[vi].cyclic;
    for (int k = 0; k < static_cast<int>(cyc.size()); ++k) {
      auto& inc = g.incidences_[cyc[k]];
      if (inc[0].vertex < 0)
        inc[0] = {vi, k};
      else
        inc[1] = {vi, k};
    }
  }
  for (const auto& [e, inc] : g.incidences_)
    if (inc[0].vertex == inc[1].vertex) {
      g.loop_ = e;
      g.center_ = inc[0].vertex;
    }

  // Cycle order at S: loop, then the edges after the loop's second incidence.
  const auto& sc = g.vertices_[g.center_].cyclic;
  const int m = static_cast<int>(sc.size());
  int first = 0;
  for (int k = 0; k < m; ++k)
    if (sc[k] == g.loop_ && sc[(k + 1) % m] == g.loop_) {
      first = k;
      break;
    }
  g.cycle_.push_back(g.loop_);
  for (int k = 2; k < m; ++k) g.cycle_.push_back(sc[(first + k) % m]);

  g.depth_.assign(g.vertices_.size(), -1);
  g.depth_[g.center_] = 0;
  for (const auto& c : g.cycle_) g.root_[c] = c;
  g.edges_ = g.cycle_;
  for (std::size_t ci = 1; ci < g.cycle_.size(); ++ci) {
    const EdgeId& root = g.cycle_[ci];
    auto& tree = g.trees_[root];
    // Preorder walk: each edge is listed before its subtree, siblings in
    // clockwise order after the entering edge.
    auto walk = [&](auto&& self, int v, const EdgeId& entering) -> void {
      const auto& cyc = g.vertices_[v].cyclic;
      const int len = static_cast<int>(cyc.size());
      const int at =
          static_cast<int>(std::find(cyc.begin(), cyc.end(), entering) - cyc.begin());
      for (int k = 1; k < len; ++k) {
        const EdgeId e = cyc[(at + k) % len];
        const int w = g.other_end(e, v);
        g.parent_[e] = entering;
        g.root_[e] = root;
        g.depth_[w] = g.depth_[v] + 1;
        tree.push_back(e);
        self(self, w, e);
      }
    };
    const int far = g.other_end(root, g.center_);
    g.depth_[far] = 1;
    walk(walk, far, root);
    g.edges_.insert(g.edges_.end(), tree.begin(), tree.end());
  }
  for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) g.index_[g.edges_[i]] = i;
  return g;
}

inline int BrauerGraph::edge_index(const EdgeId& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw DomainError("unknown edge '" + e + "'");
  return it->second;
}

inline int BrauerGraph::vertex_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i)
    if (vertices_[i].id == id) return i;
  throw DomainError("unknown vertex '" + id + "'");
}

inline int BrauerGraph::other_end(const EdgeId& e, int vertex) const {
  const auto& inc = incidences_.at(e);
  return inc[0].vertex == vertex ? inc[1].vertex : inc[0].vertex;
}

inline std::vector<EdgeId> BrauerGraph::tree_path(const EdgeId& z) const {
  std::vector<EdgeId> path{z};
  EdgeId cur = z;
  while (root_.at(cur) != cur) {
    cur = parent_.at(cur);
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// --- file format -----------------------------------------------------------

inline BrauerGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw MalformedInput("expected an object with a \"vertices\" array");
  std::vector<GraphVertex> vertices;
  for (const auto& jv : doc["vertices"]) {
    if (!jv.is_object() || !jv.contains("id") || !jv.contains("cyclic") ||
        !jv["id"].is_string() || !jv["cyclic"].is_array())
      throw MalformedInput("each vertex needs a string \"id\" and a \"cyclic\" array");
    GraphVertex v;
    v.id = jv["id"].get<std::string>();
    for (const auto& je : jv["cyclic"]) {
      if (je.is_string())
        v.cyclic.push_back(je.get<std::string>());
      else if (je.is_number_integer())
        v.cyclic.push_back(std::to_string(je.get<long long>()));
      else
        throw MalformedInput("edge labels must be strings or integers");
    }
    vertices.push_back(std::move(v));
  }
  return BrauerGraph::from_vertices(std::move(vertices));
}

namespace detail {

/// Least rotation that keeps the loop's two incidences adjacent.
inline std::vector<EdgeId> canonical_rotation(const std::vector<EdgeId>& cyc) {
  const std::size_t m = cyc.size();
  std::optional<std::vector<EdgeId>> best;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<EdgeId> rot(cyc.begin() + k, cyc.end());
    rot.insert(rot.end(), cyc.begin(), cyc.begin() + k);
    if (m > 2 && rot.front() == rot.back()) continue;  // splits the loop pair
    if (!best || rot < *best) best = std::move(rot);
  }
  return *best;
}

}  // namespace detail

inline nlohmann::ordered_json graph_to_json(const BrauerGraph& g) {
  std::vector<const GraphVertex*> vs;
  for (const auto& v : g.vertices())
    if (!(v.implicit && v.cyclic.size() == 1)) vs.push_back(&v);
  std::sort(vs.begin(), vs.end(), [](auto* a, auto* b) { return a->id < b->id; });
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto* v : vs) {
    nlohmann::ordered_json jv;
    jv["id"] = v->id;
    jv["cyclic"] = detail::canonical_rotation(v->cyclic);
    arr.push_back(std::move(jv));
  }
  nlohmann::ordered_json doc;
  doc["vertices"] = std::move(arr);
  return doc;
}

inline std::string serialize_graph(const BrauerGraph& g) { return graph_to_json(g).dump(); }

inline BrauerGraph loop_star(int n) {
  if (n < 1) throw DomainError("loop_star needs n >= 1, got " + std::to_string(n));
  GraphVertex s{"S", {"1", "1"}, false};
  for (int i = 2; i <= n; ++i) s.cyclic.push_back(std::to_string(i));
  return BrauerGraph::from_vertices({s});
}

}  // namespace brauer
