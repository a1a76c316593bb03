#pragma once

// Brauer quiver of a one-loop Brauer graph: one vertex per edge, one arrow
// per step between consecutive incidences at a graph vertex. The cycle at S
// splits into the loop arrow (α-camp) and the exceptional β-cycle.

#include <deque>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/graph.hpp"

namespace brauer {

enum class Camp { alpha, beta };

inline const char* camp_name(Camp c) { return c == Camp::alpha ? "alpha" : "beta"; }
inline Camp other_camp(Camp c) { return c == Camp::alpha ? Camp::beta : Camp::alpha; }

struct Arrow {
  std::string name;
  int source = -1;
  int target = -1;
  Camp camp = Camp::alpha;
};

struct QCycle {
  std::vector<int> arrows;  // empty for a trivial cycle
  std::vector<int> vertices;
  std::string graph_vertex;
  Camp camp = Camp::alpha;
  bool exceptional = false;

  bool trivial() const { return arrows.empty(); }
};

/// Quiver vertices are indexed by the graph's canonical edge order. Arrows
/// are indexed in path-order rank: β-arrows by source, then α-arrows by
/// source.
struct BrauerQuiver {
  std::vector<std::string> labels;
  std::vector<Arrow> arrows;
  std::vector<QCycle> cycles;
  int exceptional_cycle = -1;
  int loop_arrow = -1;
  std::vector<int> alpha_out, beta_out, alpha_in, beta_in;  // -1 if absent
  std::vector<int> alpha_cycle, beta_cycle;                 // per vertex, into `cycles`

  int vertex_count() const { return static_cast<int>(labels.size()); }
  int vertex(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i)
      if (labels[i] == label) return i;
    throw DomainError("unknown quiver vertex '" + label + "'");
  }
  int out_arrow(int v, Camp c) const { return c == Camp::alpha ? alpha_out[v] : beta_out[v]; }
  int in_arrow(int v, Camp c) const { return c == Camp::alpha ? alpha_in[v] : beta_in[v]; }
  const QCycle& cycle_of(int v, Camp c) const {
    return cycles[c == Camp::alpha ? alpha_cycle[v] : beta_cycle[v]];
  }
  /// Arrows from `s` to `t`, in index order.
  std::vector<int> arrows_between(int s, int t) const {
    std::vector<int> out;
    for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
      if (arrows[a].source == s && arrows[a].target == t) out.push_back(a);
    return out;
  }

  friend bool same_shape(const BrauerQuiver& a, const BrauerQuiver& b) {
    if (a.labels != b.labels || a.arrows.size() != b.arrows.size()) return false;
    for (std::size_t i = 0; i < a.arrows.size(); ++i) {
      const auto &x = a.arrows[i], &y = b.arrows[i];
      if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
  }
};

inline std::string arrow_name(Camp c, const std::string& source_label) {
  return std::string(c == Camp::alpha ? "a_" : "b_") + source_label;
}

inline BrauerQuiver build_quiver(const BrauerGraph& g) {
  BrauerQuiver q;
  q.labels = g.edges();
  const int n = q.vertex_count();

  struct RawCycle {
    std::vector<std::pair<int, int>> steps;  // (source, target) vertex indices
    std::string graph_vertex;
    bool at_center_loop = false;
    bool at_center_beta = false;
    std::vector<int> members;
  };
  std::vector<RawCycle> raw;
  std::vector<std::vector<int>> cycles_at(n);  // raw cycle indices per quiver vertex

  for (int gv = 0; gv < static_cast<int>(g.vertices().size()); ++gv) {
    const auto& cyc = g.vertices()[gv].cyclic;
    const int m = static_cast<int>(cyc.size());
    if (gv == g.center()) {
      int first = 0;
      for (int k = 0; k < m; ++k)
        if (cyc[k] == g.loop_edge() && cyc[(k + 1) % m] == g.loop_edge()) {
          first = k;
          break;
        }
      const int loop = g.edge_index(g.loop_edge());
      RawCycle la{{{loop, loop}}, g.vertices()[gv].id, true, false, {loop}};
      RawCycle ex;
      ex.graph_vertex = g.vertices()[gv].id;
      ex.at_center_beta = true;
      for (int k = 1; k < m; ++k) {
        int s = g.edge_index(cyc[(first + k) % m]);
        int t = g.edge_index(cyc[(first + k + 1) % m]);
        ex.steps.emplace_back(s, t);
        ex.members.push_back(s);
      }
      cycles_at[loop].push_back(static_cast<int>(raw.size()));
      raw.push_back(std::move(la));
      for (int v : ex.members) cycles_at[v].push_back(static_cast<int>(raw.size()));
      raw.push_back(std::move(ex));
      continue;
    }
    RawCycle rc;
    rc.graph_vertex = g.vertices()[gv].id;
    for (int k = 0; k < m; ++k) {
      int s = g.edge_index(cyc[k]);
      rc.members.push_back(s);
      if (m >= 2) rc.steps.emplace_back(s, g.edge_index(cyc[(k + 1) % m]));
    }
    for (int v : rc.members) cycles_at[v].push_back(static_cast<int>(raw.size()));
    raw.push_back(std::move(rc));
  }

  // 2-colour the cycle intersection graph; S's β part is forced to β and the
  // loop arrow's cycle to α.
  std::vector<int> colour(raw.size(), -1);
  std::deque<int> queue;
  for (int c = 0; c < static_cast<int>(raw.size()); ++c) {
    if (raw[c].at_center_beta) colour[c] = static_cast<int>(Camp::beta);
    if (raw[c].at_center_loop) colour[c] = static_cast<int>(Camp::alpha);
    if (colour[c] >= 0) queue.push_back(c);
  }
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int v : raw[c].members)
      for (int d : cycles_at[v]) {
        if (d == c) continue;
        if (colour[d] < 0) {
          colour[d] = 1 - colour[c];
          queue.push_back(d);
        } else if (colour[d] == colour[c]) {
          throw InternalError("camp colouring failed at quiver vertex " + q.labels[v]);
        }
      }
  }
  for (int v = 0; v < n; ++v)
    if (cycles_at[v].size() != 2)
      throw InternalError("quiver vertex " + q.labels[v] + " is not on exactly two cycles");

  // Arrows: β by source, then α by source.
  struct Pending {
    int source, target;
    Camp camp;
    int cycle;
  };
  std::vector<Pending> pending;
  for (int c = 0; c < static_cast<int>(raw.size()); ++c)
    for (auto [s, t] : raw[c].steps)
      pending.push_back({s, t, static_cast<Camp>(colour[c]), c});
  std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    if (a.camp != b.camp) return a.camp == Camp::beta;
    return a.source < b.source;
  });
  q.alpha_out.assign(n, -1);
  q.beta_out.assign(n, -1);
  q.alpha_in.assign(n, -1);
  q.beta_in.assign(n, -1);
  std::vector<std::vector<int>> cycle_arrows(raw.size());
  for (const auto& p : pending) {
    const int id = static_cast<int>(q.arrows.size());
    q.arrows.push_back({arrow_name(p.camp, q.labels[p.source]), p.source, p.target, p.camp});
    auto& out = p.camp == Camp::alpha ? q.alpha_out : q.beta_out;
    auto& in = p.camp == Camp::alpha ? q.alpha_in : q.beta_in;
    if (out[p.source] >= 0 || in[p.target] >= 0)
      throw InternalError("two arrows of one camp at quiver vertex " + q.labels[p.source]);
    out[p.source] = id;
    in[p.target] = id;
    cycle_arrows[p.cycle].push_back(id);
    if (raw[p.cycle].at_center_loop) q.loop_arrow = id;
  }

  q.alpha_cycle.assign(n, -1);
  q.beta_cycle.assign(n, -1);
  for (int c = 0; c < static_cast<int>(raw.size()); ++c) {
    QCycle qc;
    qc.graph_vertex = raw[c].graph_vertex;
    qc.camp = static_cast<Camp>(colour[c]);
    qc.exceptional = raw[c].at_center_beta;
    qc.vertices = raw[c].members;
    // Order the arrows along the cycle starting from the first member.
    if (!cycle_arrows[c].empty()) {
      int v = raw[c].members.front();
      for (std::size_t k = 0; k < cycle_arrows[c].size(); ++k) {
        int a = q.out_arrow(v, qc.camp);
        qc.arrows.push_back(a);
        v = q.arrows[a].target;
      }
    }
    if (qc.exceptional) q.exceptional_cycle = static_cast<int>(q.cycles.size());
    for (int v : qc.vertices) (qc.camp == Camp::alpha ? q.alpha_cycle : q.beta_cycle)[v] =
        static_cast<int>(q.cycles.size());
    q.cycles.push_back(std::move(qc));
  }
  return q;
}

/// The cycle word around `v` in the given camp: A_v, B_v, or B'_v for β at
/// an exceptional vertex other than the loop's. Empty when trivial.
inline std::vector<int> cycle_at(const BrauerQuiver& q, int v, Camp camp) {
  std::vector<int> word;
  const QCycle& cyc = q.cycle_of(v, camp);
  if (cyc.trivial()) return word;
  const int loop_vertex = q.arrows[q.loop_arrow].source;
  int cur = v;
  do {
    int a = q.out_arrow(cur, camp);
    if (cyc.exceptional && cur == loop_vertex && v != loop_vertex) word.push_back(q.loop_arrow);
    word.push_back(a);
    cur = q.arrows[a].target;
  } while (cur != v);
  return word;
}

inline std::string quiver_to_dot(const BrauerQuiver& q) {
  std::ostringstream os;
  os << "digraph BrauerQuiver {\n";
  for (const auto& l : q.labels) os << "  \"" << l << "\";\n";
  for (const auto& a : q.arrows)
    os << "  \"" << q.labels[a.source] << "\" -> \"" << q.labels[a.target] << "\" [label=\""
       << a.name << "\", camp=\"" << camp_name(a.camp) << "\", color=\""
       << (a.camp == Camp::alpha ? "red" : "blue") << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace brauer
