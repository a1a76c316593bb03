// Brauer quiver construction, camps and cycle words.

#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "brauer/quiver.hpp"
#include "support.hpp"

using namespace brauer;

namespace {

// (name, source label, target label, camp)
using ArrowSig = std::tuple<std::string, std::string, std::string, Camp>;

std::set<ArrowSig> signature(const BrauerQuiver& q) {
  std::set<ArrowSig> out;
  for (const auto& a : q.arrows) out.insert({a.name, q.labels[a.source], q.labels[a.target], a.camp});
  return out;
}

std::vector<std::string> names(const BrauerQuiver& q, const std::vector<int>& word) {
  std::vector<std::string> out;
  for (int a : word) out.push_back(q.arrows[a].name);
  return out;
}

}  // namespace

TEST(Quiver, LoopStar) {
  for (int n = 1; n <= 6; ++n) {
    auto q = build_quiver(loop_star(n));
    std::set<ArrowSig> expected{{"a_1", "1", "1", Camp::alpha}};
    for (int i = 1; i <= n; ++i)
      expected.insert({"b_" + std::to_string(i), std::to_string(i), std::to_string(i % n + 1), Camp::beta});
    EXPECT_EQ(signature(q), expected) << n;
  }
}

TEST(Quiver, GMin) {
  auto q = build_quiver(testing_support::corpus_graph("g_min"));
  std::set<ArrowSig> expected{{"a_1", "1", "1", Camp::alpha},
                              {"b_1", "1", "2", Camp::beta},
                              {"b_2", "2", "1", Camp::beta},
                              {"a_2", "2", "3", Camp::alpha},
                              {"a_3", "3", "2", Camp::alpha}};
  EXPECT_EQ(signature(q), expected);
  EXPECT_TRUE(cycle_at(q, q.vertex("3"), Camp::beta).empty());
  EXPECT_EQ(names(q, cycle_at(q, q.vertex("2"), Camp::alpha)), (std::vector<std::string>{"a_2", "a_3"}));
}

TEST(Quiver, PrimedCycleWord) {
  auto q = build_quiver(loop_star(3));
  EXPECT_EQ(names(q, cycle_at(q, q.vertex("2"), Camp::beta)),
            (std::vector<std::string>{"b_2", "b_3", "a_1", "b_1"}));
  EXPECT_EQ(names(q, cycle_at(q, q.vertex("1"), Camp::beta)),
            (std::vector<std::string>{"b_1", "b_2", "b_3"}));
}

TEST(Quiver, ArrowOrderPutsBetaFirst) {
  auto q = build_quiver(testing_support::corpus_graph("mixed_8"));
  bool seen_alpha = false;
  int last_source = -1;
  for (const auto& a : q.arrows) {
    if (a.camp == Camp::alpha && !seen_alpha) {
      seen_alpha = true;
      last_source = -1;
    }
    if (seen_alpha) EXPECT_EQ(a.camp, Camp::alpha);
    EXPECT_GT(a.source, last_source);
    last_source = a.source;
  }
}

TEST(Quiver, CorpusInvariants) {
  for (const auto& name : testing_support::corpus_names()) {
    auto g = testing_support::corpus_graph(name);
    auto q = build_quiver(g);
    std::size_t expected_arrows = 0;
    for (const auto& v : g.vertices())
      if (v.cyclic.size() >= 2) expected_arrows += v.cyclic.size();
    EXPECT_EQ(q.arrows.size(), expected_arrows) << name;

    const int one = q.vertex(g.loop_edge());
    EXPECT_GE(q.alpha_out[one], 0);
    EXPECT_GE(q.beta_out[one], 0);
    EXPECT_EQ(q.arrows[q.loop_arrow].name, "a_" + g.loop_edge());

    for (int v = 0; v < q.vertex_count(); ++v) {
      const auto& ca = q.cycle_of(v, Camp::alpha);
      const auto& cb = q.cycle_of(v, Camp::beta);
      EXPECT_EQ(ca.camp, Camp::alpha);
      EXPECT_EQ(cb.camp, Camp::beta);
    }
    for (const auto& c : q.cycles) {
      for (std::size_t k = 0; k < c.arrows.size(); ++k) {
        const auto& a = q.arrows[c.arrows[k]];
        EXPECT_EQ(a.camp, c.camp);
        EXPECT_EQ(a.target, q.arrows[c.arrows[(k + 1) % c.arrows.size()]].source) << name;
      }
      EXPECT_EQ(c.trivial(), c.vertices.size() == 1 && c.graph_vertex != g.center_id())
          << name;
    }
    const auto& ex = q.cycles[q.exceptional_cycle];
    EXPECT_EQ(ex.camp, Camp::beta);
    EXPECT_EQ(ex.arrows.size(), g.cycle_edges().size()) << name;
  }
}

TEST(Quiver, Dot) {
  auto count = [](const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
  };
  auto d2 = quiver_to_dot(build_quiver(loop_star(2)));
  EXPECT_EQ(count(d2, "->"), 3u);
  EXPECT_EQ(d2, quiver_to_dot(build_quiver(loop_star(2))));
  auto dg = quiver_to_dot(build_quiver(testing_support::corpus_graph("g_min")));
  EXPECT_EQ(count(dg, "->"), 5u);
  EXPECT_EQ(count(dg, ";\n") - count(dg, "->"), 3u);
}
