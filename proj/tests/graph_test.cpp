// Parsing, validation, canonical forms and loop-stars.

#include <gtest/gtest.h>

#include "brauer/graph.hpp"
#include "support.hpp"

using namespace brauer;

namespace {

std::string expect_violation(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST(Graph, LoopStarThree) {
  auto g = parse_graph(R"({"vertices":[{"id":"S","cyclic":["1","1","2","3"]}]})");
  EXPECT_EQ(g.cycle_edges(), (std::vector<EdgeId>{"1", "2", "3"}));
  for (const auto& c : g.cycle_edges()) EXPECT_TRUE(g.tree(c).empty());
  EXPECT_TRUE(g.is_loop_star());
}

TEST(Graph, GMinParse) {
  auto g = testing_support::corpus_graph("g_min");
  EXPECT_EQ(g.loop_edge(), "1");
  EXPECT_EQ(g.center_id(), "S");
  EXPECT_EQ(g.cycle_edges(), (std::vector<EdgeId>{"1", "2"}));
  EXPECT_EQ(g.tree("2"), (std::vector<EdgeId>{"3"}));
  EXPECT_EQ(edge_count(g), 3u);
  EXPECT_EQ(g.tree_path("3"), (std::vector<EdgeId>{"2", "3"}));
}

TEST(Graph, RotationInsensitive) {
  auto a = parse_graph(R"({"vertices":[{"id":"S","cyclic":["2","1","1"]},{"id":"u","cyclic":["3","2"]},{"id":"w","cyclic":["3"]}]})");
  auto b = testing_support::corpus_graph("g_min");
  EXPECT_EQ(serialize_graph(a), serialize_graph(b));
  EXPECT_EQ(a.edges(), b.edges());
}

TEST(Graph, ImplicitLeavesMatchExplicitOnes) {
  auto a = parse_graph(R"({"vertices":[{"id":"S","cyclic":["1","1","2"]},{"id":"u","cyclic":["2","3"]}]})");
  auto b = testing_support::corpus_graph("g_min");
  EXPECT_EQ(a.edges(), b.edges());
  EXPECT_EQ(a.tree("2"), b.tree("2"));
}

TEST(Graph, Violations) {
  EXPECT_NE(expect_violation(R"({"vertices":[{"id":"S","cyclic":["1","1","2"]},{"id":"u","cyclic":["2","2"]}]})")
                .find("exactly one loop"),
            std::string::npos);
  EXPECT_NE(expect_violation(R"({"vertices":[{"id":"S","cyclic":["1","2","1","3"]}]})")
                .find("loop not its own direct successor"),
            std::string::npos);
  EXPECT_NE(expect_violation(R"({"vertices":[{"id":"S","cyclic":["1","1"]},{"id":"a","cyclic":["5","6"]},{"id":"b","cyclic":["5","6"]}]})")
                .find("not connected"),
            std::string::npos);
  EXPECT_THROW(parse_graph(R"({"vertices":[{"id":"S","cyclic":["1","2","3"]}]})"), ValidationError);
}

TEST(Graph, MalformedInput) {
  EXPECT_THROW(parse_graph("{"), MalformedInput);
  EXPECT_THROW(parse_graph(R"({"vertex":[]})"), MalformedInput);
  EXPECT_THROW(parse_graph(R"({"vertices":[{"id":"S","cyclic":[1.5]}]})"), MalformedInput);
}

TEST(Graph, LoopStarBuilder) {
  EXPECT_EQ(serialize_graph(loop_star(1)), R"({"vertices":[{"id":"S","cyclic":["1","1"]}]})");
  EXPECT_EQ(serialize_graph(loop_star(2)), R"({"vertices":[{"id":"S","cyclic":["1","1","2"]}]})");
  EXPECT_EQ(edge_count(loop_star(7)), 7u);
  EXPECT_THROW(loop_star(0), DomainError);
  for (int n = 1; n <= 64; ++n) EXPECT_NO_THROW(validate(loop_star(n))) << n;
}

TEST(Graph, CorpusRoundTripAndCounts) {
  for (const auto& name : testing_support::corpus_names()) {
    auto g = testing_support::corpus_graph(name);
    auto text = serialize_graph(g);
    auto again = parse_graph(text);
    EXPECT_EQ(serialize_graph(again), text) << name;
    EXPECT_EQ(again, g) << name;

    std::size_t incidences = 0;
    for (const auto& v : g.vertices()) incidences += v.cyclic.size();
    EXPECT_EQ(incidences, 2 * edge_count(g)) << name;

    std::size_t tree_total = 0;
    for (const auto& c : g.cycle_edges()) tree_total += g.tree(c).size();
    EXPECT_EQ(edge_count(g), g.cycle_edges().size() + tree_total) << name;
  }
}

TEST(Graph, GMinSerializesByteIdentically) {
  auto text = testing_support::read_file(testing_support::data_dir() / "graphs" / "g_min.json");
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.pop_back();
  EXPECT_EQ(serialize_graph(parse_graph(text)), text);
}
