// Shrink and enlarge tilting complexes: summands, End Cartan matrices,
// generator relations and certificates.

#include <gtest/gtest.h>

#include "brauer/tilting.hpp"
#include "support.hpp"

using namespace brauer;
using testing_support::corpus_graph;
using Q = Rational;

namespace {

// 4 at (1,1), 2 on the diagonal and on the first row and column, 1 elsewhere.
std::vector<std::vector<long long>> star_pattern(std::size_t n) {
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 1));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = m[0][i] = m[i][0] = 2;
  m[0][0] = 4;
  return m;
}

}  // namespace

TEST(Shrink, GMinSummandsAndOrder) {
  auto g = corpus_graph("g_min");
  auto a = omega_algebra(g);
  auto t = shrink_complex(a, g);
  EXPECT_EQ(t.order, (std::vector<EdgeId>{"1", "3", "2"}));
  EXPECT_EQ(complex_summary(t.summands.at("3")), "P(2)[0] -> P(3)[-1]");
  EXPECT_TRUE(t.summands.at("1").is_stalk_of(a.quiver().vertex("1"), 0));
  EXPECT_EQ(end_cartan(t).matrix, (std::vector<std::vector<long long>>{{4, 2, 2}, {2, 2, 1}, {2, 1, 2}}));
}

TEST(Shrink, GMinCertificate) {
  auto g = corpus_graph("g_min");
  auto a = omega_algebra(g);
  auto cert = check_tilting(shrink_complex(a, g));
  for (const auto& [r, d] : cert.hom_vanishing) EXPECT_EQ(d, 0) << r;
  EXPECT_TRUE(cert.hom_vanishing.count(-2) && cert.hom_vanishing.count(2));
  ASSERT_EQ(cert.generation.size(), 1u);
  EXPECT_EQ(cert.generation[0].second, "P(3)[0]");
  EXPECT_EQ(cert.det_source, 4);
  EXPECT_EQ(cert.det_end, 4);
  EXPECT_GT(cert.relations_checked, 0);
}

TEST(Shrink, CorpusCartanPattern) {
  for (const auto& name : testing_support::corpus_names()) {
    auto g = corpus_graph(name);
    auto a = omega_algebra(g);
    auto t = shrink_complex(a, g);
    auto c = end_cartan(t);
    EXPECT_EQ(c.matrix, star_pattern(edge_count(g))) << name;
    EXPECT_EQ(t.order.front(), g.loop_edge()) << name;
  }
}

TEST(Shrink, CorpusCertificates) {
  for (const auto& name : {"chain_depth2", "two_trees", "fan_tree", "branched"}) {
    auto g = corpus_graph(name);
    auto a = omega_algebra(g);
    TiltCertificate cert;
    ASSERT_NO_THROW(cert = check_tilting(shrink_complex(a, g))) << name;
    EXPECT_EQ(cert.det_end, cert.det_source) << name;
    EXPECT_EQ(cert.generation.size(), g.tree_edge_count()) << name;
    for (const auto& [desc, form] : cert.generation) EXPECT_EQ(form.find("->"), std::string::npos) << desc;
  }
}

TEST(Shrink, LoopStarIsItsOwnShrink) {
  auto g = loop_star(4);
  auto a = omega_algebra(g);
  auto t = shrink_complex(a, g);
  EXPECT_EQ(end_cartan(t), cartan(a));
  EXPECT_TRUE(t.witnesses.empty());
  EXPECT_NO_THROW(verify_end_generators(t));
}

TEST(Enlarge, GMinGraphMove) {
  auto g = corpus_graph("g_min");
  auto t2 = enlarge_graph_move(g, "2");
  EXPECT_EQ(t2.center_id(), "S");
  EXPECT_EQ(t2.vertices()[t2.center()].cyclic, (std::vector<EdgeId>{"1", "1", "3", "2"}));
  EXPECT_TRUE(t2.is_loop_star());
  EXPECT_EQ(t2.cycle_edges(), (std::vector<EdgeId>{"1", "3", "2"}));
}

TEST(Enlarge, GMinComplex) {
  auto g = corpus_graph("g_min");
  auto a = omega_algebra(g);
  auto t = enlarge_complex(a, g, "2");
  ASSERT_TRUE(t.enlarge.has_value());
  EXPECT_EQ(t.enlarge->succ, "3");
  EXPECT_EQ(t.enlarge->pred, "1");
  EXPECT_TRUE(t.enlarge->beta_fan.empty());
  EXPECT_EQ(complex_summary(t.summands.at("3")), "P(2)[0] -> P(3)[-1]");
  auto cert = check_tilting(t);
  EXPECT_EQ(cert.end_cartan, cartan(omega_algebra(*t.target_graph)));
  ASSERT_EQ(cert.generation.size(), 1u);
  EXPECT_EQ(cert.generation[0].second, "P(3)[0]");
}

TEST(Enlarge, Errors) {
  auto g = corpus_graph("two_trees");
  auto a = omega_algebra(g);
  EXPECT_THROW(enlarge_complex(a, g, "1"), DomainError);
  EXPECT_THROW(enlarge_complex(a, g, "4"), DomainError);
  EXPECT_THROW(enlarge_complex(a, g, "nope"), DomainError);
  auto h = corpus_graph("g_min");
  auto t = enlarge_graph_move(h, "2");
  EXPECT_THROW(enlarge_graph_move(t, "2"), EmptyTree);
}

TEST(Enlarge, CorpusEveryTreeRoot) {
  for (const auto& name : testing_support::corpus_names()) {
    auto g = corpus_graph(name);
    if (edge_count(g) > 6) continue;
    auto a = omega_algebra(g);
    for (const auto& c : g.cycle_edges()) {
      if (c == g.loop_edge() || g.tree(c).empty()) continue;
      auto t = enlarge_complex(a, g, c);
      EXPECT_EQ(t.target_graph->tree_edge_count() + 1, g.tree_edge_count()) << name << " " << c;
      TiltCertificate cert;
      ASSERT_NO_THROW(cert = check_tilting(t)) << name << " at " << c;
      EXPECT_EQ(cert.end_cartan, cartan(omega_algebra(*t.target_graph))) << name << " at " << c;
    }
  }
}

TEST(Enlarge, FanCase) {
  // chain_depth2: s = 3 has beta-fan {4}.
  auto g = corpus_graph("chain_depth2");
  auto d = enlarge_data(g, "2");
  EXPECT_EQ(d.succ, "3");
  EXPECT_EQ(d.beta_fan, (std::vector<EdgeId>{"4"}));
  auto t2 = enlarge_graph_move(g, "2");
  EXPECT_EQ(t2.cycle_edges(), (std::vector<EdgeId>{"1", "3", "2"}));
  EXPECT_EQ(t2.tree("3"), (std::vector<EdgeId>{"4"}));
}

TEST(Certificates, TamperedGeneratorIsCaught) {
  auto g = corpus_graph("g_min");
  auto a = omega_algebra(g);
  auto t = shrink_complex(a, g);
  // Replace the loop generator by zero.
  t.generators[a.quiver().loop_arrow] = zero_map(t.summands.at("1"), t.summands.at("1"));
  EXPECT_THROW(verify_end_generators(t), RelationFailure);
  EXPECT_THROW(check_tilting(t), CertificateFailure);
}

TEST(Certificates, NonTiltingSumFails) {
  // P(1) and P(2) -> P(3) with P(3)[0]: Hom(P(3), Q(3)[1]) is nonzero.
  auto g = corpus_graph("g_min");
  auto a = omega_algebra(g);
  auto t = shrink_complex(a, g);
  t.summands.at("2") = ProjComplex<Q>::stalk(a, a.quiver().vertex("3"));
  EXPECT_THROW(check_tilting(t), CertificateFailure);
}

TEST(Enlarge, OldBetaFactorsThroughNewSummand) {
  // (b_1, 0) : Q(1) -> Q'(3) followed by (e_2, 0) : Q'(3) -> Q(2) is b_1.
  auto g = corpus_graph("g_min");
  auto a = omega_algebra(g);
  auto t = enlarge_complex(a, g, "2");
  const auto& nq = t.end_presentation.quiver;
  auto into = t.generators[nq.arrows_between(nq.vertex("1"), nq.vertex("3")).at(0)];
  auto out = t.generators[nq.arrows_between(nq.vertex("3"), nq.vertex("2")).at(0)];
  auto composite = compose(into, out);
  const int b1 = a.quiver().beta_out[a.quiver().vertex("1")];
  ChainMap<Q> old{t.summands.at("1"), t.summands.at("2"), {{0, Matrix<Q>(1, 1)}}};
  old.components[0].at(0, 0) = a.arrow(b1);
  EXPECT_TRUE(is_null_homotopic(linear_combination<Q>({{Q(1), composite}, {Q(-1), old}})));
  EXPECT_FALSE(is_null_homotopic(composite));
}

TEST(Enlarge, TwoSummandHead) {
  auto g = corpus_graph("chain_depth2");
  auto a = omega_algebra(g);
  auto t = enlarge_complex(a, g, "2");
  EXPECT_EQ(complex_summary(t.summands.at("3")), "P(2)+P(4)[0] -> P(3)[-1]");
  EXPECT_NO_THROW(check_tilting(t));
}

TEST(Enlarge, LoopStarHasNoTree) {
  auto g = loop_star(3);
  auto a = omega_algebra(g);
  EXPECT_THROW(enlarge_complex(a, g, "2"), EmptyTree);
}

TEST(Certificates, StalksAreTrivialTilting) {
  auto g = loop_star(3);
  auto a = omega_algebra(g);
  auto cert = check_tilting(shrink_complex(a, g));
  EXPECT_EQ(cert.end_cartan, cartan(a));
  EXPECT_TRUE(cert.generation.empty());
}
