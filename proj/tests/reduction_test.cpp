// Reduction traces, classification and trace re-certification.

#include <gtest/gtest.h>

#include "brauer/reduction.hpp"
#include "support.hpp"

using namespace brauer;
using testing_support::corpus_graph;

TEST(Reduction, GMinTrace) {
  auto g = corpus_graph("g_min");
  auto t = reduce_to_normal_form(g, true);
  EXPECT_EQ(t.n, 3);
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].at, "2");
  ASSERT_TRUE(t.steps[0].certificate.has_value());
  EXPECT_EQ(t.steps[0].certificate->det_source, 4);
  EXPECT_EQ(t.steps[0].certificate->det_end, 4);
  EXPECT_TRUE(t.normal_form.is_loop_star());
  EXPECT_EQ(t.normal_form.vertices()[t.normal_form.center()].cyclic, (std::vector<EdgeId>{"1", "1", "3", "2"}));
  EXPECT_NO_THROW(certify_trace(t));
}

TEST(Reduction, LoopStarHasNoSteps) {
  for (int n : {1, 2, 5}) {
    auto t = reduce_to_normal_form(loop_star(n), true);
    EXPECT_TRUE(t.steps.empty());
    EXPECT_EQ(t.n, n);
    EXPECT_EQ(t.normal_form, loop_star(n));
    EXPECT_NO_THROW(certify_trace(t));
  }
}

TEST(Reduction, CorpusTraces) {
  for (const auto& name : testing_support::corpus_names()) {
    auto g = corpus_graph(name);
    auto t = reduce_to_normal_form(g, true);
    EXPECT_EQ(t.steps.size(), g.tree_edge_count()) << name;
    EXPECT_EQ(edge_count(t.normal_form), edge_count(g)) << name;
    EXPECT_TRUE(t.normal_form.is_loop_star()) << name;
    std::size_t cycle = g.cycle_edges().size();
    for (const auto& s : t.steps) {
      EXPECT_EQ(s.after.cycle_edges().size(), ++cycle) << name;
      EXPECT_EQ(classify(s.after), classify(s.before)) << name;
      const long long d = s.certificate->det_end;
      EXPECT_EQ(d < 0 ? -d : d, 4) << name;
    }
    EXPECT_NO_THROW(certify_trace(t)) << name;
  }
}

TEST(Reduction, UncertifiedMatchesCertified) {
  auto g = corpus_graph("mixed_8");
  auto a = reduce_to_normal_form(g, false);
  auto b = reduce_to_normal_form(g, true);
  ASSERT_EQ(a.steps.size(), b.steps.size());
  for (std::size_t k = 0; k < a.steps.size(); ++k) {
    EXPECT_EQ(a.steps[k].after, b.steps[k].after);
    EXPECT_FALSE(a.steps[k].certificate.has_value());
  }
  EXPECT_THROW(certify_trace(a), CertificateFailure);
}

TEST(Reduction, NormalFormMatchesOmegaN) {
  for (const auto& name : testing_support::corpus_names()) {
    auto g = corpus_graph(name);
    auto t = reduce_to_normal_form(g, false);
    auto relabelled = relabel_canonically(t.normal_form);
    EXPECT_EQ(relabelled.cycle_edges().size(), static_cast<std::size_t>(t.n));
    auto lhs = QuotientAlgebra<Rational>::build(omega_relations(build_quiver(relabelled)));
    auto rhs = QuotientAlgebra<Rational>::build(omega_n_presentation(t.n));
    EXPECT_TRUE(presentations_equal_on_basis(lhs, rhs)) << name;
  }
}

TEST(Reduction, TamperedCartanEntryIsCaught) {
  auto t = reduce_to_normal_form(corpus_graph("two_trees"), true);
  ASSERT_EQ(t.steps.size(), 2u);
  t.steps[1].certificate->end_cartan.matrix[0][1] += 1;
  try {
    certify_trace(t);
    FAIL() << "tampered trace accepted";
  } catch (const CertificateFailure& e) {
    EXPECT_EQ(std::string(e.what()).rfind("step 1:", 0), 0u) << e.what();
  }
}

TEST(Reduction, TamperedGraphIsCaught) {
  auto t = reduce_to_normal_form(corpus_graph("chain_depth2"), true);
  t.steps[0].at = "3";
  EXPECT_THROW(certify_trace(t), CertificateFailure);
  auto u = reduce_to_normal_form(corpus_graph("chain_depth2"), true);
  u.n = 5;
  EXPECT_THROW(certify_trace(u), CertificateFailure);
}

TEST(Reduction, ClassifyIsEdgeCount) {
  EXPECT_EQ(classify(loop_star(5)), 5);
  EXPECT_EQ(classify(corpus_graph("g_min")), 3);
  auto g = corpus_graph("two_trees");
  for (const auto& c : g.cycle_edges())
    if (c != g.loop_edge() && !g.tree(c).empty()) EXPECT_EQ(classify(enlarge_graph_move(g, c)), classify(g));
}
