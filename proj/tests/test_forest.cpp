#include <gtest/gtest.h>

#include "oracles.hpp"
#include "slowcolor/error.hpp"
#include "slowcolor/families.hpp"
#include "slowcolor/forest.hpp"
#include "slowcolor/game.hpp"

using namespace slowcolor;
namespace fam = slowcolor::families;

namespace {

// Prism labels 1..6 are indices 0..5; matching 1-2, 3-6, 4-5.
Matching prism_matching(const Graph& g) { return Matching(g, EdgeSet{Edge(0, 1), Edge(2, 5), Edge(3, 4)}); }

ForestCertificate construct(const Graph& g, const Matching& m, VertexSet d) {
  BetaContext ctx = beta_context(g, m, d);
  if (ctx.betas.size() % 2) ctx = without_beta(ctx, ctx.betas.lowest());
  auto [a, b] = split_betas(ctx.betas);
  return build_forest(ctx, disjoint_paths(g, a, b, a.size(), ctx.alive));
}

}  // namespace

TEST(BetaContext, PrismWorkedExample) {
  const Graph g = fam::prism();
  const BetaContext ctx = beta_context(g, prism_matching(g), VertexSet{2, 3});
  EXPECT_EQ(ctx.alive, (VertexSet{0, 1, 4, 5}));
  EXPECT_EQ(ctx.betas, (VertexSet{4, 5}));
  EXPECT_EQ(ctx.surviving_matching, (EdgeSet{Edge(0, 1)}));
}

TEST(BetaContext, RejectsBadInput) {
  const Graph g = fam::prism();
  EXPECT_THROW(beta_context(g, prism_matching(g), VertexSet{0, 1}), PreconditionError);
  EXPECT_THROW(beta_context(g, Matching(g, EdgeSet{Edge(0, 1)}), VertexSet{}), PreconditionError);
}

TEST(BetaContext, WithoutBetaDropsOneVertex) {
  const Graph g = fam::complete(4);
  const Matching m(g, EdgeSet{Edge(0, 1), Edge(2, 3)});
  const BetaContext ctx = beta_context(g, m, VertexSet{0});
  EXPECT_EQ(ctx.betas, VertexSet{1});
  const BetaContext smaller = without_beta(ctx, 1);
  EXPECT_EQ(smaller.alive, (VertexSet{2, 3}));
  EXPECT_TRUE(smaller.betas.empty());
}

TEST(SplitBetas, LowerHalfFirst) {
  auto [a, b] = split_betas(VertexSet{1, 4, 6, 9});
  EXPECT_EQ(a, (VertexSet{1, 4}));
  EXPECT_EQ(b, (VertexSet{6, 9}));
  EXPECT_THROW(split_betas(VertexSet{1, 2, 3}), PreconditionError);
}

TEST(Forest, PrismCertificateForDeletion34) {
  const Graph g = fam::prism();
  const ForestCertificate cert = construct(g, prism_matching(g), VertexSet{2, 3});
  EXPECT_EQ(cert.edges, (EdgeSet{Edge(0, 1), Edge(4, 5)}));
  EXPECT_EQ(check_certificate(g, VertexSet{0, 1, 4, 5}, cert), std::nullopt);
}

TEST(Forest, EmptyDeletionGivesMatching) {
  const Graph g = fam::prism();
  const Matching m = prism_matching(g);
  EXPECT_EQ(construct(g, m, VertexSet{}).edges, m.edges());
}

TEST(Forest, CheckerNamesViolations) {
  const Graph g = fam::cycle(4);
  const auto cycle = make_certificate(g.vertices(), g.edge_set(), DegreeMode::Strict);
  EXPECT_TRUE(check_certificate(g, g.vertices(), cycle).has_value());
  const auto partial = make_certificate(g.vertices(), EdgeSet{Edge(0, 1)}, DegreeMode::Strict);
  EXPECT_TRUE(check_certificate(g, g.vertices(), partial).has_value());
  const auto good = make_certificate(g.vertices(), EdgeSet{Edge(0, 1), Edge(2, 3)}, DegreeMode::Strict);
  EXPECT_EQ(check_certificate(g, g.vertices(), good), std::nullopt);
}

TEST(Forest, StrippingKeepsOddDegrees) {
  // Every vertex of K4 has degree 3, and K4 has cycles.
  const Graph g = fam::complete(4);
  const EdgeSet all = g.edge_set();
  const EdgeSet stripped = strip_cycles(g, all);
  EXPECT_FALSE(find_cycle(g, stripped).has_value());
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(stripped.degree(v) % 2, 1);
}

TEST(Forest, PipelineOnEveryReply) {
  for (const Graph& g : {fam::prism(), fam::complete(4), fam::cube(), fam::complete_bipartite(3, 3)}) {
    for (const Matching& m : all_perfect_matchings(g)) {
      const std::vector<Edge> pairs(m.edges().begin(), m.edges().end());
      for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j)
      for (VertexSet d : maximal_independent_subsets(
               g, VertexSet{pairs[i].u, pairs[i].v, pairs[j].u, pairs[j].v})) {
        BetaContext ctx = beta_context(g, m, d);
        if (ctx.betas.size() % 2) ctx = without_beta(ctx, ctx.betas.lowest());
        auto [a, b] = split_betas(ctx.betas);
        const PathSystem paths = disjoint_paths(g, a, b, a.size(), ctx.alive);
        const EdgeSet before = forest_before_stripping(ctx, paths);
        for (Vertex v : ctx.alive) EXPECT_EQ(before.degree(v) % 2, 1);
        const ForestCertificate cert = build_forest(ctx, paths);
        EXPECT_EQ(check_certificate(g, ctx.alive, cert), std::nullopt) << to_json(cert).dump();
      }
    }
  }
}

TEST(ForestSearch, MatchesBruteForceOnRandomGraphs) {
  fam::Rng rng(31);
  for (int round = 0; round < 200; ++round) {
    const int n = fam::uniform_int(rng, 1, 7);
    const Graph g = fam::random_graph(n, fam::uniform_int(rng, 15, 50), rng);
    if (g.edge_count() > 14) continue;
    for (bool odd : {false, true}) {
      const auto found = spanning_forest_13_exists(g, odd);
      ASSERT_EQ(found.has_value(), oracle::forest_13_exists(g, odd)) << graph_to_json(g).dump() << " odd=" << odd;
      if (found) {
        EXPECT_EQ(check_certificate(g, g.vertices(), *found), std::nullopt);
      }
    }
  }
}

TEST(ForestSearch, OddExceptionCases) {
  EXPECT_FALSE(spanning_forest_13_exists(fam::path(3), false));
  EXPECT_TRUE(spanning_forest_13_exists(fam::path(3), true));
  EXPECT_FALSE(spanning_forest_13_exists(fam::star(6), true));
  // K1,6: the centre may take degree 6 under the exception.
  const auto star7 = spanning_forest_13_exists(fam::star(7), true);
  ASSERT_TRUE(star7);
  EXPECT_EQ(star7->degrees.at(0), 6);
}

TEST(ForestSearch, Cap) {
  EXPECT_THROW(spanning_forest_13_exists(fam::complete(8), false), CapExceeded);
  EXPECT_THROW(spanning_forest_13_exists(fam::path(13), false), CapExceeded);
}

TEST(Forest, Json) {
  const auto cert = make_certificate(VertexSet{0, 1}, EdgeSet{Edge(0, 1)}, DegreeMode::OddException);
  const auto j = to_json(cert);
  EXPECT_EQ(j["edges"], nlohmann::json::parse("[[0,1]]"));
  EXPECT_EQ(j["mode"], "odd-exception");
}
