#include <gtest/gtest.h>

#include "oracles.hpp"
#include "slowcolor/connectivity.hpp"
#include "slowcolor/error.hpp"
#include "slowcolor/families.hpp"

using namespace slowcolor;
namespace fam = slowcolor::families;

TEST(Connectivity, KnownValues) {
  EXPECT_EQ(vertex_connectivity(fam::prism()), 3);
  EXPECT_EQ(vertex_connectivity(fam::cube()), 3);
  EXPECT_EQ(vertex_connectivity(fam::petersen()), 3);
  EXPECT_EQ(vertex_connectivity(fam::complete(5)), 4);
  EXPECT_EQ(vertex_connectivity(fam::cycle(6)), 2);
  EXPECT_EQ(vertex_connectivity(fam::path(4)), 1);
  EXPECT_EQ(vertex_connectivity(fam::edgeless(3)), 0);
  EXPECT_EQ(vertex_connectivity(fam::complete_bipartite(3, 4)), 3);
}

TEST(Connectivity, MatchesExhaustiveCuts) {
  fam::Rng rng(21);
  for (int round = 0; round < 400; ++round) {
    const int n = fam::uniform_int(rng, 1, 8);
    const Graph g = fam::random_graph(n, fam::uniform_int(rng, 20, 95), rng);
    ASSERT_EQ(vertex_connectivity(g), oracle::vertex_connectivity(g)) << graph_to_json(g).dump();
  }
}

TEST(Connectivity, WhitneyInequality) {
  fam::Rng rng(8);
  for (int round = 0; round < 200; ++round) {
    const Graph g = fam::random_graph(fam::uniform_int(rng, 2, 9), 60, rng);
    EXPECT_LE(vertex_connectivity(g), min_degree(g, g.vertices()));
  }
}

TEST(Connectivity, KConnectedNeedsMoreThanKVertices) {
  EXPECT_TRUE(is_k_connected(fam::complete(4), 3, VertexSet::first(4)));
  EXPECT_FALSE(is_k_connected(fam::complete(4), 4, VertexSet::first(4)));
  EXPECT_TRUE(is_k_connected(fam::prism(), 3, VertexSet::first(6)));
  EXPECT_FALSE(is_k_connected(fam::prism(), 4, VertexSet::first(6)));
  EXPECT_THROW(is_k_connected(fam::prism(), 0, VertexSet::first(6)), PreconditionError);
}

TEST(DisjointPaths, ValidOnPrism) {
  const Graph g = fam::prism();
  const PathSystem ps = disjoint_paths(g, VertexSet{0, 1, 2}, VertexSet{3, 4, 5}, 3);
  EXPECT_EQ(ps.paths.size(), 3u);
  EXPECT_EQ(check_path_system(g, g.vertices(), ps), std::nullopt);
  for (const auto& p : ps.paths) {
    EXPECT_TRUE(ps.sources.contains(p.front()));
    EXPECT_TRUE(ps.sinks.contains(p.back()));
  }
}

TEST(DisjointPaths, RespectsWithin) {
  const Graph g = fam::cycle(6);
  // Removing vertex 1 leaves the path 2-3-4-5-0.
  const PathSystem ps = disjoint_paths(g, VertexSet{0}, VertexSet{2}, 1, g.vertices() - VertexSet{1});
  ASSERT_EQ(ps.paths.size(), 1u);
  EXPECT_EQ(ps.paths[0], (std::vector<Vertex>{0, 5, 4, 3, 2}));
}

TEST(DisjointPaths, ReportsInsufficientConnectivity) {
  const Graph g = fam::path(4);
  EXPECT_THROW(disjoint_paths(g, VertexSet{0, 1}, VertexSet{2, 3}, 2), InsufficientConnectivity);
  try {
    disjoint_paths(g, VertexSet{0, 1}, VertexSet{2, 3}, 2);
  } catch (const InsufficientConnectivity& e) {
    EXPECT_NE(std::string(e.what()).find("insufficient connectivity"), std::string::npos);
  }
}

TEST(DisjointPaths, RandomSystemsValidate) {
  fam::Rng rng(77);
  int built = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = fam::uniform_int(rng, 4, 10);
    const Graph g = fam::random_graph(n, 55, rng);
    const int count = fam::uniform_int(rng, 1, n / 2);
    VertexSet a, b;
    for (int i = 0; i < count; ++i) a.insert(i);
    for (int i = 0; i < count; ++i) b.insert(n - 1 - i);
    try {
      const PathSystem ps = disjoint_paths(g, a, b, count);
      EXPECT_EQ(check_path_system(g, g.vertices(), ps), std::nullopt);
      ++built;
    } catch (const InsufficientConnectivity&) {
      // Menger: a cut of size < count separates a from b, so κ(g) < count.
      EXPECT_LT(vertex_connectivity(g), count);
    }
  }
  EXPECT_GT(built, 50);
}

TEST(DisjointPaths, CheckerCatchesOverlap) {
  const Graph g = fam::complete(4);
  PathSystem ps;
  ps.paths = {{0, 2}, {1, 2}};
  ps.sources = VertexSet{0, 1};
  ps.sinks = VertexSet{2, 3};
  EXPECT_TRUE(check_path_system(g, g.vertices(), ps).has_value());
}

TEST(Matching, Validation) {
  const Graph g = fam::path(4);
  EXPECT_THROW(Matching(g, EdgeSet{Edge(0, 2)}), PreconditionError);
  EXPECT_THROW(Matching(g, EdgeSet{Edge(0, 1), Edge(1, 2)}), PreconditionError);
  const Matching m(g, EdgeSet{Edge(0, 1), Edge(2, 3)});
  EXPECT_TRUE(m.is_perfect_on(g.vertices()));
  EXPECT_EQ(m.partner(2), 3);
  EXPECT_EQ(to_json(m)["matching"], nlohmann::json::parse("[[0,1],[2,3]]"));
}

TEST(Matching, ExistenceAndCountMatchBruteForce) {
  fam::Rng rng(9);
  for (int round = 0; round < 300; ++round) {
    const Graph g = fam::random_graph(2 * fam::uniform_int(rng, 1, 4), fam::uniform_int(rng, 20, 80), rng);
    const int expected = oracle::count_perfect_matchings(g);
    const auto found = find_perfect_matching(g);
    ASSERT_EQ(found.has_value(), expected > 0) << graph_to_json(g).dump();
    if (found) {
      EXPECT_TRUE(found->is_perfect_on(g.vertices()));
    }
    EXPECT_EQ(static_cast<int>(all_perfect_matchings(g).size()), expected);
  }
  EXPECT_FALSE(find_perfect_matching(fam::path(5)));
  EXPECT_FALSE(find_perfect_matching(fam::star(4)));
}

TEST(Matching, EnumerationCap) {
  EXPECT_EQ(all_perfect_matchings(fam::complete(6)).size(), 15u);
  EXPECT_THROW(all_perfect_matchings(fam::complete(8), 10), CapExceeded);
}

TEST(Matching, PathSystemJson) {
  PathSystem ps;
  ps.paths = {{4, 5}};
  EXPECT_EQ(to_json(ps)["paths"], nlohmann::json::parse("[[4,5]]"));
}
