#include <gtest/gtest.h>

#include "oracles.hpp"
#include "slowcolor/error.hpp"
#include "slowcolor/families.hpp"
#include "slowcolor/graph.hpp"

using namespace slowcolor;
namespace fam = slowcolor::families;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

EdgeSet random_edge_set(int n, fam::Rng& rng) {
  EdgeSet es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (fam::uniform_int(rng, 0, 1)) es.insert(Edge(u, v));
  return es;
}

}  // namespace

TEST(VertexSet, BasicOps) {
  VertexSet s = VertexSet::from({0, 3, 5});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.lowest(), 0);
  EXPECT_EQ((s - VertexSet::single(0)).lowest(), 3);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 3, 5}));
  EXPECT_TRUE(VertexSet::single(3).subset_of(s));
  EXPECT_EQ(VertexSet::first(64).size(), 64);
}

TEST(VertexSet, SubsetEnumerationVisitsEachOnce) {
  const VertexSet s = VertexSet::from({1, 4, 6, 9});
  std::set<std::uint64_t> seen;
  for_each_nonempty_subset(s, [&](VertexSet sub) {
    EXPECT_TRUE(sub.subset_of(s));
    EXPECT_FALSE(sub.empty());
    seen.insert(sub.bits());
  });
  EXPECT_EQ(seen.size(), 15u);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(3, {Edge(0, 0)}), PreconditionError);
  EXPECT_THROW(Graph(3, {Edge(0, 1), Edge(1, 0)}), PreconditionError);
  EXPECT_THROW(Graph(3, {Edge(0, 3)}), PreconditionError);
  EXPECT_THROW(Graph(0, std::vector<Edge>{}), PreconditionError);
  EXPECT_THROW(Graph(65, std::vector<Edge>{}), PreconditionError);
}

TEST(Graph, EdgeListFormat) {
  const Graph g = load_graph("# a triangle with a tail\n4 4\n0 1\n1 2\n0 2\n2 3\n");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_EQ(load_graph(graph_to_edge_list(g)), g);
}

TEST(Graph, EdgeListErrorsCarryLine) {
  try {
    load_graph("3 2\n0 1\n1 7\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(load_graph("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(load_graph("x y\n"), ParseError);
}

TEST(Graph, JsonRoundTripKeepsLabels) {
  const Graph g = fam::prism();
  const auto j = graph_to_json(g);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(graph_from_json(j), g);
  EXPECT_EQ(load_graph(j.dump()), g);
  EXPECT_EQ(g.label(0), "1");
  EXPECT_EQ(g.find_vertex("6"), 5);
  EXPECT_EQ(g.find_vertex("7"), std::nullopt);
  EXPECT_THROW(graph_from_json(nlohmann::json{{"n", 2}, {"edges", {{0, 2}}}}), Error);
}

TEST(Families, PinnedShapes) {
  struct Want {
    Graph g;
    std::size_t edges;
    std::vector<int> degrees;
  };
  const std::vector<Want> cases = {
      {fam::prism(), 9, {3, 3, 3, 3, 3, 3}},
      {fam::cube(), 12, std::vector<int>(8, 3)},
      {fam::petersen(), 15, std::vector<int>(10, 3)},
      {fam::path(5), 4, {1, 1, 2, 2, 2}},
      {fam::star(5), 4, {1, 1, 1, 1, 4}},
      {fam::cycle(5), 5, {2, 2, 2, 2, 2}},
      {fam::complete(4), 6, {3, 3, 3, 3}},
      {fam::complete_bipartite(2, 3), 6, {2, 2, 2, 3, 3}},
      {fam::edgeless(3), 0, {0, 0, 0}},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(c.g.edge_count(), c.edges);
    EXPECT_EQ(degree_sequence(c.g), c.degrees);
  }
}

TEST(Families, BuiltinSpecs) {
  EXPECT_EQ(*fam::builtin("prism"), fam::prism());
  EXPECT_EQ(*fam::builtin("bipartite:3,3"), fam::complete_bipartite(3, 3));
  EXPECT_EQ(fam::builtin("path:4")->order(), 4);
  EXPECT_EQ(fam::builtin("cube")->order(), 8);
  EXPECT_FALSE(fam::builtin("dodecahedron"));
  EXPECT_FALSE(fam::builtin("path:x"));
}

TEST(Families, RandomGraphsAreSeeded) {
  fam::Rng a(42), b(42);
  EXPECT_EQ(fam::random_graph(7, 50, a), fam::random_graph(7, 50, b));
  for (int n = 1; n <= 9; ++n) {
    const Graph t = fam::random_tree(n, a);
    EXPECT_EQ(t.edge_count(), static_cast<std::size_t>(n - 1));
    EXPECT_TRUE(is_connected(t, t.vertices()));
    EXPECT_TRUE(is_acyclic(fam::random_forest(n, a), t.vertices()));
  }
}

TEST(Independence, MaximalSubsetsMatchBruteForce) {
  fam::Rng rng(11);
  for (int round = 0; round < 300; ++round) {
    const int n = fam::uniform_int(rng, 1, 6);
    const Graph g = fam::random_graph(n, fam::uniform_int(rng, 0, 100), rng);
    const oracle::Adj adj(g);
    for (std::uint64_t m = 1; m < (1u << n); ++m) {
      std::vector<oracle::Mask> got;
      for (VertexSet d : maximal_independent_subsets(g, VertexSet(m))) got.push_back(d.bits());
      ASSERT_EQ(got, oracle::maximal_independent(adj, m)) << graph_to_json(g).dump() << " m=" << m;
    }
  }
}

TEST(Independence, EmptyMarkIsRejected) {
  EXPECT_THROW(maximal_independent_subsets(fam::path(3), VertexSet()), PreconditionError);
}

TEST(Independence, NumberMatchesBruteForce) {
  fam::Rng rng(5);
  for (int round = 0; round < 100; ++round) {
    const Graph g = fam::random_graph(fam::uniform_int(rng, 1, 8), 40, rng);
    EXPECT_EQ(independence_number(g), oracle::independence_number(g, g.vertices().bits()));
  }
  EXPECT_EQ(independence_number(fam::petersen()), 4);
}

TEST(Cycles, FindCycleIffEdgesExceedForestBound) {
  fam::Rng rng(3);
  for (int round = 0; round < 500; ++round) {
    const int n = fam::uniform_int(rng, 1, 9);
    const Graph g = fam::random_graph(n, fam::uniform_int(rng, 5, 60), rng);
    const auto cyc = find_cycle(g, g.edge_set());
    const std::size_t forest_edges = n - components(g, g.vertices()).size();
    EXPECT_EQ(cyc.has_value(), g.edge_count() > forest_edges);
    if (cyc) {
      ASSERT_GE(cyc->size(), 3u);
      for (std::size_t i = 0; i < cyc->size(); ++i)
        EXPECT_TRUE(g.adjacent((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
    }
  }
}

TEST(EdgeSets, SymmetricDifferenceFlipsDegreeParity) {
  fam::Rng rng(1000);
  for (int round = 0; round < 1000; ++round) {
    const int n = fam::uniform_int(rng, 2, 9);
    const EdgeSet a = random_edge_set(n, rng), b = random_edge_set(n, rng);
    const EdgeSet x = symmetric_difference(a, b);
    for (Vertex v = 0; v < n; ++v) EXPECT_EQ(x.degree(v) % 2, (a.degree(v) + b.degree(v)) % 2);
  }
}

TEST(EdgeSets, ToggleIsInvolution) {
  EdgeSet es{Edge(0, 1)};
  es.toggle(Edge(1, 2));
  es.toggle(Edge(1, 0));
  EXPECT_EQ(es, (EdgeSet{Edge(1, 2)}));
  EXPECT_EQ(es.touched(), VertexSet::from({1, 2}));
}

TEST(Components, OrderedBySmallestMember) {
  const Graph g = fam::disjoint_union(fam::path(2), fam::cycle(3));
  const auto cs = components(g, g.vertices());
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0], VertexSet::from({0, 1}));
  EXPECT_EQ(cs[1], VertexSet::from({2, 3, 4}));
  EXPECT_FALSE(is_connected(g, g.vertices()));
}

TEST(Format, SetsUseLabels) {
  EXPECT_EQ(format_set(fam::prism(), VertexSet::from({2, 3})), "{3, 4}");
  EXPECT_EQ(format_set(fam::path(3), VertexSet()), "{}");
}
