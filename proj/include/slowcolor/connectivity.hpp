#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "slowcolor/graph.hpp"

namespace slowcolor {

/// Pairwise vertex-disjoint edge set of a fixed graph.
class Matching {
 public:
  Matching() = default;
  /// Throws PreconditionError if an edge is missing from g or two edges share a vertex.
  Matching(const Graph& g, EdgeSet edges);

  const EdgeSet& edges() const { return edges_; }
  VertexSet covered() const { return covered_; }
  bool is_perfect_on(VertexSet vertices) const { return covered_ == vertices; }
  std::optional<Vertex> partner(Vertex v) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  EdgeSet edges_;
  VertexSet covered_;
};

/// Vertex-disjoint paths from `sources` to `sinks`.
struct PathSystem {
  std::vector<std::vector<Vertex>> paths;
  VertexSet sources;
  VertexSet sinks;

  EdgeSet edge_set() const;
  VertexSet vertices() const;
};

/// Returns an error message if `ps` breaks a PathSystem invariant in g[within], else nullopt.
std::optional<std::string> check_path_system(const Graph& g, VertexSet within, const PathSystem& ps);

std::optional<Matching> find_perfect_matching(const Graph& g, VertexSet within);
inline std::optional<Matching> find_perfect_matching(const Graph& g) {
  return find_perfect_matching(g, g.vertices());
}
/// Every perfect matching of g, in lexicographic order of their sorted edge lists.
/// Throws CapExceeded beyond `limit` matchings.
std::vector<Matching> all_perfect_matchings(const Graph& g, std::size_t limit = 100000);

/// Maximum number of internally vertex-disjoint s-t paths in g[within] (s, t nonadjacent).
int local_vertex_connectivity(const Graph& g, VertexSet within, Vertex s, Vertex t);

/// κ(g[within]); |within| - 1 for complete graphs, 0 when disconnected.
int vertex_connectivity(const Graph& g, VertexSet within);
inline int vertex_connectivity(const Graph& g) { return vertex_connectivity(g, g.vertices()); }

/// |within| > k and no set of at most k-1 vertices disconnects g[within].
bool is_k_connected(const Graph& g, int k, VertexSet within);
inline bool is_k_connected(const Graph& g, int k) { return is_k_connected(g, k, g.vertices()); }

/// `count` fully vertex-disjoint a-b paths in g[within], extracted from a unit
/// vertex-capacity max flow. Throws InsufficientConnectivity if the flow is smaller.
PathSystem disjoint_paths(const Graph& g, VertexSet a, VertexSet b, int count, VertexSet within);
inline PathSystem disjoint_paths(const Graph& g, VertexSet a, VertexSet b, int count) {
  return disjoint_paths(g, a, b, count, g.vertices());
}

int min_degree(const Graph& g, VertexSet within);
inline int min_degree(const Graph& g) { return min_degree(g, g.vertices()); }

nlohmann::json to_json(const Matching& m);
nlohmann::json to_json(const PathSystem& ps);

}  // namespace slowcolor
