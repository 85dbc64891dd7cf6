#pragma once

#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "slowcolor/vertex_set.hpp"

namespace slowcolor {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> es) : edges_(es) {}
  template <class It>
  EdgeSet(It first, It last) : edges_(first, last) {}

  void insert(Edge e) { edges_.insert(e); }
  void erase(Edge e) { edges_.erase(e); }
  /// Inserts e if absent, removes it otherwise.
  void toggle(Edge e);
  bool contains(Edge e) const { return edges_.contains(e); }

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  int degree(Vertex v) const;
  /// Vertices incident to at least one edge.
  VertexSet touched() const;

  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::set<Edge> edges_;
};

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

/// Undirected simple graph on 1..64 vertices. Immutable after construction.
class Graph {
 public:
  /// Throws PreconditionError on loops, duplicates, out-of-range indices or a bad order.
  Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});
  Graph(int n, std::initializer_list<Edge> edges, std::vector<std::string> labels = {})
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels)) {}

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int degree(Vertex v) const { return adj_[v].size(); }
  std::size_t edge_count() const;
  /// Edges sorted lexicographically.
  std::vector<Edge> edges() const;
  /// Edges with both endpoints in `within`.
  EdgeSet edge_set(VertexSet within) const;
  EdgeSet edge_set() const { return edge_set(vertices()); }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label if present, otherwise the decimal index.
  std::string label(Vertex v) const;
  /// Inverse of label(); accepts a label or, for unlabeled graphs, an index.
  std::optional<Vertex> find_vertex(std::string_view token) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

/// Parses the edge-list text format, or the JSON object format when the text
/// starts with '{'.
Graph load_graph(std::string_view source);
Graph load_graph_file(const std::string& path);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
std::string graph_to_edge_list(const Graph& g);

nlohmann::json to_json(VertexSet s);
nlohmann::json to_json(const EdgeSet& es);
VertexSet vertex_set_from_json(const nlohmann::json& j, int n);
/// Renders a set with graph labels, e.g. "{1, 4}".
std::string format_set(const Graph& g, VertexSet s);

bool is_independent(const Graph& g, VertexSet s);

/// All D ⊆ m independent in g and maximal within m, ascending by bitmask.
/// Throws PreconditionError when m is empty or leaves V(g).
std::vector<VertexSet> maximal_independent_subsets(const Graph& g, VertexSet m);

int independence_number(const Graph& g, VertexSet within);
inline int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

/// Connected components of g[within], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
bool is_connected(const Graph& g, VertexSet within);

/// A cycle of the subgraph (V(g), edges) as a vertex sequence without repeating
/// the start, found by smallest-index-first depth-first search.
std::optional<std::vector<Vertex>> find_cycle(const Graph& g, const EdgeSet& edges);

bool is_acyclic(const Graph& g, VertexSet within);

}  // namespace slowcolor
