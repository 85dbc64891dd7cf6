#include "slowcolor/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <unordered_set>

#include "slowcolor/error.hpp"

namespace slowcolor {

Matching::Matching(const Graph& g, EdgeSet edges) : edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
      throw PreconditionError("matching edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " is not an edge of the graph");
    }
    if (covered_.contains(e.u) || covered_.contains(e.v)) {
      throw PreconditionError("matching edges share a vertex");
    }
    covered_.insert(e.u);
    covered_.insert(e.v);
  }
}

std::optional<Vertex> Matching::partner(Vertex v) const {
  for (const Edge& e : edges_) {
    if (e.touches(v)) return e.other(v);
  }
  return std::nullopt;
}

EdgeSet PathSystem::edge_set() const {
  EdgeSet out;
  for (const auto& p : paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.insert(Edge(p[i], p[i + 1]));
  }
  return out;
}

VertexSet PathSystem::vertices() const {
  VertexSet s;
  for (const auto& p : paths) {
    for (Vertex v : p) s.insert(v);
  }
  return s;
}

std::optional<std::string> check_path_system(const Graph& g, VertexSet within, const PathSystem& ps) {
  VertexSet used;
  for (const auto& p : ps.paths) {
    if (p.empty()) return "empty path";
    if (!ps.sources.contains(p.front())) return "path does not start in the source set";
    if (!ps.sinks.contains(p.back())) return "path does not end in the sink set";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= g.order() || !within.contains(p[i])) return "path leaves the vertex set";
      if (used.contains(p[i])) return "paths not vertex-disjoint";
      used.insert(p[i]);
      if (i + 1 < p.size() && (p[i + 1] < 0 || p[i + 1] >= g.order() || !g.adjacent(p[i], p[i + 1]))) {
        return "consecutive path vertices are not adjacent";
      }
    }
  }
  return std::nullopt;
}

std::optional<Matching> find_perfect_matching(const Graph& g, VertexSet within) {
  if (within.size() % 2 != 0) return std::nullopt;
  // Match the lowest uncovered vertex first; remember uncovered sets that failed.
  std::unordered_set<std::uint64_t> dead;
  std::vector<Edge> chosen;
  std::function<bool(VertexSet)> extend = [&](VertexSet rest) -> bool {
    if (rest.empty()) return true;
    if (dead.contains(rest.bits())) return false;
    Vertex v = rest.lowest();
    for (Vertex w : g.neighbors(v) & rest) {
      chosen.emplace_back(v, w);
      if (extend(rest.without(v).without(w))) return true;
      chosen.pop_back();
    }
    dead.insert(rest.bits());
    return false;
  };
  if (!extend(within)) return std::nullopt;
  return Matching(g, EdgeSet(chosen.begin(), chosen.end()));
}

std::vector<Matching> all_perfect_matchings(const Graph& g, std::size_t limit) {
  std::vector<Matching> out;
  if (g.order() % 2 != 0) return out;
  std::vector<Edge> chosen;
  std::function<void(VertexSet)> extend = [&](VertexSet rest) {
    if (rest.empty()) {
      if (out.size() == limit) throw CapExceeded("more than " + std::to_string(limit) + " perfect matchings");
      out.emplace_back(g, EdgeSet(chosen.begin(), chosen.end()));
      return;
    }
    Vertex v = rest.lowest();
    for (Vertex w : g.neighbors(v) & rest) {
      chosen.emplace_back(v, w);
      extend(rest.without(v).without(w));
      chosen.pop_back();
    }
  };
  extend(g.vertices());
  return out;
}

namespace {

// Unit-capacity residual network over split vertices: in(v) = 2v, out(v) = 2v + 1.
class FlowNetwork {
 public:
  static constexpr int kInf = std::numeric_limits<int>::max() / 4;

  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  int add_arc(int from, int to, int cap) {
    int id = static_cast<int>(to_.size());
    push(from, to, cap);
    push(to, from, 0);
    return id;
  }

  int max_flow(int s, int t, int limit = kInf) {
    int flow = 0;
    while (flow < limit) {
      std::vector<int> via(head_.size(), -1);
      std::queue<int> q;
      q.push(s);
      via[s] = -2;
      while (!q.empty() && via[t] == -1) {
        int x = q.front();
        q.pop();
        for (int a = head_[x]; a != -1; a = next_[a]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            q.push(to_[a]);
          }
        }
      }
      if (via[t] == -1) break;
      int push_amount = kInf;
      for (int x = t; x != s; x = to_[via[x] ^ 1]) push_amount = std::min(push_amount, cap_[via[x]]);
      push_amount = std::min(push_amount, limit - flow);
      for (int x = t; x != s; x = to_[via[x] ^ 1]) {
        cap_[via[x]] -= push_amount;
        cap_[via[x] ^ 1] += push_amount;
      }
      flow += push_amount;
    }
    return flow;
  }

  // Flow currently on forward arc `id`.
  int flow_on(int id) const { return cap_[id ^ 1]; }
  int arc_target(int id) const { return to_[id]; }

  template <class Fn>
  void for_each_arc(int node, Fn&& fn) const {
    for (int a = head_[node]; a != -1; a = next_[a]) fn(a);
  }

 private:
  void push(int from, int to, int cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_, to_, cap_, next_;
};

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }

// Arcs out(u) -> in(v) for every edge inside `within`; in(v) -> out(v) with
// capacity `vertex_cap(v)`.
template <class CapFn>
FlowNetwork split_network(const Graph& g, VertexSet within, int extra_nodes, CapFn vertex_cap) {
  FlowNetwork net(2 * g.order() + extra_nodes);
  for (Vertex v : within) net.add_arc(in_node(v), out_node(v), vertex_cap(v));
  for (Vertex u : within) {
    for (Vertex v : g.neighbors(u) & within) net.add_arc(out_node(u), in_node(v), 1);
  }
  return net;
}

}  // namespace

int local_vertex_connectivity(const Graph& g, VertexSet within, Vertex s, Vertex t) {
  if (g.adjacent(s, t)) throw PreconditionError("terminals must be nonadjacent");
  auto net = split_network(g, within, 0, [&](Vertex v) { return v == s || v == t ? FlowNetwork::kInf : 1; });
  return net.max_flow(out_node(s), in_node(t));
}

int vertex_connectivity(const Graph& g, VertexSet within) {
  const int size = within.size();
  if (size <= 1) return 0;
  if (!is_connected(g, within)) return 0;
  int best = size - 1;
  // A minimum separator misses one of the first best+1 vertices; that vertex is
  // separated from some later vertex.
  std::vector<Vertex> order = within.to_vector();
  for (int i = 0; i < size && i <= best; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (g.adjacent(order[i], order[j])) continue;
      best = std::min(best, local_vertex_connectivity(g, within, order[i], order[j]));
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, int k, VertexSet within) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  return within.size() > k && vertex_connectivity(g, within) >= k;
}

PathSystem disjoint_paths(const Graph& g, VertexSet a, VertexSet b, int count, VertexSet within) {
  if (a.intersects(b)) throw PreconditionError("source and sink sets must be disjoint");
  if (a.size() != count || b.size() != count) {
    throw PreconditionError("source and sink sets must both have size " + std::to_string(count));
  }
  if (!a.subset_of(within) || !b.subset_of(within)) {
    throw PreconditionError("terminals must lie inside the vertex set");
  }
  PathSystem ps{{}, a, b};
  if (count == 0) return ps;

  const int source = 2 * g.order();
  const int sink = source + 1;
  auto net = split_network(g, within, 2, [](Vertex) { return 1; });
  for (Vertex v : a) net.add_arc(source, in_node(v), 1);
  for (Vertex v : b) net.add_arc(out_node(v), sink, 1);
  const int flow = net.max_flow(source, sink, count);
  if (flow < count) {
    throw InsufficientConnectivity("insufficient connectivity: only " + std::to_string(flow) + " of " +
                                   std::to_string(count) + " disjoint paths exist");
  }

  // Every terminal's unit is used by its own path, so following flow from each
  // source's out-node is unambiguous until it reaches a sink.
  for (Vertex start : a) {
    std::vector<Vertex> p{start};
    Vertex cur = start;
    while (!b.contains(cur)) {
      Vertex next = -1;
      net.for_each_arc(out_node(cur), [&](int arc) {
        int target = net.arc_target(arc);
        if (next < 0 && arc % 2 == 0 && target < source && target % 2 == 0 && net.flow_on(arc) > 0) {
          next = target / 2;
        }
      });
      if (next < 0) throw Error("flow decomposition lost its path");
      p.push_back(next);
      cur = next;
    }
    ps.paths.push_back(std::move(p));
  }
  return ps;
}

int min_degree(const Graph& g, VertexSet within) {
  int best = std::numeric_limits<int>::max();
  for (Vertex v : within) best = std::min(best, (g.neighbors(v) & within).size());
  return within.empty() ? 0 : best;
}

nlohmann::json to_json(const Matching& m) { return {{"matching", to_json(m.edges())}}; }

nlohmann::json to_json(const PathSystem& ps) {
  return {{"paths", ps.paths}, {"sources", to_json(ps.sources)}, {"sinks", to_json(ps.sinks)}};
}

}  // namespace slowcolor
