#include "slowcolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "slowcolor/error.hpp"

namespace slowcolor {

void EdgeSet::toggle(Edge e) {
  if (!edges_.erase(e)) edges_.insert(e);
}

int EdgeSet::degree(Vertex v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [v](const Edge& e) { return e.touches(v); }));
}

VertexSet EdgeSet::touched() const {
  VertexSet s;
  for (const Edge& e : edges_) {
    s.insert(e.u);
    s.insert(e.v);
  }
  return s;
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out = a;
  for (const Edge& e : b) out.toggle(e);
  return out;
}

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1 || n > kMaxVertices) {
    throw PreconditionError("vertex count " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxVertices));
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw PreconditionError("expected " + std::to_string(n) + " labels, got " +
                            std::to_string(labels_.size()));
  }
  adj_.assign(n, VertexSet{});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
    if (adj_[e.u].contains(e.v)) {
      throw PreconditionError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet s : adj_) twice += s.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

EdgeSet Graph::edge_set(VertexSet within) const {
  EdgeSet out;
  for (Vertex u : within) {
    for (Vertex v : adj_[u] & within) {
      if (u < v) out.insert(Edge(u, v));
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<Vertex> Graph::find_vertex(std::string_view token) const {
  if (!labels_.empty()) {
    auto it = std::find(labels_.begin(), labels_.end(), token);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v < 0 || v >= n_) {
    return std::nullopt;
  }
  return v;
}

namespace {

// Splits off '#' comments and returns whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_int(const std::string& tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return value;
}

Graph load_edge_list(std::string_view source) {
  std::istringstream in{std::string(source)};
  std::string line;
  int lineno = 0;
  int n = -1;
  int m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw ParseError(lineno, "expected two integers");
    int a = parse_int(toks[0], lineno);
    int b = parse_int(toks[1], lineno);
    if (n < 0) {
      if (a < 1 || a > kMaxVertices) {
        throw ParseError(lineno, "vertex count must be in 1.." + std::to_string(kMaxVertices));
      }
      if (b < 0) throw ParseError(lineno, "negative edge count");
      n = a;
      m = b;
      continue;
    }
    if (a == b) throw ParseError(lineno, "loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError(lineno, "vertex index out of range 0.." + std::to_string(n - 1));
    }
    Edge e(a, b);
    if (!seen.insert(e).second) {
      throw ParseError(lineno, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(0, "missing 'n m' header");
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(lineno, "header declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

}  // namespace

Graph load_graph(std::string_view source) {
  auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && source[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return load_edge_list(source);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  nlohmann::json j{{"n", g.order()}, {"edges", edges}};
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError(0, "graph JSON needs an integer field 'n'");
  }
  int n = j["n"].get<int>();
  if (n < 1 || n > kMaxVertices) {
    throw ParseError(0, "vertex count must be in 1.." + std::to_string(kMaxVertices));
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError(0, "'edges' must be an array");
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
      const auto& pair = j["edges"][i];
      const std::string where = "edge #" + std::to_string(i) + ": ";
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        throw ParseError(0, where + "expected [u, v]");
      }
      int a = pair[0].get<int>();
      int b = pair[1].get<int>();
      if (a == b) throw ParseError(0, where + "loop at vertex " + std::to_string(a));
      if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(0, where + "vertex index out of range");
      if (!seen.insert(Edge(a, b)).second) throw ParseError(0, where + "duplicate edge");
      edges.emplace_back(a, b);
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels") && !j["labels"].is_null()) {
    if (!j["labels"].is_array()) throw ParseError(0, "'labels' must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError(0, "'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != n) throw ParseError(0, "label count differs from n");
  }
  return Graph(n, edges, std::move(labels));
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

nlohmann::json to_json(VertexSet s) { return s.to_vector(); }

nlohmann::json to_json(const EdgeSet& es) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : es) out.push_back({e.u, e.v});
  return out;
}

VertexSet vertex_set_from_json(const nlohmann::json& j, int n) {
  if (!j.is_array()) throw ParseError(0, "expected an array of vertex indices");
  VertexSet s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(0, "vertex indices must be integers");
    int v = x.get<int>();
    if (v < 0 || v >= n) throw ParseError(0, "vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

std::string format_set(const Graph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ", ";
    out += g.label(v);
    first = false;
  }
  return out + "}";
}

bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

std::vector<VertexSet> maximal_independent_subsets(const Graph& g, VertexSet m) {
  if (m.empty()) throw PreconditionError("marked set must be nonempty");
  if (!m.subset_of(g.vertices())) throw PreconditionError("marked set leaves the vertex range");

  const std::vector<Vertex> order = m.to_vector();
  std::vector<VertexSet> out;
  // Include/exclude in index order. An excluded vertex must end up dominated by
  // the chosen set; the branch dies once none of its remaining candidates can.
  std::function<void(std::size_t, VertexSet, VertexSet)> branch =
      [&](std::size_t i, VertexSet chosen, VertexSet excluded) {
        VertexSet undecided = m - chosen - excluded;
        for (Vertex x : excluded) {
          if (!g.neighbors(x).intersects(chosen) && !g.neighbors(x).intersects(undecided)) {
            return;
          }
        }
        if (i == order.size()) {
          for (Vertex x : excluded) {
            if (!g.neighbors(x).intersects(chosen)) return;
          }
          out.push_back(chosen);
          return;
        }
        Vertex v = order[i];
        if (!g.neighbors(v).intersects(chosen)) branch(i + 1, chosen.with(v), excluded);
        branch(i + 1, chosen, excluded.with(v));
      };
  branch(0, VertexSet{}, VertexSet{});
  std::sort(out.begin(), out.end());
  return out;
}

int independence_number(const Graph& g, VertexSet within) {
  if (within.empty()) return 0;
  // Branch on a vertex of maximum degree inside `within`.
  Vertex pivot = within.lowest();
  int best_deg = -1;
  for (Vertex v : within) {
    int d = (g.neighbors(v) & within).size();
    if (d > best_deg) {
      best_deg = d;
      pivot = v;
    }
  }
  if (best_deg == 0) return within.size();
  int skip = independence_number(g, within.without(pivot));
  int take = 1 + independence_number(g, within - g.neighbors(pivot) - VertexSet::single(pivot));
  return std::max(skip, take);
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = (next & rest) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool is_connected(const Graph& g, VertexSet within) {
  return components(g, within).size() <= 1;
}

std::optional<std::vector<Vertex>> find_cycle(const Graph& g, const EdgeSet& edges) {
  std::vector<VertexSet> adj(g.order());
  for (const Edge& e : edges) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<Vertex> stack;
  VertexSet visited;
  VertexSet on_stack;

  std::function<std::optional<std::vector<Vertex>>(Vertex, Vertex)> dfs =
      [&](Vertex v, Vertex from) -> std::optional<std::vector<Vertex>> {
    visited.insert(v);
    on_stack.insert(v);
    stack.push_back(v);
    for (Vertex w : adj[v]) {
      if (w == from) continue;
      if (on_stack.contains(w)) {
        auto it = std::find(stack.begin(), stack.end(), w);
        return std::vector<Vertex>(it, stack.end());
      }
      if (!visited.contains(w)) {
        if (auto c = dfs(w, v)) return c;
      }
    }
    stack.pop_back();
    on_stack.erase(v);
    return std::nullopt;
  };

  for (Vertex v = 0; v < g.order(); ++v) {
    if (!visited.contains(v) && !adj[v].empty()) {
      if (auto c = dfs(v, -1)) return c;
    }
  }
  return std::nullopt;
}

bool is_acyclic(const Graph& g, VertexSet within) {
  return !find_cycle(g, g.edge_set(within)).has_value();
}

}  // namespace slowcolor
