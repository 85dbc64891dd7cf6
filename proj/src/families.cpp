#include "slowcolor/families.hpp"

#include <charconv>
#include <vector>

#include "slowcolor/error.hpp"

namespace slowcolor::families {

Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}},
               {"1", "2", "3", "4", "5", "6"});
}

Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph star(int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(0, i);
  return Graph(n, es);
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

Graph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  }
  return Graph(n, es);
}

Graph edgeless(int n) { return Graph(n, std::span<const Edge>{}); }

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  }
  return Graph(a + b, es);
}

Graph cube(int d) {
  if (d < 1 || d > 6) throw PreconditionError("cube dimension must be in 1..6");
  const int n = 1 << d;
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < d; ++b) {
      int w = v ^ (1 << b);
      if (v < w) es.emplace_back(v, w);
    }
  }
  return Graph(n, es);
}

Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    es.emplace_back(i, i + 5);                // spokes
    es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (const Edge& e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), es);
}

namespace {

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Graph> builtin(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view name = spec.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (name == "prism" && arg.empty()) return prism();
  if (name == "petersen" && arg.empty()) return petersen();
  if (name == "cube") {
    if (arg.empty()) return cube(3);
    if (auto d = to_int(arg)) return cube(*d);
    return std::nullopt;
  }
  if (name == "bipartite") {
    auto comma = arg.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto a = to_int(arg.substr(0, comma));
    auto b = to_int(arg.substr(comma + 1));
    if (!a || !b || *a < 1 || *b < 1) return std::nullopt;
    return complete_bipartite(*a, *b);
  }
  auto n = to_int(arg);
  if (!n || *n < 1) return std::nullopt;
  if (name == "path") return path(*n);
  if (name == "star") return star(*n);
  if (name == "cycle") return cycle(*n);
  if (name == "complete") return complete(*n);
  if (name == "edgeless") return edgeless(*n);
  return std::nullopt;
}

int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

Graph random_graph(int n, int edge_percent, Rng& rng) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform_int(rng, 0, 99) < edge_percent) es.emplace_back(i, j);
    }
  }
  return Graph(n, es);
}

Graph random_tree(int n, Rng& rng) {
  if (n <= 2) return path(n);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = uniform_int(rng, 0, n - 1);
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  std::vector<Edge> es;
  for (int x : pruefer) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        es.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        es.emplace_back(u, v);
        break;
      }
    }
  }
  return Graph(n, es);
}

Graph random_forest(int n, Rng& rng) {
  int left = n;
  std::optional<Graph> acc;
  while (left > 0) {
    int part = uniform_int(rng, 1, left);
    Graph t = random_tree(part, rng);
    acc = acc ? disjoint_union(*acc, t) : t;
    left -= part;
  }
  return *acc;
}

}  // namespace slowcolor::families
