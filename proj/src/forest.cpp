#include "slowcolor/forest.hpp"

#include <array>
#include <functional>
#include <numeric>
#include <vector>

#include "slowcolor/error.hpp"

namespace slowcolor {

BetaContext beta_context(const Graph& g, const Matching& matching, VertexSet deleted) {
  if (!matching.is_perfect_on(g.vertices())) throw PreconditionError("matching not perfect");
  if (!is_independent(g, deleted)) throw PreconditionError("D not independent");

  BetaContext ctx{g, g.vertices() - deleted, deleted, {}, {}};
  for (const Edge& e : matching.edges()) {
    const bool u_gone = deleted.contains(e.u);
    const bool v_gone = deleted.contains(e.v);
    if (u_gone) ctx.betas.insert(e.v);
    if (v_gone) ctx.betas.insert(e.u);
    if (!u_gone && !v_gone) ctx.surviving_matching.insert(e);
  }
  return ctx;
}

BetaContext without_beta(const BetaContext& ctx, Vertex beta) {
  if (!ctx.betas.contains(beta)) throw PreconditionError("vertex " + std::to_string(beta) + " is not a beta-vertex");
  BetaContext out = ctx;
  out.alive.erase(beta);
  out.betas.erase(beta);
  return out;
}

std::pair<VertexSet, VertexSet> split_betas(VertexSet betas) {
  if (betas.size() % 2 != 0) throw PreconditionError("cannot split an odd number of beta-vertices");
  VertexSet lower;
  int half = betas.size() / 2;
  for (Vertex v : betas) {
    if (half-- == 0) break;
    lower.insert(v);
  }
  return {lower, betas - lower};
}

ForestCertificate make_certificate(VertexSet ambient, EdgeSet edges, DegreeMode mode) {
  ForestCertificate cert{std::move(edges), {}, mode};
  for (Vertex v : ambient) cert.degrees[v] = cert.edges.degree(v);
  return cert;
}

std::optional<std::string> check_certificate(const Graph& g, VertexSet ambient, const ForestCertificate& cert) {
  for (const Edge& e : cert.edges) {
    if (!ambient.contains(e.u) || !ambient.contains(e.v)) return "edge leaves the vertex set";
    if (!g.adjacent(e.u, e.v)) return "edge is not in the graph";
  }
  if (find_cycle(g, cert.edges)) return "edge set contains a cycle";
  int exceptional = 0;
  for (Vertex v : ambient) {
    int d = cert.edges.degree(v);
    auto it = cert.degrees.find(v);
    if (it == cert.degrees.end() || it->second != d) return "degree profile disagrees with the edges";
    if (d == 1 || d == 3) continue;
    if (cert.mode == DegreeMode::OddException && (d == 0 || d == 6)) {
      ++exceptional;
      continue;
    }
    return "vertex " + std::to_string(v) + " has degree " + std::to_string(d);
  }
  if (cert.mode == DegreeMode::OddException && exceptional != 1) {
    return "odd-exception mode needs exactly one vertex of degree 0 or 6";
  }
  if (cert.degrees.size() != static_cast<std::size_t>(ambient.size())) {
    return "degree profile covers the wrong vertex set";
  }
  return std::nullopt;
}

namespace {

void check_pipeline_input(const BetaContext& ctx, const PathSystem& paths) {
  if (ctx.betas.size() % 2 != 0) throw PreconditionError("odd number of beta-vertices");
  const int half = ctx.betas.size() / 2;
  if (static_cast<int>(paths.paths.size()) != half || paths.sources.size() != half ||
      paths.sinks.size() != half || paths.sources.intersects(paths.sinks) ||
      (paths.sources | paths.sinks) != ctx.betas) {
    throw PreconditionError("path endpoints not in D' split");
  }
  if (auto err = check_path_system(ctx.graph, ctx.alive, paths)) {
    throw PreconditionError(*err == "paths not vertex-disjoint" ? *err : "invalid path system: " + *err);
  }
  for (const auto& p : paths.paths) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (ctx.betas.contains(p[i])) throw PreconditionError("paths not vertex-disjoint");
    }
    if (p.size() < 2) throw PreconditionError("path endpoints not in D' split");
  }
}

}  // namespace

EdgeSet forest_before_stripping(const BetaContext& ctx, const PathSystem& paths) {
  check_pipeline_input(ctx, paths);
  return symmetric_difference(ctx.surviving_matching, paths.edge_set());
}

EdgeSet strip_cycles(const Graph& g, EdgeSet edges) {
  while (auto c = find_cycle(g, edges)) {
    for (std::size_t i = 0; i < c->size(); ++i) edges.erase(Edge((*c)[i], (*c)[(i + 1) % c->size()]));
  }
  return edges;
}

ForestCertificate build_forest(const BetaContext& ctx, const PathSystem& paths) {
  EdgeSet f1 = forest_before_stripping(ctx, paths);
  return make_certificate(ctx.alive, strip_cycles(ctx.graph, std::move(f1)), DegreeMode::Strict);
}

std::optional<ForestCertificate> spanning_forest_13_exists(const Graph& g, bool allow_odd_exception,
                                                           VertexSet within) {
  const std::vector<Vertex> verts = within.to_vector();
  const EdgeSet all = g.edge_set(within);
  if (static_cast<int>(verts.size()) > kForestSearchMaxVertices ||
      static_cast<int>(all.size()) > kForestSearchMaxEdges) {
    throw CapExceeded("instance too large for exhaustive forest search");
  }
  const bool odd = verts.size() % 2 == 1;
  // Degrees of an all-{1,3} forest sum to an even number only for even orders.
  if (odd && !allow_odd_exception) return std::nullopt;
  const int exceptions_allowed = odd ? 1 : 0;

  const std::vector<Edge> edges(all.begin(), all.end());
  std::array<int, kMaxVertices> last_edge{};
  last_edge.fill(-1);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    last_edge[edges[i].u] = i;
    last_edge[edges[i].v] = i;
  }
  const int max_degree = exceptions_allowed ? 6 : 3;

  std::array<int, kMaxVertices> degree{};
  std::array<int, kMaxVertices> root{};
  std::iota(root.begin(), root.end(), 0);
  std::vector<Edge> chosen;

  auto ok_final = [](int d, int& exceptions) {
    if (d == 1 || d == 3) return true;
    if ((d == 0 || d == 6) && exceptions > 0) {
      --exceptions;
      return true;
    }
    return false;
  };

  int start_exceptions = exceptions_allowed;
  for (Vertex v : verts) {
    if (last_edge[v] < 0 && !ok_final(0, start_exceptions)) return std::nullopt;
  }

  std::function<bool(std::size_t, int)> search = [&](std::size_t i, int exceptions) -> bool {
    if (i == edges.size()) return !odd || exceptions == 0;
    const Edge e = edges[i];
    auto settle = [&](int& ex) {
      for (Vertex w : {e.u, e.v}) {
        if (last_edge[w] == static_cast<int>(i) && !ok_final(degree[w], ex)) return false;
      }
      return true;
    };
    // Include e when it joins two trees and keeps both degrees feasible.
    if (root[e.u] != root[e.v] && degree[e.u] < max_degree && degree[e.v] < max_degree) {
      const auto saved_root = root;
      const int from = root[e.v];
      const int to = root[e.u];
      for (Vertex w : verts) {
        if (root[w] == from) root[w] = to;
      }
      ++degree[e.u];
      ++degree[e.v];
      chosen.push_back(e);
      int ex = exceptions;
      if (settle(ex) && search(i + 1, ex)) return true;
      chosen.pop_back();
      --degree[e.u];
      --degree[e.v];
      root = saved_root;
    }
    int ex = exceptions;
    return settle(ex) && search(i + 1, ex);
  };

  if (!search(0, start_exceptions)) return std::nullopt;
  return make_certificate(within, EdgeSet(chosen.begin(), chosen.end()),
                          odd ? DegreeMode::OddException : DegreeMode::Strict);
}

nlohmann::json to_json(const ForestCertificate& cert) {
  nlohmann::json degrees = nlohmann::json::object();
  for (const auto& [v, d] : cert.degrees) degrees[std::to_string(v)] = d;
  return {{"edges", to_json(cert.edges)},
          {"degrees", degrees},
          {"mode", cert.mode == DegreeMode::Strict ? "strict" : "odd-exception"}};
}

nlohmann::json to_json(const BetaContext& ctx) {
  return {{"alive", to_json(ctx.alive)},
          {"deleted", to_json(ctx.deleted)},
          {"betas", to_json(ctx.betas)},
          {"surviving_matching", to_json(ctx.surviving_matching)}};
}

}  // namespace slowcolor
