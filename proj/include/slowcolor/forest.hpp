#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "slowcolor/connectivity.hpp"
#include "slowcolor/graph.hpp"

namespace slowcolor {

/// G⁻ = G - D seen as an induced view, with the β-vertices (surviving matching
/// partners of D) and the matching edges that survive the deletion.
struct BetaContext {
  Graph graph;
  VertexSet alive;    // V(G⁻)
  VertexSet deleted;  // D
  VertexSet betas;    // D′
  EdgeSet surviving_matching;  // F₀
};

BetaContext beta_context(const Graph& g, const Matching& matching, VertexSet deleted);

/// Drops one β-vertex from G⁻: the odd-|D′| decomposition G⁻ = G₁⁻ ⊔ {v}.
BetaContext without_beta(const BetaContext& ctx, Vertex beta);

/// Lower-index half to the first set. Throws PreconditionError on odd size.
std::pair<VertexSet, VertexSet> split_betas(VertexSet betas);

enum class DegreeMode { Strict, OddException };

struct ForestCertificate {
  EdgeSet edges;
  std::map<Vertex, int> degrees;  // over the ambient vertex set
  DegreeMode mode = DegreeMode::Strict;
};

ForestCertificate make_certificate(VertexSet ambient, EdgeSet edges, DegreeMode mode);

/// Nullopt when the certificate is a spanning forest of g[ambient] with degrees in
/// {1,3} (plus, in OddException mode, exactly one vertex of degree 0 or 6); otherwise
/// the first violated condition.
std::optional<std::string> check_certificate(const Graph& g, VertexSet ambient, const ForestCertificate& cert);

/// F₁ = F₀ ⊕ E(paths), followed by removal of whole cycles until acyclic.
ForestCertificate build_forest(const BetaContext& ctx, const PathSystem& paths);

/// The odd-degree edge set before cycle stripping. Exposed for the parity checks.
EdgeSet forest_before_stripping(const BetaContext& ctx, const PathSystem& paths);

/// Removes the full edge set of the first found cycle until none remain.
EdgeSet strip_cycles(const Graph& g, EdgeSet edges);

inline constexpr int kForestSearchMaxVertices = 12;
inline constexpr int kForestSearchMaxEdges = 24;

/// Exhaustive search for a {1,3}-degree spanning forest of g[within]. With
/// allow_odd_exception and |within| odd, one vertex of degree 0 or 6 is allowed.
/// Throws CapExceeded above 12 vertices or 24 edges.
std::optional<ForestCertificate> spanning_forest_13_exists(const Graph& g, bool allow_odd_exception,
                                                           VertexSet within);
inline std::optional<ForestCertificate> spanning_forest_13_exists(const Graph& g, bool allow_odd_exception) {
  return spanning_forest_13_exists(g, allow_odd_exception, g.vertices());
}

nlohmann::json to_json(const ForestCertificate& cert);
nlohmann::json to_json(const BetaContext& ctx);

}  // namespace slowcolor
