#pragma once

#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "slowcolor/graph.hpp"

namespace slowcolor {

struct SolveOptions {
  int cap = 14;  // largest order accepted; at most kMaxVertices
  std::optional<std::chrono::milliseconds> timeout;
  bool strict = false;  // disables splitting states into connected components
};

struct SolveStats {
  std::uint64_t states_memoized = 0;
  std::uint64_t nodes_expanded = 0;
  double elapsed_ms = 0.0;
};

struct SolveResult {
  int value = 0;
  VertexSet best_opening;
  SolveStats stats;
};

/// Exact slow coloring values of the subgames of one graph.
///
/// val(R) = 0 for R = ∅, otherwise the max over nonempty M ⊆ R of
/// |M| + min over maximal independent D ⊆ M of val(R \ D).
/// Values are memoized by remaining set, so repeated queries on one Solver are cheap.
/// Public members are serialized by an internal mutex.
class Solver {
 public:
  /// Throws CapExceeded if the graph is larger than opts.cap.
  explicit Solver(Graph g, SolveOptions opts = {});

  const Graph& graph() const { return graph_; }
  const SolveOptions& options() const { return opts_; }

  int value(VertexSet remaining);
  int value() { return value(graph_.vertices()); }

  /// |m| + min over Painter replies of val(remaining \ D).
  int mark_payoff(VertexSet remaining, VertexSet m);

  /// An optimal mark; ties go to the smallest bitmask.
  VertexSet optimal_lister_move(VertexSet remaining);
  /// A reply minimizing the continuation value; ties go to the smallest bitmask.
  VertexSet optimal_painter_reply(VertexSet remaining, VertexSet m);

  SolveResult solve();
  SolveStats stats() const;

  /// Maximal independent subsets of m, largest first then by bitmask.
  const std::vector<VertexSet>& replies(VertexSet m);

 private:
  int evaluate(VertexSet r);
  int payoff_locked(VertexSet r, VertexSet m, int needed);
  void arm_deadline();
  void tick();
  int* memo_slot(VertexSet r);

  Graph graph_;
  SolveOptions opts_;
  std::vector<int> dense_memo_;
  std::unordered_map<std::uint64_t, int> sparse_memo_;
  std::vector<std::vector<VertexSet>> dense_replies_;
  std::unordered_map<std::uint64_t, std::vector<VertexSet>> sparse_replies_;
  std::uint64_t memoized_ = 0;
  std::uint64_t expanded_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  mutable std::mutex mu_;
};

/// Solves g from scratch. strict=false splits every state into components.
SolveResult solve(const Graph& g, SolveOptions opts = {});

/// Solves each connected component of g on its own and sums the values.
SolveResult solve_additive(const Graph& g, SolveOptions opts = {});

/// ⌊3n/2⌋, the value of the n-vertex path.
int closed_form_path(int n);

/// max{k : k(k+1)/2 ≤ r}: the reading of u_r that matches the exact values of stars.
int star_u(int r);
/// n + u(n-1), the value of the star K_{1,n-1}.
int closed_form_star(int n);

/// Largest possible value on n vertices, reached by K_n: n(n+1)/2.
constexpr int triangular(int n) { return n * (n + 1) / 2; }

nlohmann::json to_json(const SolveResult& r, bool include_timing = false);

}  // namespace slowcolor
