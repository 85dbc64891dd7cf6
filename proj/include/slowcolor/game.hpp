#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slowcolor/graph.hpp"

namespace slowcolor {

struct Move {
  VertexSet marked;   // Lister's mark M
  VertexSet deleted;  // Painter's reply D

  friend bool operator==(const Move&, const Move&) = default;
};

/// Immutable snapshot of a slow coloring game. Copies share the graph.
class GameState {
 public:
  explicit GameState(Graph g);

  const Graph& graph() const { return *graph_; }
  std::shared_ptr<const Graph> shared_graph() const { return graph_; }
  VertexSet remaining() const { return remaining_; }
  int score() const { return score_; }
  const std::vector<Move>& transcript() const { return transcript_; }

 private:
  friend GameState apply_move(const GameState&, VertexSet, VertexSet);

  std::shared_ptr<const Graph> graph_;
  VertexSet remaining_;
  int score_ = 0;
  std::vector<Move> transcript_;
};

GameState new_game(Graph g);

/// Nullopt if m is a legal mark in s, otherwise a short reason.
std::optional<std::string> check_mark(const GameState& s, VertexSet m);

/// Nullopt if d is a maximal independent subset of m, otherwise a machine-readable
/// reason such as "not-maximal: vertex 5 addable" (labels are the graph's).
std::optional<std::string> check_reply(const Graph& g, VertexSet m, VertexSet d);

/// Maximal independent subsets of g[m]; maximality is relative to m only.
std::vector<VertexSet> legal_painter_replies(const GameState& s, VertexSet m);

/// Throws PreconditionError("illegal mark: ...") or ("reply not maximal-independent: ...").
GameState apply_move(const GameState& s, VertexSet m, VertexSet d);

inline bool is_terminal(const GameState& s) { return s.remaining().empty(); }

nlohmann::json transcript_to_json(const GameState& s);
/// Replays a transcript document through apply_move; throws on any illegal step
/// or on a recorded score that disagrees with the replay.
GameState replay_transcript(const nlohmann::json& doc);

}  // namespace slowcolor
