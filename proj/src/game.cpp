#include "slowcolor/game.hpp"

#include "slowcolor/error.hpp"

namespace slowcolor {

GameState::GameState(Graph g)
    : graph_(std::make_shared<const Graph>(std::move(g))), remaining_(graph_->vertices()) {}

GameState new_game(Graph g) { return GameState(std::move(g)); }

std::optional<std::string> check_mark(const GameState& s, VertexSet m) {
  if (m.empty()) return "empty mark";
  if (!m.subset_of(s.remaining())) {
    Vertex v = (m - s.remaining()).lowest();
    return "vertex " + (v < s.graph().order() ? s.graph().label(v) : std::to_string(v)) + " is not remaining";
  }
  return std::nullopt;
}

std::optional<std::string> check_reply(const Graph& g, VertexSet m, VertexSet d) {
  if (!d.subset_of(m)) {
    Vertex v = (d - m).lowest();
    return "not-marked: vertex " + (v < g.order() ? g.label(v) : std::to_string(v)) + " was not marked";
  }
  for (Vertex v : d) {
    VertexSet clash = g.neighbors(v) & d;
    if (!clash.empty()) {
      return "not-independent: vertices " + g.label(v) + " and " + g.label(clash.lowest()) + " are adjacent";
    }
  }
  for (Vertex v : m - d) {
    if (!g.neighbors(v).intersects(d)) return "not-maximal: vertex " + g.label(v) + " addable";
  }
  return std::nullopt;
}

std::vector<VertexSet> legal_painter_replies(const GameState& s, VertexSet m) {
  if (auto err = check_mark(s, m)) throw PreconditionError("illegal mark: " + *err);
  return maximal_independent_subsets(s.graph(), m);
}

GameState apply_move(const GameState& s, VertexSet m, VertexSet d) {
  if (auto err = check_mark(s, m)) throw PreconditionError("illegal mark: " + *err);
  if (auto err = check_reply(s.graph(), m, d)) throw PreconditionError("reply not maximal-independent: " + *err);
  GameState next = s;
  next.remaining_ -= d;
  next.score_ += m.size();
  next.transcript_.push_back({m, d});
  return next;
}

nlohmann::json transcript_to_json(const GameState& s) {
  nlohmann::json moves = nlohmann::json::array();
  for (const Move& mv : s.transcript()) {
    moves.push_back({{"marked", to_json(mv.marked)}, {"deleted", to_json(mv.deleted)}});
  }
  return {{"graph", graph_to_json(s.graph())}, {"moves", moves}, {"score", s.score()}};
}

GameState replay_transcript(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("graph") || !doc.contains("moves")) {
    throw ParseError(0, "transcript needs 'graph' and 'moves'");
  }
  GameState s = new_game(graph_from_json(doc["graph"]));
  const int n = s.graph().order();
  for (const auto& mv : doc["moves"]) {
    if (!mv.contains("marked") || !mv.contains("deleted")) throw ParseError(0, "move needs 'marked' and 'deleted'");
    s = apply_move(s, vertex_set_from_json(mv["marked"], n), vertex_set_from_json(mv["deleted"], n));
  }
  if (doc.contains("score") && doc["score"].get<int>() != s.score()) {
    throw PreconditionError("recorded score " + doc["score"].dump() + " differs from replayed score " +
                            std::to_string(s.score()));
  }
  return s;
}

}  // namespace slowcolor
