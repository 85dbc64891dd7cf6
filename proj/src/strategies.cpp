#include "slowcolor/strategies.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

#include "slowcolor/error.hpp"

namespace slowcolor {

std::string to_string(Role r) { return r == Role::Lister ? "lister" : "painter"; }

VertexSet lister_3k_opening(const Graph& g, const Matching& matching, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (!matching.is_perfect_on(g.vertices())) throw PreconditionError("matching not perfect");
  if (g.order() < 4 * k) throw PreconditionError("n < 4k");
  // EdgeSet iterates by (min endpoint, max endpoint), which is the pair order we want.
  VertexSet mark;
  int pairs = 0;
  for (const Edge& e : matching.edges()) {
    if (pairs++ == 2 * k) break;
    mark.insert(e.u);
    mark.insert(e.v);
  }
  return mark;
}

ListerStrategy lister_3k_strategy(const Graph& g, const Matching& matching, int k,
                                  std::shared_ptr<Solver> solver) {
  const VertexSet opening = lister_3k_opening(g, matching, k);
  return {"lister-3k",
          [opening, solver](const GameState& s) {
            if (s.transcript().empty()) return opening;
            return solver->optimal_lister_move(s.remaining());
          }};
}

ListerStrategy lister_3k_strategy(const Graph& g, const Matching& matching, int k, SolveOptions opts) {
  return lister_3k_strategy(g, matching, k, std::make_shared<Solver>(g, opts));
}

ListerStrategy lister_exact(std::shared_ptr<Solver> solver) {
  return {"lister-exact", [solver](const GameState& s) { return solver->optimal_lister_move(s.remaining()); }};
}

ListerStrategy lister_exact(const Graph& g, SolveOptions opts) {
  return lister_exact(std::make_shared<Solver>(g, opts));
}

PainterStrategy painter_exact(std::shared_ptr<Solver> solver) {
  return {"painter-exact",
          [solver](const GameState& s, VertexSet m) { return solver->optimal_painter_reply(s.remaining(), m); }};
}

PainterStrategy painter_exact(const Graph& g, SolveOptions opts) {
  return painter_exact(std::make_shared<Solver>(g, opts));
}

ListerStrategy lister_greedy() {
  return {"lister-greedy", [](const GameState& s) { return s.remaining(); }};
}

VertexSet painter_greedy(const GameState& s, VertexSet m) {
  VertexSet best;
  for (VertexSet d : legal_painter_replies(s, m)) {
    if (d.size() > best.size()) best = d;  // ascending order keeps the smallest bitmask on ties
  }
  return best;
}

PainterStrategy painter_greedy_strategy() { return {"painter-greedy", painter_greedy}; }

namespace {

bool claim_met(const Claim& c, int score) { return c.by == Role::Lister ? score >= c.bound : score <= c.bound; }

[[noreturn]] void illegal(const std::string& who, const std::string& why, const GameState& s) {
  throw StrategyError(who + " played an illegal move (" + why + ") in state " + transcript_to_json(s).dump());
}

}  // namespace

MatchOutcome play_match(const Graph& g, const ListerStrategy& lister, const PainterStrategy& painter,
                        std::optional<Claim> claim) {
  GameState s = new_game(g);
  while (!is_terminal(s)) {
    VertexSet m = lister.choose(s);
    if (auto err = check_mark(s, m)) illegal(lister.name, *err, s);
    VertexSet d = painter.reply(s, m);
    if (auto err = check_reply(s.graph(), m, d)) illegal(painter.name, *err, s);
    s = apply_move(s, m, d);
  }
  MatchOutcome out{s, claim, false};
  if (claim) out.bound_met = claim_met(*claim, s.score());
  return out;
}

SweepResult adversarial_sweep(const Graph& g, const ListerStrategy& lister, std::uint64_t branch_budget) {
  SweepResult out{std::numeric_limits<int>::max(), 0, 0, true, 0, new_game(g)};
  std::function<void(const GameState&)> walk = [&](const GameState& s) {
    if (!out.complete) return;
    if (is_terminal(s)) {
      if (out.branches == branch_budget) {
        out.complete = false;
        return;
      }
      ++out.branches;
      if (s.score() < out.min_score) {
        out.min_score = s.score();
        out.worst = s;
      }
      out.max_score = std::max(out.max_score, s.score());
      return;
    }
    VertexSet m = lister.choose(s);
    if (auto err = check_mark(s, m)) illegal(lister.name, *err, s);
    for (VertexSet d : legal_painter_replies(s, m)) {
      if (s.transcript().empty()) out.max_first_reply = std::max(out.max_first_reply, d.size());
      walk(apply_move(s, m, d));
    }
  };
  walk(new_game(g));
  return out;
}

nlohmann::json to_json(const MatchOutcome& m) {
  nlohmann::json j = transcript_to_json(m.final_state);
  j["claimed_bound"] = m.claim ? nlohmann::json(m.claim->bound) : nlohmann::json(nullptr);
  if (m.claim) j["claimed_by"] = to_string(m.claim->by);
  j["bound_met"] = m.bound_met;
  return j;
}

nlohmann::json to_json(const SweepResult& s) {
  return {{"min_score", s.min_score},
          {"max_score", s.max_score},
          {"branches", s.branches},
          {"complete", s.complete},
          {"max_first_reply", s.max_first_reply},
          {"worst", transcript_to_json(s.worst)}};
}

}  // namespace slowcolor
