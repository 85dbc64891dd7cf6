#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "slowcolor/connectivity.hpp"
#include "slowcolor/error.hpp"
#include "slowcolor/game.hpp"
#include "slowcolor/solver.hpp"

namespace slowcolor {

enum class Role { Lister, Painter };

std::string to_string(Role r);

struct ListerStrategy {
  std::string name;
  std::function<VertexSet(const GameState&)> choose;
};

struct PainterStrategy {
  std::string name;
  std::function<VertexSet(const GameState&, VertexSet mark)> reply;
};

/// The union of the 2k matching pairs with the smallest minimum endpoints.
VertexSet lister_3k_opening(const Graph& g, const Matching& matching, int k);

/// Opens with lister_3k_opening, then plays exact-optimal marks.
ListerStrategy lister_3k_strategy(const Graph& g, const Matching& matching, int k,
                                  std::shared_ptr<Solver> solver);
ListerStrategy lister_3k_strategy(const Graph& g, const Matching& matching, int k, SolveOptions opts = {});

ListerStrategy lister_exact(std::shared_ptr<Solver> solver);
ListerStrategy lister_exact(const Graph& g, SolveOptions opts = {});
PainterStrategy painter_exact(std::shared_ptr<Solver> solver);
PainterStrategy painter_exact(const Graph& g, SolveOptions opts = {});

/// Marks every remaining vertex.
ListerStrategy lister_greedy();
/// The largest maximal independent reply; ties go to the smallest bitmask.
VertexSet painter_greedy(const GameState& s, VertexSet m);
PainterStrategy painter_greedy_strategy();

struct Claim {
  int bound = 0;
  Role by = Role::Lister;  // Lister claims score >= bound, Painter claims score <= bound
};

struct MatchOutcome {
  GameState final_state;
  std::optional<Claim> claim;
  bool bound_met = false;

  int score() const { return final_state.score(); }
};

/// Raised when a strategy returns an illegal move; what() carries the state as JSON.
class StrategyError : public Error {
 public:
  using Error::Error;
};

MatchOutcome play_match(const Graph& g, const ListerStrategy& lister, const PainterStrategy& painter,
                        std::optional<Claim> claim = std::nullopt);

struct SweepResult {
  int min_score = 0;
  int max_score = 0;
  std::uint64_t branches = 0;  // completed playouts
  bool complete = true;        // false when the branch budget ran out
  int max_first_reply = 0;     // largest Painter reply to the opening mark
  GameState worst;             // a playout reaching min_score
};

/// Plays `lister` against every legal Painter reply sequence.
SweepResult adversarial_sweep(const Graph& g, const ListerStrategy& lister,
                              std::uint64_t branch_budget = 10'000'000);

nlohmann::json to_json(const MatchOutcome& m);
nlohmann::json to_json(const SweepResult& s);

}  // namespace slowcolor
