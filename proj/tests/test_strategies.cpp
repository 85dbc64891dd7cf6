#include <gtest/gtest.h>

#include "slowcolor/error.hpp"
#include "slowcolor/families.hpp"
#include "slowcolor/strategies.hpp"

using namespace slowcolor;
namespace fam = slowcolor::families;

TEST(Opening, TakesTheFirstPairs) {
  const Graph g = fam::cube();
  const Matching m = *find_perfect_matching(g);
  const VertexSet opening = lister_3k_opening(g, m, 1);
  EXPECT_EQ(opening.size(), 4);
  auto it = m.edges().begin();
  const Edge first = *it++, second = *it;
  EXPECT_EQ(opening, (VertexSet{first.u, first.v, second.u, second.v}));
}

TEST(Opening, Preconditions) {
  const Graph g = fam::prism();
  const Matching m = *find_perfect_matching(g);
  EXPECT_THROW(lister_3k_opening(g, m, 0), PreconditionError);
  EXPECT_THROW(lister_3k_opening(g, m, 2), PreconditionError);
  EXPECT_THROW(lister_3k_opening(g, Matching(g, EdgeSet{Edge(0, 1)}), 1), PreconditionError);
}

TEST(Match, ExactAgainstExactReachesTheValue) {
  for (const Graph& g : {fam::prism(), fam::path(6), fam::cube(), fam::cycle(5)}) {
    auto solver = std::make_shared<Solver>(g);
    const MatchOutcome out = play_match(g, lister_exact(solver), painter_exact(solver), Claim{solver->value()});
    EXPECT_EQ(out.score(), solver->value());
    EXPECT_TRUE(out.bound_met);
  }
}

TEST(Match, ExactListerBeatsAnyPainter) {
  const Graph g = fam::prism();
  auto solver = std::make_shared<Solver>(g);
  const MatchOutcome out = play_match(g, lister_exact(solver), painter_greedy_strategy());
  EXPECT_GE(out.score(), 12);
}

TEST(Match, ExactPainterHoldsAnyLister) {
  const Graph g = fam::cube();
  auto solver = std::make_shared<Solver>(g);
  const MatchOutcome out = play_match(g, lister_greedy(), painter_exact(solver), Claim{13, Role::Painter});
  EXPECT_LE(out.score(), 13);
  EXPECT_TRUE(out.bound_met);
}

TEST(Match, IllegalStrategyMoveIsReported) {
  const ListerStrategy bad{"bad", [](const GameState&) { return VertexSet{}; }};
  try {
    play_match(fam::path(3), bad, painter_greedy_strategy());
    FAIL() << "expected StrategyError";
  } catch (const StrategyError& e) {
    EXPECT_NE(std::string(e.what()).find("empty mark"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("\"moves\""), std::string::npos);
  }
}

TEST(Greedy, ReplyIsLargestMaximalIndependent) {
  const GameState s = new_game(fam::star(5));
  EXPECT_EQ(painter_greedy(s, s.graph().vertices()), (VertexSet{1, 2, 3, 4}));
  const GameState p = new_game(fam::path(4));
  EXPECT_EQ(painter_greedy(p, p.graph().vertices()), (VertexSet{0, 2}));
}

TEST(Sweep, ThreeKStrategyOnSmallGraphs) {
  for (const Graph& g : {fam::prism(), fam::complete(4), fam::complete_bipartite(3, 3), fam::cube()}) {
    const Matching m = *find_perfect_matching(g);
    const SweepResult r = adversarial_sweep(g, lister_3k_strategy(g, m, 1));
    EXPECT_TRUE(r.complete);
    EXPECT_GE(r.min_score, 3 * g.order() / 2 + 1);
    EXPECT_LE(r.max_first_reply, 2);
    EXPECT_EQ(replay_transcript(transcript_to_json(r.worst)).score(), r.min_score);
  }
}

TEST(Sweep, BudgetMarksIncomplete) {
  const Graph g = fam::prism();
  const SweepResult full = adversarial_sweep(g, lister_greedy());
  ASSERT_TRUE(full.complete);
  EXPECT_TRUE(adversarial_sweep(g, lister_greedy(), full.branches).complete);
  EXPECT_FALSE(adversarial_sweep(g, lister_greedy(), full.branches - 1).complete);
}

TEST(Sweep, NoListerBeatsTheValue) {
  // The value is the best worst case, so an exact Lister attains it and greedy cannot exceed it.
  for (const Graph& g : {fam::path(5), fam::star(5), fam::prism()}) {
    auto solver = std::make_shared<Solver>(g);
    EXPECT_EQ(adversarial_sweep(g, lister_exact(solver)).min_score, solver->value());
    EXPECT_LE(adversarial_sweep(g, lister_greedy()).min_score, solver->value());
  }
}

TEST(Strategies, Json) {
  const Graph g = fam::path(2);
  const auto out = play_match(g, lister_greedy(), painter_greedy_strategy(), Claim{3});
  const auto j = to_json(out);
  EXPECT_EQ(j["score"], 3);
  EXPECT_EQ(j["claimed_bound"], 3);
  EXPECT_EQ(j["bound_met"], true);
  EXPECT_EQ(to_json(adversarial_sweep(g, lister_greedy()))["branches"], 2);
}
