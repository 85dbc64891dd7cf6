#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slowcolor/graph.hpp"
#include "slowcolor/solver.hpp"

namespace slowcolor {

struct Instance {
  std::string name;
  Graph graph;
};

enum class Verdict { Holds, Fails, NotApplicable, Skipped };
std::string to_string(Verdict v);

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::string evidence;
};

enum class ClauseStatus { Holds, Fails, Skipped };

/// One numeric clause "computed <relation> bound". Relations: ">=", ">", "==", "iff".
struct Conclusion {
  std::string statement;
  nlohmann::json computed;
  std::string relation;
  nlohmann::json bound;
  ClauseStatus status = ClauseStatus::Skipped;
  std::string note;
};

/// Evaluates relation on raw values; what every Conclusion status is derived from.
bool relation_holds(const nlohmann::json& computed, const std::string& relation, const nlohmann::json& bound);

struct TheoremReport {
  std::string claim;
  std::string instance;
  int k = 0;  // 0 when the claim has no k
  std::vector<Hypothesis> hypotheses;
  std::vector<Conclusion> conclusions;
  std::vector<std::string> flags;  // e.g. "sharp"
  std::uint64_t cases_checked = 0;
  std::uint64_t cases_total = 0;
  nlohmann::json artifacts = nlohmann::json::object();

  bool hypotheses_met() const;
  Verdict verdict() const;
  bool has_flag(const std::string& f) const;
};

struct VerifyOptions {
  SolveOptions solve;
  std::uint64_t case_budget = 1'000'000;  // (matching, opening, reply) triples per report
  int mpw_max_order = 8;
};

/// s̊(G) ≥ 3n/2 + k for 3k-connected G with n ≥ 4k and a perfect matching.
TheoremReport verify_main_theorem(const Instance& inst, int k, const VerifyOptions& opts = {});
/// For k ≥ 2: every G - D left by the opening has min degree ≥ k and a cycle; s̊ > 3n/2 + k.
TheoremReport verify_nonsharpness(const Instance& inst, int k, const VerifyOptions& opts = {});
/// For forests: s̊(T) = ⌊3n/2⌋ iff T has a {1,3} spanning forest (odd-order exception allowed).
TheoremReport verify_tree_characterization(const Instance& inst, const VerifyOptions& opts = {});
/// n/(2α) + 1/2 ≤ s̊/n ≤ max over induced H of |V(H)|/α(H).
TheoremReport verify_mpw_bounds(const Instance& inst, const VerifyOptions& opts = {});
/// G - D is k-connected for every reply D to every 2k-pair opening.
TheoremReport verify_lemma_kconn(const Instance& inst, int k, const VerifyOptions& opts = {});
/// β-vertex forest construction and its score accounting on every (opening, reply).
TheoremReport verify_forest_pipeline(const Instance& inst, int k, const VerifyOptions& opts = {});

/// The largest k meeting the hypotheses of verify_main_theorem, if any.
std::optional<int> strongest_k(const Graph& g);

/// Claim ids accepted by run_claim: main, nonsharp, tree-char, mpw, lemma-kconn, forest-pipeline.
const std::vector<std::string>& claim_ids();
TheoremReport run_claim(const std::string& claim, const Instance& inst, int k, const VerifyOptions& opts = {});

struct SuiteEntry {
  std::string claim;
  Instance instance;
  int k = 0;
};

/// The standard instance library; random trees are drawn from `seed`.
std::vector<SuiteEntry> standard_suite(std::uint64_t seed);
std::vector<TheoremReport> run_suite(const std::vector<SuiteEntry>& suite, const VerifyOptions& opts = {});

/// True when no applicable claim fails.
bool all_hold(const std::vector<TheoremReport>& reports);

nlohmann::json to_json(const TheoremReport& r);
std::string render_text(const TheoremReport& r);

}  // namespace slowcolor
