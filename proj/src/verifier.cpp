#include "slowcolor/verifier.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <sstream>

#include "slowcolor/connectivity.hpp"
#include "slowcolor/error.hpp"
#include "slowcolor/families.hpp"
#include "slowcolor/forest.hpp"

namespace slowcolor {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "hypotheses unmet";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

bool relation_holds(const nlohmann::json& computed, const std::string& relation, const nlohmann::json& bound) {
  if (relation == "iff") return computed.get<bool>() == bound.get<bool>();
  const double c = computed.get<double>();
  const double b = bound.get<double>();
  if (relation == ">=") return c >= b;
  if (relation == ">") return c > b;
  if (relation == "==") return c == b;
  if (relation == "<=") return c <= b;
  throw PreconditionError("unknown relation " + relation);
}

bool TheoremReport::hypotheses_met() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

Verdict TheoremReport::verdict() const {
  if (!hypotheses_met()) return Verdict::NotApplicable;
  bool skipped = false;
  for (const Conclusion& c : conclusions) {
    if (c.status == ClauseStatus::Fails) return Verdict::Fails;
    if (c.status == ClauseStatus::Skipped) skipped = true;
  }
  return skipped ? Verdict::Skipped : Verdict::Holds;
}

bool TheoremReport::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

namespace {

Conclusion clause(std::string statement, nlohmann::json computed, std::string relation, nlohmann::json bound) {
  Conclusion c{std::move(statement), std::move(computed), std::move(relation), std::move(bound), ClauseStatus::Skipped, ""};
  c.status = relation_holds(c.computed, c.relation, c.bound) ? ClauseStatus::Holds : ClauseStatus::Fails;
  return c;
}

Conclusion skipped_clause(std::string statement, const std::string& why) {
  return {std::move(statement), nullptr, "", nullptr, ClauseStatus::Skipped, "skipped: " + why};
}

// Builds a solver, or records why the s̊ clause must be skipped.
std::shared_ptr<Solver> try_solver(const Graph& g, const VerifyOptions& opts, std::string& why) {
  try {
    return std::make_shared<Solver>(g, opts.solve);
  } catch (const CapExceeded&) {
    why = "cap";
    return nullptr;
  }
}

std::vector<Hypothesis> theorem_hypotheses(const Graph& g, int k) {
  const int n = g.order();
  const int kappa = vertex_connectivity(g);
  std::vector<Hypothesis> hs;
  hs.push_back({"k >= 1", k >= 1, "k = " + std::to_string(k)});
  hs.push_back({"3k-connected", k >= 1 && is_k_connected(g, 3 * k),
                "kappa = " + std::to_string(kappa) + ", 3k = " + std::to_string(3 * k)});
  hs.push_back({"n >= 4k", n >= 4 * k, "n = " + std::to_string(n) + ", 4k = " + std::to_string(4 * k)});
  auto pm = find_perfect_matching(g);
  std::string ev = "none";
  if (pm) ev = to_json(pm->edges()).dump();
  hs.push_back({"perfect matching", pm.has_value(), ev});
  return hs;
}

// Visits (matching, opening, reply) for every perfect matching, every choice of
// 2k matching pairs and every maximal independent reply, until the budget runs out.
struct CaseWalk {
  std::uint64_t checked = 0;
  std::uint64_t total = 0;
};

CaseWalk for_each_case(const Graph& g, int k, std::uint64_t budget,
                       const std::function<void(const Matching&, VertexSet, VertexSet)>& fn) {
  CaseWalk walk;
  for (const Matching& pm : all_perfect_matchings(g)) {
    const std::vector<Edge> pairs(pm.edges().begin(), pm.edges().end());
    std::function<void(std::size_t, int, VertexSet)> choose = [&](std::size_t i, int left, VertexSet opening) {
      if (left == 0) {
        for (VertexSet d : maximal_independent_subsets(g, opening)) {
          ++walk.total;
          if (walk.checked < budget) {
            ++walk.checked;
            fn(pm, opening, d);
          }
        }
        return;
      }
      if (pairs.size() - i < static_cast<std::size_t>(left)) return;
      choose(i + 1, left - 1, opening.with(pairs[i].u).with(pairs[i].v));
      choose(i + 1, left, opening);
    };
    choose(0, 2 * k, VertexSet{});
  }
  return walk;
}

void coverage_clause(TheoremReport& r, const CaseWalk& walk) {
  r.cases_checked = walk.checked;
  r.cases_total = walk.total;
  if (walk.checked < walk.total) {
    r.conclusions.push_back(skipped_clause("all (opening, reply) cases checked",
                                           "budget, " + std::to_string(walk.checked) + " of " +
                                               std::to_string(walk.total) + " cases"));
  }
}

nlohmann::json case_json(const Matching& pm, VertexSet opening, VertexSet d) {
  return {{"matching", to_json(pm.edges())}, {"opening", to_json(opening)}, {"deleted", to_json(d)}};
}

TheoremReport new_report(std::string claim, const Instance& inst, int k) {
  TheoremReport r;
  r.claim = std::move(claim);
  r.instance = inst.name;
  r.k = k;
  return r;
}

}  // namespace

std::optional<int> strongest_k(const Graph& g) {
  if (!find_perfect_matching(g)) return std::nullopt;
  const int kappa = vertex_connectivity(g);
  std::optional<int> best;
  for (int k = 1; 3 * k <= kappa && 4 * k <= g.order(); ++k) best = k;
  return best;
}

TheoremReport verify_main_theorem(const Instance& inst, int k, const VerifyOptions& opts) {
  const Graph& g = inst.graph;
  TheoremReport r = new_report("main", inst, k);
  r.hypotheses = theorem_hypotheses(g, k);
  if (!r.hypotheses_met()) return r;

  const int n = g.order();
  const int bound = 3 * n / 2 + k;  // n is even under the hypotheses
  const std::string statement = "s(G) >= 3n/2 + k";
  std::string why;
  auto solver = try_solver(g, opts, why);
  if (!solver) {
    r.conclusions.push_back(skipped_clause(statement, why));
    return r;
  }
  try {
    auto result = solver->solve();
    r.conclusions.push_back(clause(statement, result.value, ">=", bound));
    if (result.value == bound) r.flags.push_back("sharp");
    r.artifacts["best_opening"] = to_json(result.best_opening);
  } catch (const SolverTimeout&) {
    r.conclusions.push_back(skipped_clause(statement, "timeout"));
  }
  return r;
}

TheoremReport verify_nonsharpness(const Instance& inst, int k, const VerifyOptions& opts) {
  const Graph& g = inst.graph;
  TheoremReport r = new_report("nonsharp", inst, k);
  r.hypotheses.push_back({"k >= 2", k >= 2, "k = " + std::to_string(k)});
  if (k < 2) return r;
  for (auto& h : theorem_hypotheses(g, k)) r.hypotheses.push_back(std::move(h));
  if (!r.hypotheses_met()) return r;

  const int n = g.order();
  r.conclusions.push_back(clause("min degree(G) >= 3k (Whitney)", min_degree(g), ">=", 3 * k));

  int worst_min_degree = n;
  bool every_case_has_cycle = true;
  nlohmann::json counterexample;
  auto walk = for_each_case(g, k, opts.case_budget, [&](const Matching& pm, VertexSet opening, VertexSet d) {
    const VertexSet alive = g.vertices() - d;
    worst_min_degree = std::min(worst_min_degree, min_degree(g, alive));
    if (!find_cycle(g, g.edge_set(alive))) {
      if (every_case_has_cycle) counterexample = case_json(pm, opening, d);
      every_case_has_cycle = false;
    }
  });
  r.conclusions.push_back(clause("min degree(G - D) >= k on every case", worst_min_degree, ">=", k));
  r.conclusions.push_back(clause("G - D contains a cycle on every case", every_case_has_cycle, "iff", true));
  if (!every_case_has_cycle) r.artifacts["acyclic_case"] = counterexample;
  coverage_clause(r, walk);

  const std::string statement = "s(G) > 3n/2 + k";
  std::string why;
  if (auto solver = try_solver(g, opts, why)) {
    try {
      r.conclusions.push_back(clause(statement, solver->value(), ">", 3 * n / 2 + k));
    } catch (const SolverTimeout&) {
      r.conclusions.push_back(skipped_clause(statement, "timeout"));
    }
  } else {
    r.conclusions.push_back(skipped_clause(statement, why));
  }
  return r;
}

TheoremReport verify_tree_characterization(const Instance& inst, const VerifyOptions& opts) {
  const Graph& t = inst.graph;
  TheoremReport r = new_report("tree-char", inst, 0);
  r.hypotheses.push_back({"forest", is_acyclic(t, t.vertices()), std::to_string(t.edge_count()) + " edges"});
  if (!r.hypotheses_met()) return r;

  const int n = t.order();
  const std::string statement = "s(T) = floor(3n/2) iff T has a {1,3} spanning forest";
  std::optional<ForestCertificate> cert;
  try {
    cert = spanning_forest_13_exists(t, n % 2 == 1);
  } catch (const CapExceeded&) {
    r.conclusions.push_back(skipped_clause(statement, "cap"));
    return r;
  }
  std::string why;
  auto solver = try_solver(t, opts, why);
  if (!solver) {
    r.conclusions.push_back(skipped_clause(statement, why));
    return r;
  }
  int value = 0;
  try {
    value = solver->value();
  } catch (const SolverTimeout&) {
    r.conclusions.push_back(skipped_clause(statement, "timeout"));
    return r;
  }
  const bool maximal = value == closed_form_path(n);
  r.conclusions.push_back(clause(statement, maximal, "iff", cert.has_value()));
  r.artifacts["value"] = value;
  r.artifacts["floor_3n_2"] = closed_form_path(n);
  r.artifacts["certificate"] = cert ? to_json(*cert) : nlohmann::json(nullptr);
  return r;
}

TheoremReport verify_mpw_bounds(const Instance& inst, const VerifyOptions& opts) {
  const Graph& g = inst.graph;
  TheoremReport r = new_report("mpw", inst, 0);
  const int n = g.order();
  if (n > opts.mpw_max_order) {
    r.conclusions.push_back(skipped_clause("MPW sandwich", "cap"));
    return r;
  }
  const int alpha = independence_number(g);
  // max |V(H)|/α(H) over nonempty induced subgraphs, kept as a fraction p/q.
  int p = 1;
  int q = 1;
  VertexSet witness = VertexSet::single(0);
  for_each_nonempty_subset(g.vertices(), [&](VertexSet h) {
    const int a = independence_number(g, h);
    if (h.size() * q > p * a) {
      p = h.size();
      q = a;
      witness = h;
    }
  });

  std::string why;
  auto solver = try_solver(g, opts, why);
  if (!solver) {
    r.conclusions.push_back(skipped_clause("MPW sandwich", why));
    return r;
  }
  int s = 0;
  try {
    s = solver->value();
  } catch (const SolverTimeout&) {
    r.conclusions.push_back(skipped_clause("MPW sandwich", "timeout"));
    return r;
  }
  // Cross-multiplied so both sides stay integral.
  r.conclusions.push_back(clause("s/n >= n/(2 alpha) + 1/2, as 2*alpha*s >= n^2 + alpha*n", 2 * alpha * s, ">=",
                                 n * n + alpha * n));
  r.conclusions.push_back(clause("s/n <= max |V(H)|/alpha(H), as p*n >= q*s", p * n, ">=", q * s));
  r.artifacts["value"] = s;
  r.artifacts["alpha"] = alpha;
  r.artifacts["ratio"] = s / static_cast<double>(n);
  r.artifacts["lower"] = n / (2.0 * alpha) + 0.5;
  r.artifacts["upper"] = static_cast<double>(p) / q;
  r.artifacts["upper_witness"] = to_json(witness);
  return r;
}

TheoremReport verify_lemma_kconn(const Instance& inst, int k, const VerifyOptions& opts) {
  const Graph& g = inst.graph;
  TheoremReport r = new_report("lemma-kconn", inst, k);
  r.hypotheses.push_back({"k >= 1", k >= 1, "k = " + std::to_string(k)});
  if (k < 1) return r;
  r.hypotheses.push_back({"3k-connected", is_k_connected(g, 3 * k),
                          "kappa = " + std::to_string(vertex_connectivity(g))});
  r.hypotheses.push_back({"n >= 4k", g.order() >= 4 * k, "n = " + std::to_string(g.order())});
  r.hypotheses.push_back({"perfect matching", find_perfect_matching(g).has_value(), ""});
  if (!r.hypotheses_met()) return r;

  std::uint64_t failures = 0;
  int min_kappa = g.order();
  nlohmann::json counterexample;
  auto walk = for_each_case(g, k, opts.case_budget, [&](const Matching& pm, VertexSet opening, VertexSet d) {
    const VertexSet alive = g.vertices() - d;
    min_kappa = std::min(min_kappa, vertex_connectivity(g, alive));
    if (!is_k_connected(g, k, alive)) {
      if (failures == 0) counterexample = case_json(pm, opening, d);
      ++failures;
    }
  });
  r.conclusions.push_back(clause("G - D is k-connected on every case (failures)", failures, "==", 0));
  r.artifacts["min_kappa_after_deletion"] = min_kappa;
  if (failures) r.artifacts["counterexample"] = counterexample;
  coverage_clause(r, walk);
  return r;
}

TheoremReport verify_forest_pipeline(const Instance& inst, int k, const VerifyOptions& opts) {
  const Graph& g = inst.graph;
  TheoremReport r = new_report("forest-pipeline", inst, k);
  r.hypotheses = theorem_hypotheses(g, k);
  if (!r.hypotheses_met()) return r;

  const int n = g.order();
  std::string why;
  auto solver = try_solver(g, opts, why);

  std::uint64_t even_cases = 0, odd_cases = 0;
  std::uint64_t certificate_failures = 0, menger_failures = 0, bound_failures = 0;
  bool solver_skipped = !solver;
  int min_residual_value = -1;  // min over cases of s(G⁻) - (3n/2 - 3k), doubled
  nlohmann::json failures = nlohmann::json::array();
  nlohmann::json examples = nlohmann::json::array();

  auto record_failure = [&](nlohmann::json c, const std::string& what) {
    c["failure"] = what;
    if (failures.size() < 5) failures.push_back(std::move(c));
  };

  auto walk = for_each_case(g, k, opts.case_budget, [&](const Matching& pm, VertexSet opening, VertexSet d) {
    nlohmann::json c = case_json(pm, opening, d);
    BetaContext full = beta_context(g, pm, d);
    const bool odd = full.betas.size() % 2 == 1;
    BetaContext ctx = full;
    Vertex dropped = -1;
    if (odd) {
      ++odd_cases;
      dropped = full.betas.lowest();
      ctx = without_beta(full, dropped);
      c["dropped_beta"] = dropped;
    } else {
      ++even_cases;
    }
    c["betas"] = to_json(full.betas);

    ForestCertificate cert;
    try {
      auto [a, b] = split_betas(ctx.betas);
      PathSystem paths = disjoint_paths(g, a, b, a.size(), ctx.alive);
      cert = build_forest(ctx, paths);
      c["paths"] = paths.paths;
    } catch (const InsufficientConnectivity& e) {
      ++menger_failures;
      record_failure(c, e.what());
      return;
    }
    c["forest"] = to_json(cert.edges);
    if (auto err = check_certificate(g, ctx.alive, cert)) {
      ++certificate_failures;
      record_failure(c, *err);
      return;
    }
    if (examples.size() < 3) examples.push_back(c);
    if (solver_skipped) return;

    try {
      const int whole = solver->value(full.alive);  // s(G⁻)
      const int part = solver->value(ctx.alive);    // s(G⁻) or s(G₁⁻)
      bool ok = 2 * part >= 3 * ctx.alive.size();
      if (odd) ok = ok && whole >= part + 1;
      ok = ok && 2 * whole >= 3 * n - 6 * k;
      const int slack = 2 * whole - (3 * n - 6 * k);
      if (min_residual_value < 0 || slack < min_residual_value) min_residual_value = slack;
      if (!ok) {
        ++bound_failures;
        c["value_g_minus"] = whole;
        c["value_part"] = part;
        record_failure(c, "score accounting");
      }
    } catch (const SolverTimeout&) {
      solver_skipped = true;
      why = "timeout";
    }
  });

  r.conclusions.push_back(clause("disjoint paths found on every case (Menger failures)", menger_failures, "==", 0));
  r.conclusions.push_back(
      clause("certificate acyclic with degrees in {1,3} on every case (failures)", certificate_failures, "==", 0));
  const std::string accounting =
      "s(G1-) >= 3|V(G1-)|/2, s(G-) >= s(G1-) + 1 when |D'| odd, and s(G-) >= 3n/2 - 3k (failures)";
  if (solver_skipped) {
    r.conclusions.push_back(skipped_clause(accounting, why));
  } else {
    r.conclusions.push_back(clause(accounting, bound_failures, "==", 0));
    r.artifacts["min_doubled_slack"] = min_residual_value;
  }
  coverage_clause(r, walk);
  r.artifacts["even_cases"] = even_cases;
  r.artifacts["odd_cases"] = odd_cases;
  r.artifacts["examples"] = examples;
  if (!failures.empty()) r.artifacts["failures"] = failures;
  return r;
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{"main", "nonsharp", "tree-char", "mpw", "lemma-kconn", "forest-pipeline"};
  return ids;
}

TheoremReport run_claim(const std::string& claim, const Instance& inst, int k, const VerifyOptions& opts) {
  if (claim == "main") return verify_main_theorem(inst, k, opts);
  if (claim == "nonsharp") return verify_nonsharpness(inst, k, opts);
  if (claim == "tree-char") return verify_tree_characterization(inst, opts);
  if (claim == "mpw") return verify_mpw_bounds(inst, opts);
  if (claim == "lemma-kconn") return verify_lemma_kconn(inst, k, opts);
  if (claim == "forest-pipeline") return verify_forest_pipeline(inst, k, opts);
  throw PreconditionError("unknown claim '" + claim + "'");
}

std::vector<SuiteEntry> standard_suite(std::uint64_t seed) {
  namespace f = families;
  std::vector<SuiteEntry> suite;
  const std::vector<Instance> connected{{"complete:4", f::complete(4)},
                                        {"prism", f::prism()},
                                        {"bipartite:3,3", f::complete_bipartite(3, 3)},
                                        {"cube", f::cube(3)},
                                        {"petersen", f::petersen()}};
  for (const auto& inst : connected) {
    suite.push_back({"main", inst, 1});
    suite.push_back({"lemma-kconn", inst, 1});
    suite.push_back({"forest-pipeline", inst, 1});
  }
  const Instance k8{"complete:8", f::complete(8)};
  suite.push_back({"main", k8, 2});
  suite.push_back({"nonsharp", k8, 2});
  suite.push_back({"lemma-kconn", k8, 2});
  suite.push_back({"forest-pipeline", k8, 2});

  for (const auto& inst : std::vector<Instance>{{"cycle:5", f::cycle(5)},
                                                {"edgeless:4", f::edgeless(4)},
                                                {"path:5", f::path(5)},
                                                {"complete:4", f::complete(4)},
                                                {"prism", f::prism()},
                                                {"bipartite:3,3", f::complete_bipartite(3, 3)},
                                                {"cube", f::cube(3)}}) {
    suite.push_back({"mpw", inst, 0});
  }
  for (int n = 1; n <= 8; ++n) suite.push_back({"tree-char", {"path:" + std::to_string(n), f::path(n)}, 0});
  for (int n = 2; n <= 7; ++n) suite.push_back({"tree-char", {"star:" + std::to_string(n), f::star(n)}, 0});
  f::Rng rng(seed);
  for (int i = 0; i < 8; ++i) {
    const int n = f::uniform_int(rng, 1, 9);
    const bool forest = i % 2 == 1;
    Graph t = forest ? f::random_forest(n, rng) : f::random_tree(n, rng);
    std::string name = (forest ? "random-forest#" : "random-tree#") + std::to_string(i) + ":" + std::to_string(n);
    suite.push_back({"tree-char", {name, std::move(t)}, 0});
  }
  return suite;
}

std::vector<TheoremReport> run_suite(const std::vector<SuiteEntry>& suite, const VerifyOptions& opts) {
  std::vector<TheoremReport> out;
  out.reserve(suite.size());
  for (const auto& e : suite) out.push_back(run_claim(e.claim, e.instance, e.k, opts));
  return out;
}

bool all_hold(const std::vector<TheoremReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const TheoremReport& r) { return r.verdict() == Verdict::Fails; });
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json hyps = nlohmann::json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"evidence", h.evidence}});
  nlohmann::json concl = nlohmann::json::array();
  for (const auto& c : r.conclusions) {
    nlohmann::json j{{"statement", c.statement},
                     {"computed", c.computed},
                     {"relation", c.relation},
                     {"bound", c.bound},
                     {"status", c.status == ClauseStatus::Holds   ? "holds"
                                : c.status == ClauseStatus::Fails ? "fails"
                                                                  : "skipped"}};
    if (!c.note.empty()) j["note"] = c.note;
    concl.push_back(std::move(j));
  }
  nlohmann::json j{{"claim", r.claim},       {"instance", r.instance},   {"hypotheses", hyps},
                   {"conclusions", concl},   {"verdict", to_string(r.verdict())},
                   {"flags", r.flags},       {"artifacts", r.artifacts}};
  if (r.k > 0) j["k"] = r.k;
  if (r.cases_total > 0) j["coverage"] = {{"checked", r.cases_checked}, {"total", r.cases_total}};
  return j;
}

std::string render_text(const TheoremReport& r) {
  std::ostringstream out;
  out << "[" << to_string(r.verdict()) << "] " << r.claim << " on " << r.instance;
  if (r.k > 0) out << " (k=" << r.k << ")";
  for (const auto& f : r.flags) out << " [" << f << "]";
  out << "\n";
  for (const auto& h : r.hypotheses) {
    out << "  hypothesis " << (h.holds ? "ok  " : "FAIL") << "  " << h.name;
    if (!h.evidence.empty()) out << "  (" << h.evidence << ")";
    out << "\n";
  }
  for (const auto& c : r.conclusions) {
    out << "  clause " << (c.status == ClauseStatus::Holds ? "ok  " : c.status == ClauseStatus::Fails ? "FAIL" : "skip")
        << "  " << c.statement;
    if (!c.relation.empty()) out << "  [" << c.computed.dump() << " " << c.relation << " " << c.bound.dump() << "]";
    if (!c.note.empty()) out << "  " << c.note;
    out << "\n";
  }
  if (r.cases_total > 0) out << "  coverage " << r.cases_checked << "/" << r.cases_total << "\n";
  return out.str();
}

}  // namespace slowcolor
