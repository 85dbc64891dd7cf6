#include "cli.hpp"

#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <httplib.h>

#include "slowcolor/connectivity.hpp"
#include "slowcolor/error.hpp"
#include "slowcolor/families.hpp"
#include "slowcolor/forest.hpp"
#include "slowcolor/game.hpp"
#include "slowcolor/service.hpp"
#include "slowcolor/solver.hpp"
#include "slowcolor/strategies.hpp"

namespace slowcolor::cli {

namespace {

std::vector<std::string> tokens(std::string text, const std::string& separators) {
  for (char& c : text) {
    if (separators.find(c) != std::string::npos) c = ' ';
  }
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Vertex vertex_of(const Graph& g, const std::string& token) {
  auto v = g.find_vertex(token);
  if (!v) throw ParseError(0, "unknown vertex '" + token + "'");
  return *v;
}

bool json_format(const RunConfig& cfg) { return cfg.format == "json"; }

std::string edges_text(const Graph& g, const EdgeSet& es) {
  std::string s;
  for (const Edge& e : es) {
    if (!s.empty()) s += ' ';
    s += "(" + g.label(e.u) + "," + g.label(e.v) + ")";
  }
  return s.empty() ? "(none)" : s;
}

int exit_for(const std::vector<TheoremReport>& reports) {
  bool skipped = false;
  for (const auto& r : reports) {
    if (r.verdict() == Verdict::Fails) return kFalsified;
    if (r.verdict() == Verdict::Skipped) skipped = true;
  }
  return skipped ? kResource : kOk;
}

bool takes_k(const std::string& claim) { return claim != "tree-char" && claim != "mpw"; }

// Every k worth reporting when --k is absent: 1..n/4 (from 2 for nonsharp).
std::vector<int> k_values(const std::string& claim, const Graph& g) {
  const int lo = claim == "nonsharp" ? 2 : 1;
  std::vector<int> ks;
  for (int k = lo; k <= std::max(lo, g.order() / 4); ++k) ks.push_back(k);
  return ks;
}

}  // namespace

SolveOptions RunConfig::solve_options() const {
  SolveOptions o;
  o.cap = cap;
  if (timeout_ms) o.timeout = std::chrono::milliseconds(*timeout_ms);
  o.strict = strict;
  return o;
}

Graph resolve_graph(const std::string& source) {
  if (source.empty()) throw ParseError(0, "no graph given (use --graph)");
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) return load_graph_file(source);
  if (auto g = families::builtin(source)) return *g;
  throw ParseError(0, "'" + source + "' is neither a file nor a builtin graph");
}

VertexSet parse_vertex_list(const Graph& g, const std::string& text) {
  VertexSet s;
  for (const auto& t : tokens(text, "{}[],")) s.insert(vertex_of(g, t));
  return s;
}

EdgeSet parse_pairs(const Graph& g, const std::string& text) {
  EdgeSet es;
  for (const auto& t : tokens(text, ",;")) {
    const auto dash = t.find('-');
    if (dash == std::string::npos) throw ParseError(0, "expected u-v, got '" + t + "'");
    es.insert(Edge(vertex_of(g, t.substr(0, dash)), vertex_of(g, t.substr(dash + 1))));
  }
  return es;
}

std::vector<Instance> expand_family(const std::string& spec, std::uint64_t seed) {
  std::vector<Instance> out;
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto ints = [&](std::size_t want) {
    std::vector<int> v;
    for (const auto& t : tokens(args, ",")) {
      try {
        v.push_back(std::stoi(t));
      } catch (const std::exception&) {
        throw ParseError(0, "bad number '" + t + "' in '" + spec + "'");
      }
    }
    if (v.size() != want) throw ParseError(0, "'" + spec + "' expects " + std::to_string(want) + " numbers");
    return v;
  };

  if (name == "random" || name == "random-tree" || name == "random-forest") {
    families::Rng rng(seed);
    const bool graphs = name == "random";
    const auto v = ints(graphs ? 3 : 2);
    const int count = v.back();
    for (int i = 0; i < count; ++i) {
      Graph g = graphs ? families::random_graph(v[0], v[1], rng)
                       : name == "random-tree" ? families::random_tree(v[0], rng) : families::random_forest(v[0], rng);
      out.push_back({name + "#" + std::to_string(i), std::move(g)});
    }
    return out;
  }

  const auto dots = args.find("..");
  if (dots != std::string::npos) {
    int lo = 0, hi = 0;
    try {
      lo = std::stoi(args.substr(0, dots));
      hi = std::stoi(args.substr(dots + 2));
    } catch (const std::exception&) {
      throw ParseError(0, "bad range in '" + spec + "'");
    }
    for (int i = lo; i <= hi; ++i) {
      const std::string one = name + ":" + std::to_string(i);
      auto g = families::builtin(one);
      if (!g) throw ParseError(0, "unknown builtin '" + one + "'");
      out.push_back({one, *g});
    }
    return out;
  }

  out.push_back({spec, resolve_graph(spec)});
  return out;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Graph g = resolve_graph(cfg.graph);
  const SolveResult r = solve(g, cfg.solve_options());
  if (json_format(cfg)) {
    nlohmann::json j = to_json(r);
    j["graph"] = cfg.graph;
    j["n"] = g.order();
    out << j.dump(2) << "\n";
  } else {
    out << "value " << r.value << "\n"
        << "best opening " << format_set(g, r.best_opening) << "\n"
        << "states " << r.stats.states_memoized << ", nodes " << r.stats.nodes_expanded << "\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  opts.solve = cfg.solve_options();
  std::vector<TheoremReport> reports;

  if (!cfg.suite.empty()) {
    if (cfg.suite != "standard") throw ParseError(0, "unknown suite '" + cfg.suite + "'");
    if (cfg.claim != "all") throw ParseError(0, "--suite runs with the claim 'all'");
    reports = run_suite(standard_suite(cfg.seed), opts);
  } else {
    const auto& ids = claim_ids();
    std::vector<std::string> claims;
    if (cfg.claim == "all") {
      claims = ids;
    } else if (std::find(ids.begin(), ids.end(), cfg.claim) != ids.end()) {
      claims = {cfg.claim};
    } else {
      throw ParseError(0, "unknown claim '" + cfg.claim + "'");
    }
    const Instance inst{cfg.graph, resolve_graph(cfg.graph)};
    for (const auto& c : claims) {
      if (!takes_k(c)) {
        reports.push_back(run_claim(c, inst, 0, opts));
        continue;
      }
      const auto ks = cfg.k ? std::vector<int>{*cfg.k} : k_values(c, inst.graph);
      for (int k : ks) reports.push_back(run_claim(c, inst, k, opts));
    }
  }

  const int code = exit_for(reports);
  if (json_format(cfg)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << nlohmann::json{{"reports", arr}, {"all_hold", all_hold(reports)}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << render_text(r) << "\n";
    out << (code == kOk ? "all applicable claims hold" : code == kFalsified ? "some claim FAILS" : "some clauses skipped")
        << "\n";
  }
  return code;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const Graph g = resolve_graph(cfg.graph);
  Matching pm;
  if (cfg.matching.empty()) {
    auto found = find_perfect_matching(g);
    if (!found) throw PreconditionError("graph has no perfect matching");
    pm = *found;
  } else {
    pm = Matching(g, parse_pairs(g, cfg.matching));
  }
  const VertexSet d = parse_vertex_list(g, cfg.deleted);
  const BetaContext full = beta_context(g, pm, d);

  BetaContext ctx = full;
  std::optional<Vertex> dropped;
  if (full.betas.size() % 2 == 1) {
    dropped = full.betas.lowest();
    ctx = without_beta(full, *dropped);
  }
  auto [a, b] = split_betas(ctx.betas);
  const PathSystem paths = disjoint_paths(g, a, b, a.size(), ctx.alive);
  const ForestCertificate cert = build_forest(ctx, paths);
  const auto problem = check_certificate(g, ctx.alive, cert);

  if (json_format(cfg)) {
    nlohmann::json j{{"matching", to_json(pm.edges())},
                     {"context", to_json(full)},
                     {"paths", paths.paths},
                     {"certificate", to_json(cert)},
                     {"valid", !problem}};
    if (dropped) j["dropped_beta"] = *dropped;
    if (problem) j["problem"] = *problem;
    out << j.dump(2) << "\n";
  } else {
    out << "matching " << edges_text(g, pm.edges()) << "\n"
        << "deleted " << format_set(g, d) << "\n"
        << "betas " << format_set(g, full.betas) << "\n";
    if (dropped) out << "dropped beta " << g.label(*dropped) << " (odd count)\n";
    out << "surviving matching " << edges_text(g, ctx.surviving_matching) << "\n";
    for (const auto& p : paths.paths) {
      out << "path";
      for (Vertex v : p) out << " " << g.label(v);
      out << "\n";
    }
    out << "certificate " << edges_text(g, cert.edges) << "\n"
        << (problem ? "INVALID: " + *problem : std::string("valid {1,3} forest")) << "\n";
  }
  return problem ? kFalsified : kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  std::vector<Instance> instances;
  for (const auto& spec : cfg.sweep) {
    for (auto& inst : expand_family(spec, cfg.seed)) instances.push_back(std::move(inst));
  }
  if (cfg.sweep.empty()) instances.push_back({cfg.graph, resolve_graph(cfg.graph)});

  nlohmann::json rows = nlohmann::json::array();
  bool failed = false;
  bool skipped = false;
  for (const auto& inst : instances) {
    const Graph& g = inst.graph;
    const int n = g.order();
    nlohmann::json row{{"instance", inst.name}, {"n", n}, {"edges", g.edge_count()}};
    const auto pm = find_perfect_matching(g);
    const int kappa = vertex_connectivity(g);
    row["kappa"] = kappa;
    row["perfect_matching"] = pm.has_value();

    std::shared_ptr<Solver> solver;
    try {
      solver = std::make_shared<Solver>(g, cfg.solve_options());
      row["value"] = solver->value();
    } catch (const Error& e) {  // cap or timeout
      row["value"] = nullptr;
      row["skipped"] = e.what();
      skipped = true;
      rows.push_back(row);
      continue;
    }

    std::vector<int> ks;
    if (cfg.k) {
      ks = {*cfg.k};
    } else if (pm) {
      for (int k = 1; 3 * k <= kappa && 4 * k <= n; ++k) ks.push_back(k);
    }
    nlohmann::json bounds = nlohmann::json::array();
    for (int k : ks) {
      const bool applies = pm && 3 * k <= kappa && 4 * k <= n;
      const int claim = 3 * n / 2 + k;
      const int value = row["value"].get<int>();
      nlohmann::json b{{"k", k}, {"claim", claim}, {"applies", applies}, {"met", value >= claim},
                       {"sharp", value == claim}};
      if (applies && cfg.strategy) {
        const SweepResult sw = adversarial_sweep(g, lister_3k_strategy(g, *pm, k, solver));
        b["strategy_min"] = sw.min_score;
        b["branches"] = sw.branches;
        b["complete"] = sw.complete;
        if (!sw.complete) skipped = true;
        if (sw.min_score < claim) failed = true;
      }
      if (applies && value < claim) failed = true;
      bounds.push_back(b);
    }
    row["bounds"] = bounds;
    rows.push_back(row);
  }

  if (json_format(cfg)) {
    out << nlohmann::json{{"rows", rows}}.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      out << row["instance"].get<std::string>() << ": n=" << row["n"] << " kappa=" << row["kappa"] << " value=";
      if (row["value"].is_null()) {
        out << "skipped (" << row["skipped"].get<std::string>() << ")\n";
        continue;
      }
      out << row["value"];
      for (const auto& b : row["bounds"]) {
        out << "  [k=" << b["k"] << " claim " << b["claim"] << (b["applies"].get<bool>() ? "" : " n/a")
            << (b["met"].get<bool>() ? " met" : " MISSED") << (b["sharp"].get<bool>() ? " sharp" : "");
        if (b.contains("strategy_min")) out << " strategy-min " << b["strategy_min"];
        out << "]";
      }
      out << "\n";
    }
  }
  if (failed) return kFalsified;
  return skipped ? kResource : kOk;
}

int cmd_play(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = resolve_graph(cfg.graph);
  if (cfg.role != "painter" && cfg.role != "lister") throw ParseError(0, "--role must be painter or lister");
  const bool human_lister = cfg.role == "lister";
  const bool exact = cfg.engine == "exact";
  std::shared_ptr<Solver> solver;
  if (exact) solver = std::make_shared<Solver>(g, cfg.solve_options());

  auto save = [&](const GameState& s) {
    if (cfg.transcript.empty()) return;
    std::ofstream f(cfg.transcript);
    f << transcript_to_json(s).dump(2) << "\n";
  };

  GameState s = new_game(g);
  out << "graph with " << g.order() << " vertices: " << edges_text(g, g.edge_set()) << "\n"
      << "you play " << cfg.role << "; enter vertices separated by spaces or commas\n";

  auto read_set = [&](const std::string& prompt, auto&& validate) -> std::optional<VertexSet> {
    for (;;) {
      out << prompt << std::flush;
      std::string line;
      if (!std::getline(in, line)) return std::nullopt;
      try {
        const VertexSet v = parse_vertex_list(g, line);
        if (auto err = validate(v)) {
          out << "rejected: " << *err << "\n";
          continue;
        }
        return v;
      } catch (const ParseError& e) {
        out << "rejected: " << e.what() << "\n";
      }
    }
  };

  while (!is_terminal(s)) {
    out << "remaining " << format_set(g, s.remaining()) << ", score " << s.score() << "\n";
    VertexSet m, d;
    if (human_lister) {
      auto mark = read_set("mark> ", [&](VertexSet v) { return check_mark(s, v); });
      if (!mark) break;
      m = *mark;
      d = exact ? solver->optimal_painter_reply(s.remaining(), m) : painter_greedy(s, m);
      out << "Painter deletes " << format_set(g, d) << "\n";
    } else {
      m = exact ? solver->optimal_lister_move(s.remaining()) : s.remaining();
      out << "Lister marks " << format_set(g, m) << "\n";
      auto reply = read_set("reply> ", [&](VertexSet v) { return check_reply(g, m, v); });
      if (!reply) break;
      d = *reply;
    }
    s = apply_move(s, m, d);
  }

  save(s);
  if (!is_terminal(s)) {
    out << "\naborted; partial transcript:\n" << transcript_to_json(s).dump() << "\n";
    return kUsage;
  }
  out << "final score " << s.score() << "\n";
  if (auto k = strongest_k(g)) {
    const int claim = 3 * g.order() / 2 + *k;
    out << "bound 3n/2 + " << *k << " = " << claim << ": " << (s.score() >= claim ? "met" : "missed")
        << (s.score() == claim ? " (sharp)" : "") << "\n";
  }
  return kOk;
}

namespace {
std::atomic<bool> g_stop{false};
void on_signal(int) { g_stop = true; }
}  // namespace

int cmd_serve(const RunConfig& cfg, std::ostream& out) {
  GameService svc(ServiceOptions{cfg.solve_options()});
  std::error_code ec;
  if (!cfg.snapshot.empty() && std::filesystem::exists(cfg.snapshot, ec)) {
    std::ifstream f(cfg.snapshot);
    svc.restore(nlohmann::json::parse(f));
    out << "restored " << svc.session_count() << " sessions\n";
  }
  httplib::Server server;
  svc.mount(server, cfg.static_dir);

  g_stop = false;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::thread watcher([&] {
    while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    server.stop();
  });

  out << "listening on http://" << cfg.host << ":" << cfg.port << std::endl;
  const bool ok = server.listen(cfg.host, cfg.port);
  g_stop = true;
  watcher.join();

  if (!cfg.snapshot.empty()) {
    std::ofstream f(cfg.snapshot);
    f << svc.snapshot().dump(2) << "\n";
  }
  if (!ok) {
    out << "could not listen on " << cfg.host << ":" << cfg.port << "\n";
    return kUsage;
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact solver and theorem checker for the slow coloring game", "slowcolor"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph,-g", cfg.graph, "graph file or builtin (prism, path:n, cube, bipartite:a,b, ...)");
    sub->add_option("--k", cfg.k, "connectivity parameter k");
    sub->add_option("--cap", cfg.cap, "largest graph order the solver accepts")->check(CLI::Range(1, kMaxVertices));
    sub->add_option("--timeout-ms", cfg.timeout_ms, "solver time limit");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", cfg.seed, "seed for random families");
    sub->add_flag("--strict", cfg.strict, "disable splitting states into components");
  };

  auto* solve_cmd = app.add_subcommand("solve", "exact game value");
  auto* verify_cmd = app.add_subcommand("verify", "check a claim on a graph or on the standard suite");
  verify_cmd->add_option("claim", cfg.claim, "main|nonsharp|tree-char|mpw|lemma-kconn|forest-pipeline|all")
      ->required();
  verify_cmd->add_option("--suite", cfg.suite, "instance library (standard)");
  auto* construct_cmd = app.add_subcommand("construct", "build the {1,3} forest for a reply D");
  construct_cmd->add_option("--delete,-d", cfg.deleted, "Painter's reply D, e.g. 3,4");
  construct_cmd->add_option("--matching", cfg.matching, "perfect matching, e.g. 1-2,3-6,4-5");
  auto* sweep_cmd = app.add_subcommand("sweep", "value and bound table over graph families");
  sweep_cmd->add_option("--sweep", cfg.sweep, "family spec: name:a..b, random:n,p,count, random-tree:n,count");
  sweep_cmd->add_flag("--strategy", cfg.strategy, "also play the 3k strategy against every reply");
  auto* play_cmd = app.add_subcommand("play", "play against the engine in the terminal");
  play_cmd->add_option("--role", cfg.role, "your role")->check(CLI::IsMember({"painter", "lister"}));
  play_cmd->add_option("--engine", cfg.engine, "engine strength")->check(CLI::IsMember({"exact", "greedy"}));
  play_cmd->add_option("--transcript", cfg.transcript, "save the transcript here");
  auto* serve_cmd = app.add_subcommand("serve", "run the JSON game service");
  serve_cmd->add_option("--port", cfg.port);
  serve_cmd->add_option("--host", cfg.host);
  serve_cmd->add_option("--static", cfg.static_dir, "directory served at /");
  serve_cmd->add_option("--snapshot", cfg.snapshot, "load sessions from and save them to this file");
  for (auto* sub : {solve_cmd, verify_cmd, construct_cmd, sweep_cmd, play_cmd, serve_cmd}) common(sub);

  std::vector<std::string> storage{"slowcolor"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out);
    if (*construct_cmd) return cmd_construct(cfg, out);
    if (*sweep_cmd) return cmd_sweep(cfg, out);
    if (*play_cmd) return cmd_play(cfg, in, out);
    if (*serve_cmd) return cmd_serve(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const SolverTimeout& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const InsufficientConnectivity& e) {
    err << "error: " << e.what() << "\n";
    return kFalsified;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace slowcolor::cli
