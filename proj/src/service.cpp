#include "slowcolor/service.hpp"

#include <random>
#include <sstream>

#include <httplib.h>

#include "slowcolor/error.hpp"
#include "slowcolor/families.hpp"
#include "slowcolor/verifier.hpp"

namespace slowcolor {

struct GameService::Session {
  std::string id;
  GameState game;
  Role human = Role::Painter;
  EngineKind engine = EngineKind::Exact;
  bool hints = false;
  std::optional<VertexSet> pending_mark;  // Lister's mark awaiting Painter
  std::shared_ptr<Solver> solver;         // null when the graph exceeds the cap
  std::optional<int> bound_k;
  std::optional<int> bound_claim;         // 3n/2 + k
  std::chrono::system_clock::time_point created;
  std::chrono::system_clock::time_point updated;
  std::mutex mu;

  explicit Session(Graph g) : game(new_game(std::move(g))) {}
};

namespace {

ServiceResponse error(int status, const std::string& code, const std::string& reason) {
  return {status, {{"error", code}, {"reason", reason}}};
}

// "not-maximal: vertex 5 addable" -> "not-maximal"
std::string code_of(const std::string& reason) { return reason.substr(0, reason.find(':')); }

std::optional<Role> parse_role(const std::string& s) {
  if (s == "lister") return Role::Lister;
  if (s == "painter") return Role::Painter;
  return std::nullopt;
}

std::optional<EngineKind> parse_engine(const std::string& s) {
  if (s == "exact") return EngineKind::Exact;
  if (s == "greedy") return EngineKind::Greedy;
  return std::nullopt;
}

std::string engine_name(EngineKind e) { return e == EngineKind::Exact ? "exact" : "greedy"; }

Graph graph_from_request(const nlohmann::json& spec) {
  if (spec.is_string()) {
    auto g = families::builtin(spec.get<std::string>());
    if (!g) throw ParseError(0, "unknown builtin graph '" + spec.get<std::string>() + "'");
    return *g;
  }
  if (spec.is_object()) return graph_from_json(spec);
  throw ParseError(0, "'graph' must be a builtin name or a graph object");
}

long long epoch_ms(std::chrono::system_clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
}

}  // namespace

GameService::GameService(ServiceOptions opts) : opts_(opts) {
  std::random_device rd;
  next_id_ = (static_cast<std::uint64_t>(rd()) << 20) | 1;
}

GameService::~GameService() = default;

std::size_t GameService::session_count() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::shared_ptr<Solver> GameService::solver_for(const Graph& g) {
  const std::string key = graph_to_json(g).dump();
  std::lock_guard lock(mu_);
  auto& slot = solvers_[key];
  if (!slot) slot = std::make_shared<Solver>(g, opts_.solve);
  return slot;
}

void GameService::engine_marks(Session& s) {
  if (is_terminal(s.game)) {
    s.pending_mark.reset();
    return;
  }
  s.pending_mark = s.engine == EngineKind::Exact ? s.solver->optimal_lister_move(s.game.remaining())
                                                 : s.game.remaining();
}

std::shared_ptr<GameService::Session> GameService::make_session(Graph g, Role human, EngineKind engine, bool hints,
                                                                std::string id) {
  std::shared_ptr<Solver> solver;
  try {
    solver = solver_for(g);
  } catch (const CapExceeded&) {
    if (engine == EngineKind::Exact) throw;
  }
  auto s = std::make_shared<Session>(g);
  s->id = std::move(id);
  s->human = human;
  s->engine = engine;
  s->hints = hints;
  s->solver = std::move(solver);
  if (engine == EngineKind::Exact) s->solver->value();  // warm the memo so engine moves are lookups
  s->created = s->updated = std::chrono::system_clock::now();

  if (auto k = strongest_k(g)) {
    s->bound_k = *k;
    s->bound_claim = 3 * g.order() / 2 + *k;
  }
  return s;
}

ServiceResponse GameService::create_session(const nlohmann::json& body) {
  if (!body.is_object() || !body.contains("graph")) return error(422, "invalid-request", "body needs 'graph'");
  const auto human = parse_role(body.value("human_role", std::string("painter")));
  const auto engine = parse_engine(body.value("engine", std::string("exact")));
  if (!human) return error(422, "invalid-request", "human_role must be 'lister' or 'painter'");
  if (!engine) return error(422, "invalid-request", "engine must be 'exact' or 'greedy'");

  std::optional<Graph> g;
  try {
    g = graph_from_request(body["graph"]);
  } catch (const Error& e) {
    return error(422, "invalid-graph", e.what());
  }

  std::string id;
  {
    std::lock_guard lock(mu_);
    std::ostringstream token;
    token << "s" << std::hex << next_id_++;
    id = token.str();
  }
  std::shared_ptr<Session> s;
  try {
    s = make_session(*g, *human, *engine, body.value("hints", false), id);
    if (*human == Role::Painter) engine_marks(*s);
  } catch (const CapExceeded& e) {
    return error(409, "cap-exceeded", e.what());
  } catch (const SolverTimeout& e) {
    return error(409, "timeout", e.what());
  }
  {
    std::lock_guard lock(mu_);
    sessions_[id] = s;
  }
  std::lock_guard lock(s->mu);
  return {201, state_json(*s)};
}

ServiceResponse GameService::get_state(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  std::lock_guard lock(s->mu);
  return {200, state_json(*s)};
}

ServiceResponse GameService::post_move(const std::string& id, const nlohmann::json& body) {
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  std::lock_guard lock(s->mu);
  if (is_terminal(s->game)) return error(410, "finished", "session " + id + " is finished");
  if (!body.is_object() || !body.contains("vertices")) return error(422, "invalid-request", "body needs 'vertices'");

  VertexSet chosen;
  try {
    chosen = vertex_set_from_json(body["vertices"], s->game.graph().order());
  } catch (const ParseError& e) {
    return error(422, "invalid-vertices", e.what());
  }

  nlohmann::json engine_move;
  try {
    if (s->human == Role::Lister) {
      if (auto err = check_mark(s->game, chosen)) return error(422, "illegal-mark", *err);
      VertexSet d = s->engine == EngineKind::Exact ? s->solver->optimal_painter_reply(s->game.remaining(), chosen)
                                                   : painter_greedy(s->game, chosen);
      s->game = apply_move(s->game, chosen, d);
      engine_move = {{"role", "painter"}, {"deleted", to_json(d)}};
    } else {
      const VertexSet mark = *s->pending_mark;
      if (auto err = check_reply(s->game.graph(), mark, chosen)) return error(422, code_of(*err), *err);
      s->game = apply_move(s->game, mark, chosen);
      engine_marks(*s);
      if (s->pending_mark) engine_move = {{"role", "lister"}, {"marked", to_json(*s->pending_mark)}};
    }
  } catch (const SolverTimeout& e) {
    return error(503, "timeout", e.what());
  }
  s->updated = std::chrono::system_clock::now();
  nlohmann::json out = state_json(*s);
  out["engine_move"] = engine_move;
  return {200, out};
}

ServiceResponse GameService::get_hint(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  std::lock_guard lock(s->mu);
  if (is_terminal(s->game)) return error(410, "finished", "session " + id + " is finished");
  if (!s->hints) return error(403, "hints-disabled", "hints were not enabled for this session");
  if (!s->solver) return error(409, "cap-exceeded", "graph exceeds the solver cap");

  const VertexSet remaining = s->game.remaining();
  try {
    if (s->human == Role::Lister) {
      VertexSet m = s->solver->optimal_lister_move(remaining);
      const int to_go = s->solver->value(remaining);
      return {200, {{"role", "lister"}, {"mark", to_json(m)}, {"value_to_go", to_go},
                    {"total", s->game.score() + to_go}}};
    }
    const VertexSet mark = *s->pending_mark;
    VertexSet d = s->solver->optimal_painter_reply(remaining, mark);
    const int continuation = s->solver->value(remaining - d);
    return {200, {{"role", "painter"}, {"reply", to_json(d)}, {"continuation_value", continuation},
                  {"total", s->game.score() + mark.size() + continuation}}};
  } catch (const SolverTimeout& e) {
    return error(503, "timeout", e.what());
  }
}

nlohmann::json GameService::state_json(const Session& s) const {
  const GameState& g = s.game;
  const bool finished = is_terminal(g);
  nlohmann::json moves = nlohmann::json::array();
  for (const Move& mv : g.transcript()) {
    moves.push_back({{"marked", to_json(mv.marked)}, {"deleted", to_json(mv.deleted)}});
  }
  nlohmann::json pending = nullptr;
  if (!finished) {
    const Role to_act = s.pending_mark ? Role::Painter : Role::Lister;
    pending = {{"role", to_string(to_act)}, {"actor", to_act == s.human ? "human" : "engine"}};
    if (s.pending_mark) pending["mark"] = to_json(*s.pending_mark);
  }
  nlohmann::json j{{"id", s.id},
                   {"graph", graph_to_json(g.graph())},
                   {"human_role", to_string(s.human)},
                   {"engine", engine_name(s.engine)},
                   {"hints", s.hints},
                   {"remaining", to_json(g.remaining())},
                   {"score", g.score()},
                   {"transcript", moves},
                   {"pending", pending},
                   {"finished", finished},
                   {"created_ms", epoch_ms(s.created)},
                   {"updated_ms", epoch_ms(s.updated)}};
  if (s.bound_claim) {
    nlohmann::json bound{{"k", *s.bound_k}, {"claim", *s.bound_claim}};
    if (finished) {
      bound["met"] = g.score() >= *s.bound_claim;
      bound["sharp"] = g.score() == *s.bound_claim;
    }
    j["bound"] = bound;
  }
  if (finished) j["final_score"] = g.score();
  return j;
}

ServiceResponse GameService::handle(const std::string& method, const std::string& path, const std::string& body) {
  nlohmann::json parsed = nlohmann::json::object();
  if (!body.empty()) {
    try {
      parsed = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      return error(400, "invalid-json", e.what());
    }
  }
  const std::string prefix = "/api/sessions";
  if (path.rfind(prefix, 0) != 0) return error(404, "not-found", path);
  std::string rest = path.substr(prefix.size());
  if (rest.empty() || rest == "/") {
    if (method == "POST") return create_session(parsed);
    return error(405, "method-not-allowed", method + " " + path);
  }
  rest = rest.substr(1);
  const auto slash = rest.find('/');
  const std::string id = rest.substr(0, slash);
  const std::string tail = slash == std::string::npos ? "" : rest.substr(slash);
  if (tail.empty() && method == "GET") return get_state(id);
  if (tail == "/moves" && method == "POST") return post_move(id, parsed);
  if (tail == "/hint" && method == "GET") return get_hint(id);
  return error(404, "not-found", method + " " + path);
}

void GameService::mount(httplib::Server& server, const std::string& static_dir) {
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    ServiceResponse r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Post("/api/sessions", forward);
  server.Get(R"(/api/sessions/[^/]+)", forward);
  server.Post(R"(/api/sessions/[^/]+/moves)", forward);
  server.Get(R"(/api/sessions/[^/]+/hint)", forward);
  if (!static_dir.empty()) server.set_mount_point("/", static_dir);
}

nlohmann::json GameService::snapshot() {
  std::map<std::string, std::shared_ptr<Session>> copy;
  {
    std::lock_guard lock(mu_);
    copy = sessions_;
  }
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [id, s] : copy) {
    std::lock_guard lock(s->mu);
    out.push_back({{"id", id},
                   {"human_role", to_string(s->human)},
                   {"engine", engine_name(s->engine)},
                   {"hints", s->hints},
                   {"transcript", transcript_to_json(s->game)}});
  }
  return {{"sessions", out}};
}

void GameService::restore(const nlohmann::json& snap) {
  for (const auto& entry : snap.at("sessions")) {
    GameState replayed = replay_transcript(entry.at("transcript"));
    auto human = parse_role(entry.at("human_role").get<std::string>());
    auto engine = parse_engine(entry.at("engine").get<std::string>());
    if (!human || !engine) throw ParseError(0, "bad role or engine in snapshot");
    auto s = make_session(replayed.graph(), *human, *engine, entry.value("hints", false),
                          entry.at("id").get<std::string>());
    s->game = replayed;
    if (*human == Role::Painter) engine_marks(*s);
    std::lock_guard lock(mu_);
    sessions_[s->id] = s;
  }
}

}  // namespace slowcolor
