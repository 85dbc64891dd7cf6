#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "slowcolor/game.hpp"
#include "slowcolor/solver.hpp"
#include "slowcolor/strategies.hpp"

namespace httplib {
class Server;
}

namespace slowcolor {

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

enum class EngineKind { Exact, Greedy };

struct ServiceOptions {
  SolveOptions solve;  // cap applies to exact engines and hints
};

/// Session-keeping JSON API over the game engine and solver.
///
///   POST /api/sessions                  {"graph": "prism" | {...}, "human_role": "painter",
///                                        "engine": "exact" | "greedy", "hints": bool}
///   GET  /api/sessions/{id}
///   POST /api/sessions/{id}/moves       {"vertices": [...]}
///   GET  /api/sessions/{id}/hint
///
/// Errors are {"error": code, "reason": text}. Requests on one session are serialized;
/// different sessions proceed independently.
class GameService {
 public:
  explicit GameService(ServiceOptions opts = {});
  ~GameService();
  GameService(const GameService&) = delete;
  GameService& operator=(const GameService&) = delete;

  ServiceResponse create_session(const nlohmann::json& body);
  ServiceResponse get_state(const std::string& id);
  ServiceResponse post_move(const std::string& id, const nlohmann::json& body);
  ServiceResponse get_hint(const std::string& id);

  /// Routes a request by method and path; bodies are JSON text.
  ServiceResponse handle(const std::string& method, const std::string& path, const std::string& body);

  /// Registers the API routes (and optionally a static directory at "/") on a server.
  void mount(httplib::Server& server, const std::string& static_dir = "");

  /// Every session's settings and transcript, replayable by restore().
  nlohmann::json snapshot();
  void restore(const nlohmann::json& snapshot);

  std::size_t session_count() const;

 private:
  struct Session;

  std::shared_ptr<Session> find(const std::string& id);
  std::shared_ptr<Solver> solver_for(const Graph& g);
  std::shared_ptr<Session> make_session(Graph g, Role human, EngineKind engine, bool hints, std::string id);
  void engine_marks(Session& s);
  nlohmann::json state_json(const Session& s) const;

  ServiceOptions opts_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::map<std::string, std::shared_ptr<Solver>> solvers_;  // keyed by graph JSON
  std::uint64_t next_id_ = 1;
};

}  // namespace slowcolor
