#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slowcolor/graph.hpp"
#include "slowcolor/verifier.hpp"

namespace slowcolor::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kResource = 2, kFalsified = 3 };

struct RunConfig {
  std::string command;
  std::string graph;                // file path or builtin spec
  std::optional<int> k;
  int cap = 14;
  std::optional<int> timeout_ms;
  std::string format = "text";      // text | json
  std::uint64_t seed = 0;
  bool strict = false;

  std::string claim;                // verify
  std::string suite;                // verify all --suite standard
  std::string deleted;              // construct
  std::string matching;             // construct, e.g. "1-2,3-6,4-5"
  std::vector<std::string> sweep;   // sweep family specs
  bool strategy = false;            // sweep: also run the 3k strategy against every reply
  std::string role = "painter";     // play
  std::string engine = "exact";     // play
  std::string transcript;           // play: where to save the transcript
  int port = 8080;                  // serve
  std::string host = "127.0.0.1";
  std::string static_dir;
  std::string snapshot;

  SolveOptions solve_options() const;
};

/// A file if `source` names one, otherwise a builtin. Throws ParseError.
Graph resolve_graph(const std::string& source);

/// Labels separated by commas or spaces, optionally wrapped in braces.
VertexSet parse_vertex_list(const Graph& g, const std::string& text);

/// Pairs "u-v" separated by commas, in labels.
EdgeSet parse_pairs(const Graph& g, const std::string& text);

/// Expands "name:a..b", "random:n,p,count", "random-tree:n,count",
/// "random-forest:n,count" or a single builtin spec.
std::vector<Instance> expand_family(const std::string& spec, std::uint64_t seed);

int cmd_solve(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_construct(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_play(const RunConfig& cfg, std::istream& in, std::ostream& out);
int cmd_serve(const RunConfig& cfg, std::ostream& out);

/// Parses argv-style arguments and dispatches. Errors go to `err` and map to exit codes.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace slowcolor::cli
