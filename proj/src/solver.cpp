#include "slowcolor/solver.hpp"

#include <algorithm>
#include <iostream>
#include <limits>

#include "slowcolor/error.hpp"

namespace slowcolor {

namespace {

constexpr int kDenseMemoMaxOrder = 20;
constexpr int kDenseReplyMaxOrder = 16;
constexpr int kWarnAboveOrder = 16;
constexpr std::uint64_t kDeadlineCheckEvery = 1024;

}  // namespace

Solver::Solver(Graph g, SolveOptions opts) : graph_(std::move(g)), opts_(opts) {
  if (opts_.cap < 1 || opts_.cap > kMaxVertices) {
    throw PreconditionError("solver cap must be in 1.." + std::to_string(kMaxVertices));
  }
  if (graph_.order() > opts_.cap) {
    throw CapExceeded("graph has " + std::to_string(graph_.order()) + " vertices, solver cap is " +
                      std::to_string(opts_.cap));
  }
  if (graph_.order() > kWarnAboveOrder) {
    std::clog << "warning: exact solving beyond " << kWarnAboveOrder << " vertices is unlikely to finish\n";
  }
  if (graph_.order() <= kDenseMemoMaxOrder) dense_memo_.assign(std::size_t{1} << graph_.order(), -1);
  if (graph_.order() <= kDenseReplyMaxOrder) dense_replies_.resize(std::size_t{1} << graph_.order());
}

int* Solver::memo_slot(VertexSet r) {
  if (!dense_memo_.empty()) return &dense_memo_[r.bits()];
  return &sparse_memo_.try_emplace(r.bits(), -1).first->second;
}

const std::vector<VertexSet>& Solver::replies(VertexSet m) {
  std::vector<VertexSet>* slot =
      dense_replies_.empty() ? &sparse_replies_[m.bits()] : &dense_replies_[m.bits()];
  if (slot->empty()) {
    *slot = maximal_independent_subsets(graph_, m);
    // Larger deletions first tend to find Painter's minimum early.
    std::stable_sort(slot->begin(), slot->end(),
                     [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  }
  return *slot;
}

void Solver::arm_deadline() {
  deadline_.reset();
  if (opts_.timeout) deadline_ = std::chrono::steady_clock::now() + *opts_.timeout;
}

void Solver::tick() {
  ++expanded_;
  if (deadline_ && expanded_ % kDeadlineCheckEvery == 0 && std::chrono::steady_clock::now() > *deadline_) {
    throw SolverTimeout("solver timed out after " + std::to_string(expanded_) + " expansions");
  }
}

int Solver::evaluate(VertexSet r) {
  if (r.empty()) return 0;
  if (int cached = *memo_slot(r); cached >= 0) return cached;
  tick();

  int best = 0;
  const int k = r.size();
  if (k == 1) {
    best = 1;
  } else if (auto comps = opts_.strict ? std::vector<VertexSet>{} : components(graph_, r); comps.size() > 1) {
    for (VertexSet c : comps) best += evaluate(c);
  } else {
    std::vector<Vertex> pos = r.to_vector();
    const int cap = triangular(k);
    const int tail_cap = triangular(k - 1);
    // Marks by decreasing size. Every reply deletes at least one vertex, so a
    // mark of size s is worth at most s + T(k-1).
    for (int s = k; s >= 1 && s + tail_cap > best && best < cap; --s) {
      const std::uint64_t limit = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k);
      for (std::uint64_t c = (std::uint64_t{1} << s) - 1; c < limit && c != 0;) {
        VertexSet m;
        for (std::uint64_t rest = c; rest != 0; rest &= rest - 1) m.insert(pos[std::countr_zero(rest)]);

        // Painter's minimum only matters if it exceeds best - s.
        const int cutoff = best - s;
        int worst = std::numeric_limits<int>::max();
        for (VertexSet d : replies(m)) {
          worst = std::min(worst, evaluate(r - d));
          if (worst <= cutoff) break;
        }
        if (worst > cutoff) best = s + worst;
        if (best >= cap) break;

        // Next combination with the same popcount.
        const std::uint64_t low = c & (~c + 1);
        const std::uint64_t ripple = c + low;
        if (ripple == 0) break;
        c = (((ripple ^ c) >> 2) / low) | ripple;
      }
    }
  }
  *memo_slot(r) = best;
  ++memoized_;
  return best;
}

int Solver::payoff_locked(VertexSet r, VertexSet m, int needed) {
  int worst = std::numeric_limits<int>::max();
  for (VertexSet d : replies(m)) {
    worst = std::min(worst, evaluate(r - d));
    if (m.size() + worst < needed) break;
  }
  return m.size() + worst;
}

int Solver::value(VertexSet remaining) {
  std::lock_guard lock(mu_);
  if (!remaining.subset_of(graph_.vertices())) throw PreconditionError("remaining set leaves the graph");
  arm_deadline();
  return evaluate(remaining);
}

int Solver::mark_payoff(VertexSet remaining, VertexSet m) {
  std::lock_guard lock(mu_);
  if (m.empty() || !m.subset_of(remaining) || !remaining.subset_of(graph_.vertices())) {
    throw PreconditionError("illegal mark");
  }
  arm_deadline();
  return payoff_locked(remaining, m, std::numeric_limits<int>::min());
}

VertexSet Solver::optimal_lister_move(VertexSet remaining) {
  std::lock_guard lock(mu_);
  if (remaining.empty() || !remaining.subset_of(graph_.vertices())) {
    throw PreconditionError("remaining set must be a nonempty subset of the vertices");
  }
  arm_deadline();
  const int target = evaluate(remaining);
  const std::uint64_t all = remaining.bits();
  // Ascending bitmask order, so the first optimal mark is the smallest one.
  for (std::uint64_t m = (0 - all) & all; m != 0; m = (m - all) & all) {
    VertexSet mark(m);
    if (payoff_locked(remaining, mark, target) == target) return mark;
  }
  throw Error("no mark attains the solved value");
}

VertexSet Solver::optimal_painter_reply(VertexSet remaining, VertexSet m) {
  std::lock_guard lock(mu_);
  if (m.empty() || !m.subset_of(remaining) || !remaining.subset_of(graph_.vertices())) {
    throw PreconditionError("illegal mark");
  }
  arm_deadline();
  VertexSet best;
  int best_value = std::numeric_limits<int>::max();
  for (VertexSet d : replies(m)) {
    int v = evaluate(remaining - d);
    if (v < best_value || (v == best_value && d < best)) {
      best_value = v;
      best = d;
    }
  }
  return best;
}

SolveResult Solver::solve() {
  const auto start = std::chrono::steady_clock::now();
  SolveResult out;
  out.value = value();
  out.best_opening = optimal_lister_move(graph_.vertices());
  out.stats = stats();
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

SolveStats Solver::stats() const {
  std::lock_guard lock(mu_);
  return {memoized_, expanded_, 0.0};
}

SolveResult solve(const Graph& g, SolveOptions opts) { return Solver(g, opts).solve(); }

SolveResult solve_additive(const Graph& g, SolveOptions opts) {
  const auto start = std::chrono::steady_clock::now();
  Solver whole(g, opts);
  SolveResult out;
  for (VertexSet comp : components(g, g.vertices())) {
    out.value += whole.value(comp);
  }
  out.best_opening = whole.optimal_lister_move(g.vertices());
  out.stats = whole.stats();
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

int closed_form_path(int n) {
  if (n < 1) throw PreconditionError("path order must be positive");
  return 3 * n / 2;
}

int star_u(int r) {
  if (r < 0) throw PreconditionError("u_r needs r >= 0");
  int k = 0;
  while (triangular(k + 1) <= r) ++k;
  return k;
}

int closed_form_star(int n) {
  if (n < 2) throw PreconditionError("star order must be at least 2");
  return n + star_u(n - 1);
}

nlohmann::json to_json(const SolveResult& r, bool include_timing) {
  nlohmann::json stats{{"states_memoized", r.stats.states_memoized}, {"nodes_expanded", r.stats.nodes_expanded}};
  if (include_timing) stats["elapsed_ms"] = r.stats.elapsed_ms;
  return {{"value", r.value}, {"best_opening", to_json(r.best_opening)}, {"stats", stats}};
}

}  // namespace slowcolor
