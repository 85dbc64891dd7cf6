#pragma once

// Brute-force reference implementations. They only read adjacency from a Graph
// and share no code with the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "slowcolor/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

struct Adj {
  int n = 0;
  std::vector<Mask> nbr;

  explicit Adj(const slowcolor::Graph& g) : n(g.order()), nbr(g.order(), 0) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && g.adjacent(u, v)) nbr[u] |= Mask{1} << v;
  }
};

inline bool independent(const Adj& a, Mask s) {
  for (int v = 0; v < a.n; ++v)
    if ((s >> v & 1) && (a.nbr[v] & s)) return false;
  return true;
}

/// Every maximal independent subset of m, by checking all 2^|m| subsets.
inline std::vector<Mask> maximal_independent(const Adj& a, Mask m) {
  std::vector<Mask> out;
  for (Mask d = m;; d = (d - 1) & m) {
    if (d && independent(a, d)) {
      bool maximal = true;
      for (int v = 0; v < a.n && maximal; ++v)
        if ((m >> v & 1) && !(d >> v & 1) && independent(a, d | Mask{1} << v)) maximal = false;
      if (maximal) out.push_back(d);
    }
    if (d == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Game value by plain minimax without any transposition table.
class NaiveGame {
 public:
  explicit NaiveGame(const slowcolor::Graph& g) : a_(g), mis_(Mask{1} << g.order()) {
    for (Mask m = 1; m < (Mask{1} << a_.n); ++m) mis_[m] = maximal_independent(a_, m);
  }

  int value(Mask r) const {
    if (r == 0) return 0;
    int best = 0;
    for (Mask m = r; m; m = (m - 1) & r) {
      int worst = -1;
      for (Mask d : mis_[m]) {
        const int v = value(r & ~d);
        if (worst < 0 || v < worst) worst = v;
      }
      best = std::max(best, popcount(m) + worst);
    }
    return best;
  }

  int value() const { return value((Mask{1} << a_.n) - 1); }

 private:
  Adj a_;
  std::vector<std::vector<Mask>> mis_;  // precomputed reply lists, not values
};

inline bool connected(const Adj& a, Mask within) {
  if (within == 0) return true;
  Mask seen = within & (~within + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (int v = 0; v < a.n; ++v) {
      if ((seen >> v & 1) && (a.nbr[v] & within & ~seen)) {
        seen |= a.nbr[v] & within;
        grew = true;
      }
    }
  }
  return seen == within;
}

/// Smallest vertex cut, by trying every subset in order of size. n-1 for complete graphs.
inline int vertex_connectivity(const slowcolor::Graph& g) {
  const Adj a(g);
  const Mask all = (Mask{1} << a.n) - 1;
  for (int s = 0; s <= a.n - 2; ++s) {
    for (Mask cut = 0; cut <= all; ++cut) {
      if (popcount(cut) != s) continue;
      if (!connected(a, all & ~cut)) return s;
    }
  }
  return a.n - 1;
}

inline int independence_number(const slowcolor::Graph& g, Mask within) {
  const Adj a(g);
  int best = 0;
  for (Mask s = within;; s = (s - 1) & within) {
    if (independent(a, s)) best = std::max(best, popcount(s));
    if (s == 0) break;
  }
  return best;
}

inline std::vector<std::pair<int, int>> edge_list(const slowcolor::Graph& g) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) es.emplace_back(u, v);
  return es;
}

/// Number of perfect matchings, counted over all edge subsets of size n/2.
inline int count_perfect_matchings(const slowcolor::Graph& g) {
  const auto es = edge_list(g);
  if (g.order() % 2) return 0;
  int count = 0;
  std::function<void(std::size_t, Mask)> go = [&](std::size_t i, Mask covered) {
    if (popcount(covered) == g.order()) {
      ++count;
      return;
    }
    if (i == es.size()) return;
    auto [u, v] = es[i];
    if (!(covered >> u & 1) && !(covered >> v & 1)) go(i + 1, covered | Mask{1} << u | Mask{1} << v);
    go(i + 1, covered);
  };
  go(0, 0);
  return count;
}

inline bool acyclic(int n, const std::vector<std::pair<int, int>>& es) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : es) {
    const int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

/// Whether some acyclic edge subset gives every vertex degree 1 or 3; with
/// odd_exception and n odd, exactly one vertex may instead have degree 0 or 6.
inline bool forest_13_exists(const slowcolor::Graph& g, bool odd_exception) {
  const auto es = edge_list(g);
  const int n = g.order();
  for (Mask pick = 0; pick < (Mask{1} << es.size()); ++pick) {
    std::vector<std::pair<int, int>> chosen;
    std::vector<int> deg(n, 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (pick >> i & 1) {
        chosen.push_back(es[i]);
        ++deg[es[i].first];
        ++deg[es[i].second];
      }
    }
    int odd_ones = 0, exceptions = 0;
    for (int d : deg) {
      if (d == 1 || d == 3) ++odd_ones;
      else if (d == 0 || d == 6) ++exceptions;
    }
    const bool degrees_ok = odd_ones == n || (odd_exception && n % 2 == 1 && odd_ones == n - 1 && exceptions == 1);
    if (degrees_ok && acyclic(n, chosen)) return true;
  }
  return false;
}

/// max over nonempty induced H of |V(H)| / alpha(H), as a (numerator, denominator) pair.
inline std::pair<int, int> max_ratio(const slowcolor::Graph& g) {
  const Mask all = (Mask{1} << g.order()) - 1;
  std::pair<int, int> best{0, 1};
  for (Mask h = 1; h <= all; ++h) {
    const int p = popcount(h), q = independence_number(g, h);
    if (p * best.second > best.first * q) best = {p, q};
  }
  return best;
}

/// Bitmask of the upper triangle, minimized over all vertex permutations.
inline Mask canonical_form(int n, Mask edges) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
  };
  Mask best = ~Mask{0};
  do {
    Mask image = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (edges >> i & 1) image |= Mask{1} << index(perm[pairs[i].first], perm[pairs[i].second]);
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline slowcolor::Graph graph_from_mask(int n, Mask edges) {
  std::vector<slowcolor::Edge> es;
  int i = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++i)
      if (edges >> i & 1) es.emplace_back(u, v);
  return slowcolor::Graph(n, es);
}

/// One graph per isomorphism class on n vertices.
inline std::vector<slowcolor::Graph> all_graphs(int n, bool connected_only) {
  const int pairs = n * (n - 1) / 2;
  std::set<Mask> seen;
  std::vector<slowcolor::Graph> out;
  for (Mask e = 0; e < (Mask{1} << pairs); ++e) {
    const Mask c = canonical_form(n, e);
    if (!seen.insert(c).second) continue;
    slowcolor::Graph g = graph_from_mask(n, c);
    if (connected_only && !connected(Adj(g), (Mask{1} << n) - 1)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

/// AHU encoding of a tree rooted at r.
inline std::string ahu(const std::vector<std::vector<int>>& adj, int r, int parent) {
  std::vector<std::string> kids;
  for (int c : adj[r])
    if (c != parent) kids.push_back(ahu(adj, c, r));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

/// Canonical string of an unrooted tree: the least AHU encoding over all roots.
inline std::string tree_canonical(const std::vector<std::vector<int>>& adj) {
  std::string best;
  for (int r = 0; r < static_cast<int>(adj.size()); ++r) {
    std::string s = ahu(adj, r, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

/// One tree per isomorphism class on n vertices, from all Prüfer sequences.
inline std::vector<slowcolor::Graph> all_trees(int n) {
  if (n == 1) return {slowcolor::Graph(1, std::vector<slowcolor::Edge>{})};
  if (n == 2) return {slowcolor::Graph(2, {slowcolor::Edge(0, 1)})};
  std::set<std::string> seen;
  std::vector<slowcolor::Graph> out;
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<slowcolor::Edge> es;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      es.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        if (u < 0) u = v;
        else es.emplace_back(u, v);
      }
    }
    std::vector<std::vector<int>> adj(n);
    for (auto e : es) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    if (seen.insert(tree_canonical(adj)).second) out.emplace_back(n, es);

    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

}  // namespace oracle
