#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "slowcolor/graph.hpp"

namespace slowcolor::families {

/// Triangles {1,2,3} and {4,5,6} joined by rungs 1-4, 2-5, 3-6. Vertices are
/// 0-indexed and carry the labels "1".."6".
Graph prism();
Graph path(int n);
/// K_{1,n-1}: center 0, leaves 1..n-1.
Graph star(int n);
Graph cycle(int n);
Graph complete(int n);
Graph edgeless(int n);
Graph complete_bipartite(int a, int b);
/// The d-dimensional hypercube; cube(3) is Q3.
Graph cube(int d = 3);
Graph petersen();
Graph disjoint_union(const Graph& a, const Graph& b);

/// Parses "prism", "path:5", "star:4", "cycle:5", "complete:4", "edgeless:3",
/// "cube", "cube:4", "petersen", "bipartite:3,3". Returns nullopt for unknown names.
std::optional<Graph> builtin(std::string_view spec);

/// Seeded generators. Draws use raw engine output so sequences are stable for a seed.
using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);
/// G(n, p) with p given in percent.
Graph random_graph(int n, int edge_percent, Rng& rng);
/// Uniform labeled tree via a random Prüfer sequence.
Graph random_tree(int n, Rng& rng);
/// Disjoint union of random trees whose orders sum to n.
Graph random_forest(int n, Rng& rng);

}  // namespace slowcolor::families
