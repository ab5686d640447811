#pragma once

#include <utility>
#include <vector>

#include "bcfea/model.hpp"

namespace bcfea {

/// Undirected graph on vertices 0..n-1 with sorted adjacency lists.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
  static Graph from_instance(const Instance& inst);

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

/// Maximal connected components, each sorted; components ordered by their
/// smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Result of 2-coloring one connected component: either the bipartition
/// (unique up to swapping sides) or an odd-cycle certificate. An isolated
/// vertex lands on side X with Y empty.
struct BipartitionResult {
  bool bipartite = false;
  std::vector<int> side_x, side_y;
  std::vector<int> odd_cycle;  // vertices of a cycle of odd length, in order
};

BipartitionResult bipartition(const Graph& g, const std::vector<int>& component);

/// Chordality check via maximum cardinality search. On success `peo` holds a
/// perfect elimination ordering (first vertex eliminated first); on failure
/// `hole` is a chordless cycle of length >= 4.
struct ChordalityResult {
  bool chordal = false;
  std::vector<int> peo;
  std::vector<int> hole;
};

ChordalityResult recognize_chordal(const Graph& g);

/// Maximum-cardinality matching in a general graph (blossom contraction).
/// Returns disjoint vertex pairs.
std::vector<std::pair<int, int>> maximum_matching(const Graph& g);

}  // namespace bcfea
