#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opack/sets.hpp"

namespace opack {

// Simple undirected graph over vertices 0..n-1 with O(1) adjacency queries.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // canonical: u < v, sorted
  std::vector<char> adj;                   // n*n adjacency matrix

  // Validates: endpoints in range, no self-loops, no parallel edges.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  bool adjacent(int u, int v) const {
    return adj[static_cast<std::size_t>(u) * n + v] != 0;
  }
  int edges_within(const ElementSet& s) const;
  int degree_within(int v, const ElementSet& s) const;
  int boundary_edges(const ElementSet& s) const;

  bool operator==(const Graph&) const = default;
};

// The community property a packed subgraph must satisfy.
struct PiSpec {
  enum class Kind { clique, family, min_edges, min_degree_offset };

  Kind kind = Kind::clique;
  std::vector<Graph> patterns;            // family: the models H
  int min_edges = 0;                      // min_edges: t
  std::optional<int> max_boundary_edges;  // min_edges: optional cut bound
  int degree_offset = 0;                  // min_degree_offset: c

  bool operator==(const PiSpec&) const = default;
};

// True iff the map s -> pattern can be completed to an isomorphism between
// G[s] and the pattern graph. Exhaustive backtracking; |s| is at most r.
bool induced_isomorphic(const Graph& g, const ElementSet& s, const Graph& pattern);

bool check_pi(const Graph& g, const ElementSet& s, const PiSpec& pi);

// All vertex sets s with min_size <= |s| <= r and G[s] satisfying pi, as a
// canonically ordered family (lexicographic by element sequence).
SetFamily enumerate_pi_subgraphs(const Graph& g, const PiSpec& pi, int r,
                                 int min_size = 1);

// All-pairs shortest-path hop counts; unreachable pairs are +infinity.
DistanceMatrix graph_distance_matrix(const Graph& g);

// Plain text format: first line "n m", then m lines "u v".
Graph parse_edge_list(const std::string& text);

}  // namespace opack
