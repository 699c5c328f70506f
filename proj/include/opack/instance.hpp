#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opack/alpha.hpp"
#include "opack/graph.hpp"
#include "opack/sets.hpp"

namespace opack {

struct Solution {
  std::vector<int> chosen;  // indices into family.members, pairwise distinct

  bool operator==(const Solution&) const = default;
};

struct SetSystemInstance {
  Universe universe;
  SetFamily family;
  int k = 1;
  AlphaSpec alpha;
  std::optional<std::vector<ElementSet>> cluster_heads;
  // Present on instances obtained from a graph reduction; feeds the
  // graph-flavoured alpha kinds. Never part of the set-instance JSON.
  std::optional<Graph> graph_context;
  std::vector<std::string> load_warnings;

  OverlapPredicate make_predicate() const {
    return build_predicate(alpha, universe,
                           graph_context ? &*graph_context : nullptr);
  }
};

struct GraphInstance {
  Graph graph;
  int r = 1;
  int k = 1;
  PiSpec pi;
  AlphaSpec alpha;
  std::optional<std::vector<double>> weights;
  std::optional<std::vector<char>> properties;
  std::optional<std::vector<ElementSet>> cluster_heads;
  std::vector<std::string> load_warnings;
};

// JSON instance formats; see the README format reference. Both parsers
// fully validate (ranges, duplicates, metric axioms, annotation
// requirements of the alpha spec) and canonicalize all sets.
SetSystemInstance parse_instance(const std::string& text);
std::string serialize_instance(const SetSystemInstance& instance);
GraphInstance parse_graph_instance(const std::string& text);
std::string serialize_graph_instance(const GraphInstance& instance);

// Standalone spec sub-objects, e.g. for combining an edge-list graph with
// CLI-provided specs.
AlphaSpec parse_alpha_spec(const std::string& json_text);
PiSpec parse_pi_spec(const std::string& json_text, int r);

// All indices of family members containing s, in canonical order.
std::vector<int> sets_containing(const SetFamily& family, const ElementSet& s);

// Builds the equivalent set instance: universe = V(G), family = all induced
// pi-subgraphs of order <= r, annotations derived from the graph as the
// alpha spec requires.
SetSystemInstance reduce_to_set_instance(const GraphInstance& gi,
                                         int min_pi_size = 1);

struct ValidationReport {
  bool pass = true;
  std::vector<std::string> problems;
  std::vector<std::pair<int, int>> conflicting_pairs;
  std::vector<int> sets_missing_head;                  // PCH condition 1
  std::vector<std::pair<int, int>> shared_head_pairs;  // PCH condition 2
};

// Checks cardinality, distinctness and every pairwise verdict; in PCH mode
// (instance has cluster heads) also the two PCH conditions. Violations are
// report entries, never exceptions.
ValidationReport validate_solution(const SetSystemInstance& instance,
                                   const Solution& solution,
                                   bool shared_heads = false);

}  // namespace opack
