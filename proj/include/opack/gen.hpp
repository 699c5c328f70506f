#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "opack/alpha.hpp"
#include "opack/graph.hpp"
#include "opack/instance.hpp"

namespace opack {

// Draw helpers over std::mt19937_64. The mappings avoid std::*_distribution
// so that a seed produces the same bytes on every platform.
int rnd_int(std::mt19937_64& rng, int lo, int hi);
double rnd_unit(std::mt19937_64& rng);
bool rnd_bool(std::mt19937_64& rng, double p);

// Number of distinct non-empty sets of size <= r over n elements, capped at
// 2^20; callers clamp their m against it.
std::uint64_t max_distinct_sets(int n, int r);

std::vector<double> random_weights(std::mt19937_64& rng, int n);
std::vector<char> random_properties(std::mt19937_64& rng, int n);
// Random integral metric: symmetric draws closed under shortest paths.
DistanceMatrix random_metric(std::mt19937_64& rng, int n);
Graph random_graph(std::mt19937_64& rng, int n, double edge_prob);
std::vector<ElementSet> random_heads(std::mt19937_64& rng, int n, int r, int count);

// Maps "size", "weight", ..., "distance" to a kind (+ the graph-distance
// flavour for "distance"). Empty optional for unknown names.
std::optional<std::pair<AlphaSpec::Kind, bool>> alpha_kind_from_string(
    const std::string& name);
std::optional<PiSpec::Kind> pi_kind_from_string(const std::string& name);

struct AlphaOverrides {
  std::optional<int> t;
  std::optional<double> w_t;
  std::optional<double> d_t;
  std::optional<int> c;
};

// A predicate together with the randomized annotations it closes over.
struct AlphaDraw {
  AlphaSpec spec;
  Universe universe;
  std::optional<Graph> graph;

  OverlapPredicate build() const {
    return build_predicate(spec, universe, graph ? &*graph : nullptr);
  }
};

AlphaDraw random_alpha_draw(AlphaSpec::Kind kind, int n, std::mt19937_64& rng,
                            const AlphaOverrides& overrides = {});

struct GenParams {
  bool graph_form = false;
  int n = 10;
  int m = 15;  // set form only
  int r = 3;
  int k = 2;
  AlphaSpec::Kind alpha_kind = AlphaSpec::Kind::size;
  bool graph_distance = false;  // "distance" flavour; graph form only
  PiSpec::Kind pi_kind = PiSpec::Kind::clique;
  int cluster_heads = 0;
  double edge_prob = 0.4;
};

SetSystemInstance random_set_instance(std::mt19937_64& rng, const GenParams& params);
GraphInstance random_graph_instance(std::mt19937_64& rng, const GenParams& params);

// Reproducible instance bytes: the same params and seed always produce the
// same JSON.
std::string gen_instance_json(const GenParams& params, std::uint64_t seed);

}  // namespace opack
