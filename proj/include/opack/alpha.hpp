#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "opack/graph.hpp"
#include "opack/sets.hpp"

namespace opack {

enum class Verdict { NoConflict = 0, Conflict = 1 };

// Declarative description of an overlap constraint; see the README format
// reference for the JSON encoding.
struct AlphaSpec {
  enum class Kind {
    size,
    weight,
    measure,
    metric,
    pattern,
    property,
    dense_overlap,
    density,
    conjunction,
  };
  enum class PatternClass { clique, edgeless, forbidden_induced };

  Kind kind = Kind::size;
  int t = 0;                     // size / density: overlap size bound
  double w_t = 0.0;              // weight: overlap weight bound
  double measure_t = 0.0;        // measure: threshold
  std::vector<double> values;    // measure: per-element measure values
  double d_t = 0.0;              // metric: pairwise distance bound
  bool graph_distance = false;   // metric realized over graph hop distances
  PatternClass pattern_class = PatternClass::clique;
  std::vector<Graph> forbidden;  // pattern: forbidden induced subgraphs
  int c = 0;                     // dense_overlap / density: edge bound
  std::vector<AlphaSpec> parts;  // conjunction

  bool operator==(const AlphaSpec&) const = default;

  bool needs_weights() const;
  bool needs_properties() const;
  bool needs_distances() const;
  bool needs_graph() const;
};

std::string to_string(AlphaSpec::Kind kind);

// A pairwise verdict function closed over its parameters and annotations.
// Evaluation is memoized per unordered pair of canonical sets; copies share
// the memo and the call counter. Safe for concurrent evaluation.
class OverlapPredicate {
 public:
  using Fn = std::function<Verdict(const ElementSet&, const ElementSet&)>;

  OverlapPredicate() = default;
  OverlapPredicate(std::string name, Fn fn);

  Verdict evaluate(const ElementSet& a, const ElementSet& b) const;
  std::uint64_t evaluations() const;
  const std::string& name() const;

 private:
  struct Key {
    std::vector<Elem> a, b;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  struct State {
    std::string name;
    Fn fn;
    mutable std::mutex mu;
    mutable std::unordered_map<Key, Verdict, KeyHash> memo;
    mutable std::atomic<std::uint64_t> calls{0};
  };
  std::shared_ptr<State> st_;
};

// Constructs the predicate for a spec over a universe, plus a graph context
// for the graph-flavoured kinds. All parameter and annotation problems are
// reported here, never at evaluation time.
OverlapPredicate build_predicate(const AlphaSpec& spec, const Universe& universe,
                                 const Graph* graph_context = nullptr);

struct HereditaryViolation {
  ElementSet si, sj;          // no-conflict pair
  ElementSet si_sub, sj_sub;  // conflicting subset pair
};

struct ConditionTwoViolation {
  ElementSet si, sj;          // conflicting pair
  bool empty_overlap = false;
  ElementSet si_sub, sj_sub;  // no-conflict subset pair with empty residual
};

struct ConditionReport {
  std::vector<HereditaryViolation> hereditary_violations;
  std::vector<ConditionTwoViolation> condition_ii_violations;
  std::uint64_t checked_pairs = 0;

  bool ok() const {
    return hereditary_violations.empty() && condition_ii_violations.empty();
  }
};

// Exhaustively checks Definition-1 conditions (i) and (ii) over all ordered
// pairs of subsets of {0..n_max-1} with sizes <= r, and all of their subset
// pairs. n_max must be <= 8. The predicate's annotations must cover
// elements 0..n_max-1.
ConditionReport validate_well_conditioned(const OverlapPredicate& pred,
                                          int n_max, int r);

}  // namespace opack
