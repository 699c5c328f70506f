#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opack/alpha.hpp"
#include "opack/instance.hpp"
#include "opack/sets.hpp"

namespace opack {

// The collection carried by one search-tree node: one growing subset per
// solution slot. Slots may equal one another.
struct PartialSolution {
  std::vector<ElementSet> slots;

  bool operator==(const PartialSolution&) const = default;
};

struct GreedyOutcome {
  enum class Kind { Complete, Stuck, Infeasible };

  Kind kind = Kind::Infeasible;
  std::vector<int> greedy_members;  // the partial greedy collection Q^gr
  int stuck_slot = -1;              // 0-based; Stuck only (= greedy_members.size())
};

struct SolveReport {
  std::optional<Solution> solution;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t root_children = 0;
  std::uint64_t predicate_evaluations = 0;
  bool seeded_by_maximal = false;
  bool budget_exhausted = false;
  std::optional<std::uint64_t> cluster_head_count;  // PCH runs only
  std::vector<std::string> warnings;                // surfaced on stderr by the CLI
};

std::string serialize_report(const SolveReport& report);

struct SolveOptions {
  std::optional<std::uint64_t> node_budget;  // default: the theoretical tree bound
  bool parallel = false;
  bool shared_heads = false;  // PCH runs: drop the no-shared-head-elements condition
  // Instrumentation hook, called once per expanded node (serial mode only).
  std::function<void(const PartialSolution&, int depth, const GreedyOutcome&,
                     const std::vector<PartialSolution>& children)>
      on_expand;
};

// Saturating helpers for the tree-size bounds.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k);

// C(k*r*(k-1), k) * (r(k-1))^((r-1)k) — the search-tree size bound.
std::uint64_t default_node_budget(int r, int k);
// C(l, k) * (r*k)^((r-1)k) — the PCH variant bound, l = |C|.
std::uint64_t default_node_budget_pch(std::size_t l, int r, int k);

// Greedy scan in canonical member order; the result is conflict-free and
// cannot be extended by any member outside it.
std::vector<int> maximal_alpha_packing(const SetFamily& family,
                                       const OverlapPredicate& pred);

// One child per size-k multiset over val(M), each slot a singleton, in
// lexicographic multiset order.
std::vector<PartialSolution> initialize_children(const std::vector<int>& maximal,
                                                 const SetFamily& family, int k);

// All members containing slot `slot` of q that neither conflict with nor
// equal any other slot, in canonical order: the sponsor collection the
// greedy pass draws from.
std::vector<int> feasible_sponsors(int slot, const PartialSolution& q,
                                   const SetFamily& family,
                                   const OverlapPredicate& pred);

GreedyOutcome greedy_complete(const PartialSolution& q, const SetFamily& family,
                              const OverlapPredicate& pred);

// Children of a stuck node: one per conflicting element of I*, in ascending
// element order; children whose slot would exceed r are dropped.
std::vector<PartialSolution> branch(const PartialSolution& q,
                                    const GreedyOutcome& stuck,
                                    const SetFamily& family,
                                    const OverlapPredicate& pred);

// Depth-first search over the given root children. Shared by the plain and
// PCH entry points. predicate_evaluations is left at 0 for the caller.
SolveReport run_search(const std::vector<PartialSolution>& roots,
                       const SetFamily& family, const OverlapPredicate& pred,
                       const SolveOptions& opts,
                       std::uint64_t fallback_budget);

// The full algorithm: maximal-packing short-circuit, root initialization,
// then the search. Cluster heads, if present, are ignored here; use
// solve_pch for the PCH variant.
SolveReport solve(const SetSystemInstance& instance, const SolveOptions& opts = {});

}  // namespace opack
