#pragma once

#include <vector>

#include "opack/alpha.hpp"
#include "opack/instance.hpp"
#include "opack/solver.hpp"

namespace opack {

// Drops heads larger than r (they cannot fit in any member); appends one
// warning per dropped head when warnings is given.
std::vector<ElementSet> filter_cluster_heads(const std::vector<ElementSet>& heads,
                                             int r,
                                             std::vector<std::string>* warnings);

// One root child per k-combination of distinct heads, slots initialized to
// the heads, in lexicographic index order. Empty when |heads| < k.
std::vector<PartialSolution> initialize_children_pch(
    const std::vector<ElementSet>& heads, int k);

// Shared-heads variant: one child per size-k multiset of heads, since one
// head may serve several solution sets once sharing is allowed.
std::vector<PartialSolution> initialize_children_pch_shared(
    const std::vector<ElementSet>& heads, int k);

// Conflict when the overlap touches val(C); otherwise delegates to the
// inner predicate. Well-conditioned whenever the inner predicate is.
OverlapPredicate wrap_alpha_pch(const OverlapPredicate& inner,
                                const std::vector<ElementSet>& heads);

// The PCH variant: head combinations replace maximal-packing seeding, and
// the alpha-PCH wrapper replaces the predicate (unless opts.shared_heads).
SolveReport solve_pch(const SetSystemInstance& instance,
                      const SolveOptions& opts = {});

}  // namespace opack
