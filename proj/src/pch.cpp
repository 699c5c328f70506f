#include "opack/pch.hpp"

#include <algorithm>

namespace opack {

std::vector<ElementSet> filter_cluster_heads(const std::vector<ElementSet>& heads,
                                             int r,
                                             std::vector<std::string>* warnings) {
  std::vector<ElementSet> kept;
  for (const ElementSet& head : heads) {
    if (static_cast<int>(head.size()) > r) {
      if (warnings) {
        warnings->push_back("cluster head " + to_string(head) +
                            " has more than r elements; discarded");
      }
      continue;
    }
    kept.push_back(head);
  }
  return kept;
}

std::vector<PartialSolution> initialize_children_pch(
    const std::vector<ElementSet>& heads, int k) {
  std::vector<PartialSolution> children;
  const int l = static_cast<int>(heads.size());
  if (l < k) return children;

  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    PartialSolution q;
    q.slots.reserve(k);
    for (int i = 0; i < k; ++i) q.slots.push_back(heads[pick[i]]);
    children.push_back(std::move(q));

    int pos = k - 1;
    while (pos >= 0 && pick[pos] == l - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return children;
}

std::vector<PartialSolution> initialize_children_pch_shared(
    const std::vector<ElementSet>& heads, int k) {
  std::vector<PartialSolution> children;
  const int l = static_cast<int>(heads.size());
  if (l == 0) return children;

  std::vector<int> pick(k, 0);  // nondecreasing index tuples
  for (;;) {
    PartialSolution q;
    q.slots.reserve(k);
    for (int i = 0; i < k; ++i) q.slots.push_back(heads[pick[i]]);
    children.push_back(std::move(q));

    int pos = k - 1;
    while (pos >= 0 && pick[pos] == l - 1) --pos;
    if (pos < 0) break;
    const int next = pick[pos] + 1;
    for (int i = pos; i < k; ++i) pick[i] = next;
  }
  return children;
}

OverlapPredicate wrap_alpha_pch(const OverlapPredicate& inner,
                                const std::vector<ElementSet>& heads) {
  const ElementSet head_elems = val_union(heads);
  return OverlapPredicate(
      "pch(" + inner.name() + ")",
      [inner, head_elems](const ElementSet& a, const ElementSet& b) {
        if (!intersect(intersect(a, b), head_elems).empty()) {
          return Verdict::Conflict;
        }
        return inner.evaluate(a, b);
      });
}

SolveReport solve_pch(const SetSystemInstance& instance, const SolveOptions& opts) {
  if (!instance.cluster_heads) {
    throw InstanceError("solve_pch: instance has no cluster_heads");
  }
  SolveReport report;
  report.warnings = instance.load_warnings;
  const std::vector<ElementSet> heads = filter_cluster_heads(
      *instance.cluster_heads, instance.family.max_set_size, &report.warnings);
  for (const ElementSet& head : heads) {
    if (sets_containing(instance.family, head).empty()) {
      report.warnings.push_back("cluster head " + to_string(head) +
                                " is contained in no family member");
    }
  }

  const OverlapPredicate inner = instance.make_predicate();
  const OverlapPredicate pred =
      opts.shared_heads ? inner : wrap_alpha_pch(inner, heads);

  const int r = instance.family.max_set_size;
  const std::vector<PartialSolution> roots =
      opts.shared_heads ? initialize_children_pch_shared(heads, instance.k)
                        : initialize_children_pch(heads, instance.k);
  const std::uint64_t root_bound =
      opts.shared_heads
          ? saturating_binomial(heads.size() + instance.k - 1, instance.k)
          : saturating_binomial(heads.size(), instance.k);
  const std::uint64_t budget = saturating_mul(
      root_bound,
      saturating_pow(static_cast<std::uint64_t>(r) * instance.k,
                     static_cast<std::uint64_t>(r - 1) * instance.k));
  SolveReport search = run_search(roots, instance.family, pred, opts, budget);
  search.predicate_evaluations = pred.evaluations();
  search.cluster_head_count = heads.size();
  search.warnings = std::move(report.warnings);
  return search;
}

}  // namespace opack
