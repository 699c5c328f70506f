#include "opack/oracle.hpp"

#include <algorithm>
#include <functional>

namespace opack {

namespace {

struct OracleRun {
  const SetSystemInstance& instance;
  const OracleConfig& cfg;
  OverlapPredicate pred;
  std::vector<ElementSet> heads;
  ElementSet head_elems;
  std::vector<char> member_has_head;

  OracleRun(const SetSystemInstance& inst, const OracleConfig& config)
      : instance(inst), cfg(config), pred(inst.make_predicate()) {
    if (cfg.pch_mode) {
      if (!inst.cluster_heads) {
        throw InstanceError("oracle: pch_mode requires cluster_heads");
      }
      for (const ElementSet& head : *inst.cluster_heads) {
        if (static_cast<int>(head.size()) <= inst.family.max_set_size) {
          heads.push_back(head);
        }
      }
      head_elems = val_union(heads);
      member_has_head.resize(inst.family.members.size(), 0);
      for (std::size_t i = 0; i < inst.family.members.size(); ++i) {
        member_has_head[i] = std::any_of(
            heads.begin(), heads.end(), [&](const ElementSet& head) {
              return head.subset_of(inst.family.members[i]);
            });
      }
    }
  }

  bool pair_ok(int a, int b) const {
    const ElementSet& sa = instance.family.members[a];
    const ElementSet& sb = instance.family.members[b];
    if (pred.evaluate(sa, sb) == Verdict::Conflict) return false;
    if (cfg.pch_mode && !cfg.shared_heads &&
        !intersect(intersect(sa, sb), head_elems).empty()) {
      return false;
    }
    return true;
  }

  bool combination_ok(const std::vector<int>& combo) const {
    if (cfg.pch_mode) {
      for (int idx : combo) {
        if (!member_has_head[idx]) return false;
      }
    }
    for (std::size_t i = 0; i < combo.size(); ++i) {
      for (std::size_t j = i + 1; j < combo.size(); ++j) {
        if (!pair_ok(combo[i], combo[j])) return false;
      }
    }
    return true;
  }
};

void for_each_combination(int m, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k > m) return;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    if (visit(pick)) return;
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == m - k + pos) --pos;
    if (pos < 0) return;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
}

}  // namespace

std::optional<Solution> brute_force_solve(const SetSystemInstance& instance,
                                          const OracleConfig& cfg) {
  const int m = static_cast<int>(instance.family.members.size());
  if (static_cast<std::size_t>(m) > cfg.max_family_size) {
    throw BudgetError("oracle: family of " + std::to_string(m) +
                      " sets exceeds max_family_size " +
                      std::to_string(cfg.max_family_size));
  }
  OracleRun run(instance, cfg);
  std::optional<Solution> found;
  for_each_combination(m, instance.k, [&](const std::vector<int>& combo) {
    if (run.combination_ok(combo)) {
      found = Solution{combo};
      return true;
    }
    return false;
  });
  return found;
}

std::vector<Solution> brute_force_all_solutions(const SetSystemInstance& instance,
                                                const OracleConfig& cfg) {
  const int m = static_cast<int>(instance.family.members.size());
  if (static_cast<std::size_t>(m) > cfg.max_family_size) {
    throw BudgetError("oracle: family of " + std::to_string(m) +
                      " sets exceeds max_family_size " +
                      std::to_string(cfg.max_family_size));
  }
  OracleRun run(instance, cfg);
  std::vector<Solution> all;
  for_each_combination(m, instance.k, [&](const std::vector<int>& combo) {
    if (run.combination_ok(combo)) all.push_back(Solution{combo});
    return false;
  });
  return all;
}

}  // namespace opack
