#include "opack/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace opack {

using nlohmann::json;

std::string serialize_report(const SolveReport& report) {
  json j;
  if (report.solution) {
    j["solution"] = report.solution->chosen;
  } else {
    j["solution"] = nullptr;
  }
  j["nodes_expanded"] = report.nodes_expanded;
  j["max_depth"] = report.max_depth;
  j["root_children"] = report.root_children;
  j["predicate_evaluations"] = report.predicate_evaluations;
  j["seeded_by_maximal"] = report.seeded_by_maximal;
  j["budget_exhausted"] = report.budget_exhausted;
  if (report.cluster_head_count) j["cluster_heads"] = *report.cluster_head_count;
  return j.dump();
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    if (out > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out = out * factor / i;
  }
  return out;
}

std::uint64_t default_node_budget(int r, int k) {
  const std::uint64_t branch = static_cast<std::uint64_t>(r) * (k - 1);
  const std::uint64_t height = static_cast<std::uint64_t>(r - 1) * k;
  return saturating_mul(saturating_binomial(branch * k, k),
                        saturating_pow(branch, height));
}

std::uint64_t default_node_budget_pch(std::size_t l, int r, int k) {
  const std::uint64_t height = static_cast<std::uint64_t>(r - 1) * k;
  return saturating_mul(saturating_binomial(l, k),
                        saturating_pow(static_cast<std::uint64_t>(r) * k, height));
}

std::vector<int> maximal_alpha_packing(const SetFamily& family,
                                       const OverlapPredicate& pred) {
  std::vector<int> packing;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const bool clashes = std::any_of(
        packing.begin(), packing.end(), [&](int chosen) {
          return pred.evaluate(family.members[chosen], family.members[i]) ==
                 Verdict::Conflict;
        });
    if (!clashes) packing.push_back(static_cast<int>(i));
  }
  return packing;
}

std::vector<PartialSolution> initialize_children(const std::vector<int>& maximal,
                                                 const SetFamily& family, int k) {
  std::vector<ElementSet> chosen;
  chosen.reserve(maximal.size());
  for (int idx : maximal) chosen.push_back(family.members[idx]);
  const ElementSet elements = val_union(chosen);

  std::vector<PartialSolution> children;
  if (elements.empty()) return children;

  // Nondecreasing k-tuples over val(M) = size-k multisets, in lex order.
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    PartialSolution q;
    q.slots.reserve(k);
    for (int j = 0; j < k; ++j) {
      q.slots.push_back(ElementSet{elements.elems()[pick[j]]});
    }
    children.push_back(std::move(q));

    int pos = k - 1;
    while (pos >= 0 && pick[pos] + 1 == elements.size()) --pos;
    if (pos < 0) break;
    const std::size_t next = pick[pos] + 1;
    for (int j = pos; j < k; ++j) pick[j] = next;
  }
  return children;
}

std::vector<int> feasible_sponsors(int slot, const PartialSolution& q,
                                   const SetFamily& family,
                                   const OverlapPredicate& pred) {
  std::vector<int> sponsors;
  const ElementSet& grown = q.slots[slot];
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const ElementSet& member = family.members[i];
    if (!grown.subset_of(member)) continue;
    bool ok = true;
    for (std::size_t f = 0; f < q.slots.size(); ++f) {
      if (static_cast<int>(f) == slot) continue;
      if (q.slots[f] == member ||
          pred.evaluate(q.slots[f], member) == Verdict::Conflict) {
        ok = false;
        break;
      }
    }
    if (ok) sponsors.push_back(static_cast<int>(i));
  }
  return sponsors;
}

GreedyOutcome greedy_complete(const PartialSolution& q, const SetFamily& family,
                              const OverlapPredicate& pred) {
  GreedyOutcome out;
  const int k = static_cast<int>(q.slots.size());
  for (int f = 0; f < k; ++f) {
    for (int g = f + 1; g < k; ++g) {
      if (pred.evaluate(q.slots[f], q.slots[g]) == Verdict::Conflict) {
        out.kind = GreedyOutcome::Kind::Infeasible;
        return out;
      }
    }
  }
  for (int j = 0; j < k; ++j) {
    const std::vector<int> sponsors = feasible_sponsors(j, q, family, pred);
    if (sponsors.empty()) {
      out.kind = GreedyOutcome::Kind::Infeasible;
      out.greedy_members.clear();
      return out;
    }
    int selected = -1;
    for (int candidate : sponsors) {
      bool ok = true;
      for (int prior : out.greedy_members) {
        if (prior == candidate ||
            pred.evaluate(family.members[prior], family.members[candidate]) ==
                Verdict::Conflict) {
          ok = false;
          break;
        }
      }
      if (ok) {
        selected = candidate;
        break;
      }
    }
    if (selected < 0) {
      out.kind = GreedyOutcome::Kind::Stuck;
      out.stuck_slot = j;
      return out;
    }
    out.greedy_members.push_back(selected);
  }
  out.kind = GreedyOutcome::Kind::Complete;
  return out;
}

std::vector<PartialSolution> branch(const PartialSolution& q,
                                    const GreedyOutcome& stuck,
                                    const SetFamily& family,
                                    const OverlapPredicate& pred) {
  const int j = stuck.stuck_slot;
  const ElementSet& slot = q.slots[j];
  ElementSet conflicting;  // I*
  for (int sponsor : feasible_sponsors(j, q, family, pred)) {
    const ElementSet& s = family.members[sponsor];
    for (int prior : stuck.greedy_members) {
      const ElementSet& s_prime = family.members[prior];
      if (sponsor == prior ||
          pred.evaluate(s, s_prime) == Verdict::Conflict) {
        conflicting = unite(conflicting, intersect(difference(s, slot), s_prime));
      }
    }
  }
  std::vector<PartialSolution> children;
  for (Elem u : conflicting.elems()) {
    PartialSolution child = q;
    child.slots[j] = slot.with(u);
    if (static_cast<int>(child.slots[j].size()) > family.max_set_size) continue;
    children.push_back(std::move(child));
  }
  return children;
}

namespace {

struct Search {
  const SetFamily& family;
  const OverlapPredicate& pred;
  const SolveOptions& opts;
  std::uint64_t budget;

  Search(const SetFamily& f, const OverlapPredicate& p, const SolveOptions& o,
         std::uint64_t b)
      : family(f), pred(p), opts(o), budget(b) {}

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> deepest{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
  std::mutex result_mu;
  std::optional<Solution> result;

  bool claim_node() {
    std::uint64_t current = nodes.load(std::memory_order_relaxed);
    do {
      if (current >= budget) {
        exhausted.store(true, std::memory_order_relaxed);
        stop.store(true, std::memory_order_relaxed);
        return false;
      }
    } while (!nodes.compare_exchange_weak(current, current + 1,
                                          std::memory_order_relaxed));
    return true;
  }

  void note_depth(std::uint64_t depth) {
    std::uint64_t current = deepest.load(std::memory_order_relaxed);
    while (depth > current &&
           !deepest.compare_exchange_weak(current, depth,
                                          std::memory_order_relaxed)) {
    }
  }

  // Returns true when exploration should stop globally.
  bool explore(const PartialSolution& q, int depth) {
    if (stop.load(std::memory_order_relaxed)) return true;
    if (!claim_node()) return true;
    note_depth(static_cast<std::uint64_t>(depth));

    const GreedyOutcome outcome = greedy_complete(q, family, pred);
    switch (outcome.kind) {
      case GreedyOutcome::Kind::Complete: {
        if (opts.on_expand) opts.on_expand(q, depth, outcome, {});
        std::lock_guard lock(result_mu);
        if (!result) {
          Solution sol{outcome.greedy_members};
          std::sort(sol.chosen.begin(), sol.chosen.end());
          result = std::move(sol);
        }
        stop.store(true, std::memory_order_relaxed);
        return true;
      }
      case GreedyOutcome::Kind::Infeasible: {
        if (opts.on_expand) opts.on_expand(q, depth, outcome, {});
        return false;
      }
      case GreedyOutcome::Kind::Stuck: {
        const std::vector<PartialSolution> children =
            branch(q, outcome, family, pred);
        if (opts.on_expand) opts.on_expand(q, depth, outcome, children);
        for (const PartialSolution& child : children) {
          if (explore(child, depth + 1)) return true;
        }
        return false;
      }
    }
    return false;
  }
};

}  // namespace

SolveReport run_search(const std::vector<PartialSolution>& roots,
                       const SetFamily& family, const OverlapPredicate& pred,
                       const SolveOptions& opts,
                       std::uint64_t fallback_budget) {
  Search search{family, pred, opts,
                opts.node_budget.value_or(fallback_budget)};

  if (opts.parallel && roots.size() > 1 && !opts.on_expand) {
    const unsigned workers = std::min<unsigned>(
        std::max(1u, std::thread::hardware_concurrency()),
        static_cast<unsigned>(roots.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= roots.size()) return;
          if (search.explore(roots[i], 0)) return;
        }
      });
    }
    for (auto& t : pool) t.join();
  } else {
    for (const PartialSolution& root : roots) {
      if (search.explore(root, 0)) break;
    }
  }

  SolveReport report;
  report.solution = search.result;
  report.nodes_expanded = search.nodes.load();
  report.max_depth = report.nodes_expanded == 0 ? 0 : search.deepest.load();
  report.root_children = roots.size();
  report.budget_exhausted = !report.solution &&
                            search.exhausted.load(std::memory_order_relaxed);
  return report;
}

SolveReport solve(const SetSystemInstance& instance, const SolveOptions& opts) {
  const OverlapPredicate pred = instance.make_predicate();
  const std::vector<int> maximal = maximal_alpha_packing(instance.family, pred);

  if (static_cast<int>(maximal.size()) >= instance.k) {
    SolveReport report;
    report.solution =
        Solution{std::vector<int>(maximal.begin(), maximal.begin() + instance.k)};
    report.seeded_by_maximal = true;
    report.predicate_evaluations = pred.evaluations();
    report.warnings = instance.load_warnings;
    return report;
  }

  const std::vector<PartialSolution> roots =
      initialize_children(maximal, instance.family, instance.k);
  SolveReport report =
      run_search(roots, instance.family, pred, opts,
                 default_node_budget(instance.family.max_set_size, instance.k));
  report.predicate_evaluations = pred.evaluations();
  report.warnings = instance.load_warnings;
  return report;
}

}  // namespace opack
