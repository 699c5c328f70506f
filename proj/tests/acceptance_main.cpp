// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed criteria. Optional arguments select criteria by number.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "opack/gen.hpp"
#include "opack/graph.hpp"
#include "opack/instance.hpp"
#include "opack/oracle.hpp"
#include "opack/pch.hpp"
#include "opack/solver.hpp"

using namespace opack;

namespace {

struct Line {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (detail.empty()) detail = why;
  }
};

const std::vector<AlphaSpec::Kind> kAllKinds = {
    AlphaSpec::Kind::size,          AlphaSpec::Kind::weight,
    AlphaSpec::Kind::measure,       AlphaSpec::Kind::metric,
    AlphaSpec::Kind::pattern,       AlphaSpec::Kind::property,
    AlphaSpec::Kind::dense_overlap, AlphaSpec::Kind::density,
    AlphaSpec::Kind::conjunction};

// ---------------------------------------------------------------- criterion 1
Line criterion_well_conditioned() {
  Line line;
  const int n_max = 6;
  const int r = 4;
  const int draws = 20;
  std::mt19937_64 rng(1001);
  std::uint64_t pairs = 0;
  for (const auto kind : kAllKinds) {
    for (int d = 0; d < draws; ++d) {
      const AlphaDraw draw = random_alpha_draw(kind, n_max, rng);
      const ConditionReport report =
          validate_well_conditioned(draw.build(), n_max, r);
      pairs += report.checked_pairs;
      if (!report.ok()) {
        line.fail(to_string(kind) + " draw " + std::to_string(d) + ": " +
                  std::to_string(report.hereditary_violations.size()) +
                  " hereditary / " +
                  std::to_string(report.condition_ii_violations.size()) +
                  " condition-(ii) violations");
      }
    }
  }
  if (line.pass) {
    std::ostringstream os;
    os << kAllKinds.size() << " kinds x " << draws << " draws, n_max=" << n_max
       << ", r=" << r << ", " << pairs << " pairs checked, 0 violations";
    line.detail = os.str();
  }
  return line;
}

// ------------------------------------------------------- criteria 2, 3 and 4
struct SweepResult {
  Line agreement;   // criterion 2
  Line bounds;      // criterion 3
  Line shortcut;    // criterion 4
  int instances = 0;
  int solvable = 0;
  int shortcut_cases = 0;
  int searched = 0;          // runs that entered the search tree
  int solved_by_search = 0;  // of those, runs that found a solution
};

SweepResult run_sweep() {
  SweepResult result;
  const int per_kind = 500;
  std::mt19937_64 rng(2002);
  for (const auto kind : kAllKinds) {
    for (int trial = 0; trial < per_kind; ++trial) {
      GenParams params;
      // The tail of each batch draws small, crowded universes where the
      // maximal packing rarely reaches k, forcing the tree search to run.
      const bool crowded = trial >= per_kind * 7 / 10;
      params.n = crowded ? rnd_int(rng, 3, 6) : rnd_int(rng, 3, 12);
      params.r = crowded ? rnd_int(rng, 2, 4) : rnd_int(rng, 1, 4);
      params.k = rnd_int(rng, 1, 3);
      params.m = static_cast<int>(std::min<std::uint64_t>(
          rnd_int(rng, crowded ? 8 : 1, 20),
          max_distinct_sets(params.n, params.r)));
      params.alpha_kind = kind;
      SetSystemInstance inst = random_set_instance(rng, params);
      if (crowded) {
        // Adversarial canonical order: most conflict-prone members first, so
        // the greedy maximal packing stays small and the tree search runs.
        // Solution existence is order-independent.
        const OverlapPredicate pred = inst.make_predicate();
        const int m = static_cast<int>(inst.family.members.size());
        std::vector<int> conflicts(m, 0);
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < m; ++j) {
            conflicts[i] += i != j && pred.evaluate(inst.family.members[i],
                                                    inst.family.members[j]) ==
                                          Verdict::Conflict;
          }
        }
        std::vector<int> order(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
          return conflicts[a] > conflicts[b];
        });
        std::vector<ElementSet> reordered;
        reordered.reserve(m);
        for (int idx : order) reordered.push_back(inst.family.members[idx]);
        inst.family.members = std::move(reordered);
      }
      ++result.instances;

      const std::string tag =
          to_string(kind) + " trial " + std::to_string(trial);
      const SolveReport report = solve(inst);
      if (report.budget_exhausted) {
        result.agreement.fail(tag + ": budget exhausted");
        continue;
      }
      const bool oracle_found = brute_force_solve(inst).has_value();
      result.solvable += oracle_found;
      if (!report.seeded_by_maximal) {
        ++result.searched;
        result.solved_by_search += report.solution.has_value();
      }
      if (report.solution.has_value() != oracle_found) {
        result.agreement.fail(tag + ": solver " +
                              (report.solution ? "found" : "missed") +
                              ", oracle " + (oracle_found ? "found" : "missed"));
      }
      if (report.solution && !validate_solution(inst, *report.solution).pass) {
        result.agreement.fail(tag + ": solver returned an invalid solution");
      }

      // criterion 3: zero-tolerance tree-size and depth bounds
      if (report.nodes_expanded > default_node_budget(params.r, params.k)) {
        result.bounds.fail(tag + ": nodes_expanded above the tree-size bound");
      }
      if (report.max_depth >
          static_cast<std::uint64_t>(params.r - 1) * params.k) {
        result.bounds.fail(tag + ": max_depth above (r-1)k");
      }

      // criterion 4: maximal-packing short-circuit behaviour
      const OverlapPredicate pred = inst.make_predicate();
      if (static_cast<int>(maximal_alpha_packing(inst.family, pred).size()) >=
          params.k) {
        ++result.shortcut_cases;
        if (report.nodes_expanded != 0 || !report.seeded_by_maximal ||
            !report.solution ||
            !validate_solution(inst, *report.solution).pass) {
          result.shortcut.fail(tag + ": maximal packing did not short-circuit");
        }
      }
    }
  }
  {
    std::ostringstream os;
    os << kAllKinds.size() << " kinds x " << per_kind << " instances, "
       << result.solvable << "/" << result.instances << " solvable, "
       << result.searched << " tree searches (" << result.solved_by_search
       << " solved by search), 100% existence agreement";
    if (result.agreement.pass) result.agreement.detail = os.str();
  }
  if (result.bounds.pass) {
    result.bounds.detail = "nodes_expanded and max_depth within bounds on all " +
                           std::to_string(result.instances) + " runs";
  }
  if (result.shortcut.pass) {
    result.shortcut.detail =
        std::to_string(result.shortcut_cases) +
        " short-circuit cases, all with nodes_expanded=0 and a valid solution";
  }
  return result;
}

// ---------------------------------------------------------------- criterion 5
// Independent graph-side brute force: bitmask subset enumeration with direct
// property checks, never touching the reduction.
std::vector<ElementSet> graph_side_candidates(const Graph& g, int pi_choice,
                                              int r) {
  std::vector<ElementSet> out;
  for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
    std::vector<Elem> verts;
    for (int v = 0; v < g.n; ++v) {
      if (mask & (1u << v)) verts.push_back(v);
    }
    if (static_cast<int>(verts.size()) > r) continue;
    int edges = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        edges += g.adjacent(verts[i], verts[j]);
      }
    }
    const int order = static_cast<int>(verts.size());
    bool keep = false;
    switch (pi_choice) {
      case 0:  // clique
        keep = edges == order * (order - 1) / 2;
        break;
      case 1:  // family {K3}
        keep = order == 3 && edges == 3;
        break;
      case 2:  // min_edges t=2
        keep = edges >= 2;
        break;
    }
    if (keep) out.emplace_back(std::move(verts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool graph_side_has_packing(const std::vector<ElementSet>& sets,
                            const OverlapPredicate& alpha, int k) {
  std::vector<int> pick(k);
  const int m = static_cast<int>(sets.size());
  if (m < k) return false;
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    bool ok = true;
    for (int i = 0; ok && i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (alpha.evaluate(sets[pick[i]], sets[pick[j]]) == Verdict::Conflict) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == m - k + pos) --pos;
    if (pos < 0) return false;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
}

Line criterion_reduction() {
  Line line;
  const int graphs = 200;
  std::mt19937_64 rng(5005);
  int runs = 0;
  for (int trial = 0; trial < graphs; ++trial) {
    const int n = rnd_int(rng, 3, 9);
    const int k = rnd_int(rng, 1, 2);
    const Graph g = random_graph(rng, n, 0.2 + 0.6 * rnd_unit(rng));
    const int dense_c = rnd_int(rng, 0, 1);
    const double dist_bound = rnd_int(rng, 1, 3);

    for (int pi_choice = 0; pi_choice < 3; ++pi_choice) {
      for (int alpha_choice = 0; alpha_choice < 3; ++alpha_choice) {
        GraphInstance gi;
        gi.graph = g;
        gi.r = 3;
        gi.k = k;
        switch (pi_choice) {
          case 0:
            gi.pi.kind = PiSpec::Kind::clique;
            break;
          case 1:
            gi.pi.kind = PiSpec::Kind::family;
            gi.pi.patterns.push_back(
                Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
            break;
          case 2:
            gi.pi.kind = PiSpec::Kind::min_edges;
            gi.pi.min_edges = 2;
            break;
        }
        switch (alpha_choice) {
          case 0:
            gi.alpha.kind = AlphaSpec::Kind::size;
            gi.alpha.t = 1;
            break;
          case 1:
            gi.alpha.kind = AlphaSpec::Kind::dense_overlap;
            gi.alpha.c = dense_c;
            break;
          case 2:
            gi.alpha.kind = AlphaSpec::Kind::metric;
            gi.alpha.graph_distance = true;
            gi.alpha.d_t = dist_bound;
            break;
        }

        const SolveReport report = solve(reduce_to_set_instance(gi));

        Universe annotations;
        annotations.size = n;
        if (alpha_choice == 2) annotations.distances = graph_distance_matrix(g);
        const OverlapPredicate alpha =
            build_predicate(gi.alpha, annotations, &g);
        const bool direct = graph_side_has_packing(
            graph_side_candidates(g, pi_choice, 3), alpha, k);
        ++runs;
        if (report.solution.has_value() != direct) {
          line.fail("graph " + std::to_string(trial) + " pi=" +
                    std::to_string(pi_choice) + " alpha=" +
                    std::to_string(alpha_choice) + ": solver " +
                    (report.solution ? "found" : "missed") +
                    ", graph-side brute force " + (direct ? "found" : "missed"));
        }
      }
    }
  }
  if (line.pass) {
    line.detail = std::to_string(graphs) + " graphs x 9 pi/alpha combinations (" +
                  std::to_string(runs) + " runs), 100% agreement";
  }
  return line;
}

// ---------------------------------------------------------------- criterion 6
Line criterion_pch() {
  Line line;
  const int instances = 200;
  std::mt19937_64 rng(6006);
  int solvable = 0;
  for (int trial = 0; trial < instances; ++trial) {
    GenParams params;
    params.n = rnd_int(rng, 3, 12);
    params.r = rnd_int(rng, 1, 4);
    params.k = rnd_int(rng, 1, 3);
    params.m = static_cast<int>(std::min<std::uint64_t>(
        rnd_int(rng, 1, 20), max_distinct_sets(params.n, params.r)));
    params.cluster_heads = rnd_int(rng, 1, 6);
    params.alpha_kind =
        trial % 2 == 0 ? AlphaSpec::Kind::size : AlphaSpec::Kind::weight;
    const SetSystemInstance inst = random_set_instance(rng, params);

    const std::string tag = "pch trial " + std::to_string(trial);
    const SolveReport report = solve_pch(inst);
    OracleConfig cfg;
    cfg.pch_mode = true;
    const bool oracle_found = brute_force_solve(inst, cfg).has_value();
    solvable += oracle_found;
    if (report.solution.has_value() != oracle_found) {
      line.fail(tag + ": existence disagreement");
      continue;
    }
    if (report.solution) {
      const ValidationReport check = validate_solution(inst, *report.solution);
      if (!check.pass || !check.sets_missing_head.empty() ||
          !check.shared_head_pairs.empty()) {
        line.fail(tag + ": solution violates a PCH condition");
      }
      // Re-check the two conditions directly against the definition.
      const auto& heads = *inst.cluster_heads;
      const ElementSet head_elems = val_union(heads);
      for (int idx : report.solution->chosen) {
        const ElementSet& member = inst.family.members[idx];
        const bool has_head =
            std::any_of(heads.begin(), heads.end(), [&](const ElementSet& c) {
              return c.subset_of(member);
            });
        if (!has_head) line.fail(tag + ": chosen set contains no head");
      }
      for (std::size_t i = 0; i < report.solution->chosen.size(); ++i) {
        for (std::size_t j = i + 1; j < report.solution->chosen.size(); ++j) {
          const ElementSet& a = inst.family.members[report.solution->chosen[i]];
          const ElementSet& b = inst.family.members[report.solution->chosen[j]];
          if (!intersect(intersect(a, b), head_elems).empty()) {
            line.fail(tag + ": chosen sets share a head element");
          }
        }
      }
    }
  }
  if (line.pass) {
    line.detail = std::to_string(instances) + " instances, " +
                  std::to_string(solvable) +
                  " solvable, agreement and both PCH conditions hold";
  }
  return line;
}

// ---------------------------------------------------------------- criterion 7
Line criterion_unit_weight() {
  Line line;
  const int n = 7;
  Universe unit;
  unit.size = n;
  unit.weights = std::vector<double>(n, 1.0);
  std::vector<ElementSet> subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Elem> elems;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) elems.push_back(v);
    }
    subsets.emplace_back(std::move(elems));
  }
  std::uint64_t compared = 0;
  for (int t = 0; t <= n; ++t) {
    AlphaSpec size_spec;
    size_spec.kind = AlphaSpec::Kind::size;
    size_spec.t = t;
    AlphaSpec weight_spec;
    weight_spec.kind = AlphaSpec::Kind::weight;
    weight_spec.w_t = t;
    const OverlapPredicate by_size = build_predicate(size_spec, unit);
    const OverlapPredicate by_weight = build_predicate(weight_spec, unit);
    for (const ElementSet& a : subsets) {
      for (const ElementSet& b : subsets) {
        ++compared;
        if (by_size.evaluate(a, b) != by_weight.evaluate(a, b)) {
          line.fail("verdicts differ at t=" + std::to_string(t) + " on " +
                    to_string(a) + " vs " + to_string(b));
        }
      }
    }
  }
  if (line.pass) {
    line.detail = "all " + std::to_string(compared) +
                  " subset-pair verdicts identical for t=0.." + std::to_string(n);
  }
  return line;
}

// ---------------------------------------------------------------- criterion 8
Line criterion_determinism() {
  Line line;
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenParams params;
    params.n = 10;
    params.m = 14;
    params.r = 3;
    params.k = 2 + static_cast<int>(seed % 2);
    params.alpha_kind =
        seed % 2 == 0 ? AlphaSpec::Kind::size : AlphaSpec::Kind::weight;
    if (seed % 3 == 0) params.cluster_heads = 3;
    const std::string text = gen_instance_json(params, seed);
    if (text != gen_instance_json(params, seed)) {
      line.fail("seed " + std::to_string(seed) + ": instance bytes differ");
      continue;
    }
    const SetSystemInstance inst = parse_instance(text);
    const SetSystemInstance again = parse_instance(text);
    const SolveReport a =
        inst.cluster_heads ? solve_pch(inst) : solve(inst);
    const SolveReport b =
        again.cluster_heads ? solve_pch(again) : solve(again);
    ++compared;
    if (serialize_report(a) != serialize_report(b)) {
      line.fail("seed " + std::to_string(seed) + ": reports differ");
    }

    GenParams graph_params;
    graph_params.graph_form = true;
    graph_params.n = 8;
    graph_params.r = 3;
    graph_params.k = 2;
    graph_params.alpha_kind = AlphaSpec::Kind::metric;
    graph_params.graph_distance = true;
    graph_params.pi_kind = PiSpec::Kind::min_edges;
    const std::string graph_text = gen_instance_json(graph_params, seed);
    const SolveReport ga =
        solve(reduce_to_set_instance(parse_graph_instance(graph_text)));
    const SolveReport gb =
        solve(reduce_to_set_instance(parse_graph_instance(graph_text)));
    ++compared;
    if (serialize_report(ga) != serialize_report(gb)) {
      line.fail("seed " + std::to_string(seed) + ": graph-side reports differ");
    }
  }
  if (line.pass) {
    line.detail = std::to_string(compared) +
                  " instance/seed pairs, byte-identical reports on repeat runs";
  }
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  auto selected = [&wanted](int id) {
    return wanted.empty() || wanted.count(id) > 0;
  };

  struct Row {
    int id;
    std::string label;
    Line line;
  };
  std::vector<Row> rows;

  if (selected(1)) {
    rows.push_back({1, "well-conditioned built-ins", criterion_well_conditioned()});
  }
  if (selected(2) || selected(3) || selected(4)) {
    const SweepResult sweep = run_sweep();
    if (selected(2)) rows.push_back({2, "oracle equivalence", sweep.agreement});
    if (selected(3)) rows.push_back({3, "tree-size and depth bounds", sweep.bounds});
    if (selected(4)) rows.push_back({4, "maximal-packing short-circuit", sweep.shortcut});
  }
  if (selected(5)) rows.push_back({5, "graph reduction equivalence", criterion_reduction()});
  if (selected(6)) rows.push_back({6, "predetermined cluster heads", criterion_pch()});
  if (selected(7)) rows.push_back({7, "unit-weight / size equivalence", criterion_unit_weight()});
  if (selected(8)) rows.push_back({8, "deterministic reports", criterion_determinism()});

  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.id < b.id; });
  int failures = 0;
  for (const Row& row : rows) {
    failures += !row.line.pass;
    std::cout << "criterion " << row.id << " (" << row.label
              << "): " << (row.line.pass ? "PASS" : "FAIL") << " — "
              << row.line.detail << "\n";
  }
  return failures;
}
