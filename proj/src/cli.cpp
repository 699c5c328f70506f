#include "opack/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "opack/gen.hpp"
#include "opack/instance.hpp"
#include "opack/oracle.hpp"
#include "opack/pch.hpp"
#include "opack/solver.hpp"

namespace opack {

namespace {

using nlohmann::json;

struct InputOpts {
  std::string input;   // empty or "-" = stdin
  std::string output;  // empty or "-" = stdout
  int min_pi_size = 1;
  // Edge-list inputs carry no specs, so they come from flags.
  int r = 0;
  int k = 1;
  std::string pi_json = R"({"kind":"clique"})";
  std::string alpha_json;
};

void add_input_opts(CLI::App* cmd, InputOpts& io, bool with_k = true) {
  cmd->add_option("--input,-i", io.input, "Instance path ('-' or absent: stdin)");
  cmd->add_option("--output,-o", io.output, "Report path ('-' or absent: stdout)");
  cmd->add_option("--min-pi-size", io.min_pi_size,
                  "Minimum pi-subgraph order (graph instances)");
  cmd->add_option("--r", io.r, "r for edge-list inputs");
  if (with_k) cmd->add_option("--k", io.k, "k for edge-list inputs");
  cmd->add_option("--pi", io.pi_json, "pi spec JSON for edge-list inputs");
  cmd->add_option("--alpha", io.alpha_json, "alpha spec JSON for edge-list inputs");
}

std::string read_input(const InputOpts& io, std::istream& in) {
  if (io.input.empty() || io.input == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(io.input);
  if (!file) throw InstanceError("cannot open input file '" + io.input + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const InputOpts& io, std::ostream& out, const std::string& text) {
  if (io.output.empty() || io.output == "-") {
    out << text << "\n";
    return;
  }
  std::ofstream file(io.output);
  if (!file) throw InstanceError("cannot open output file '" + io.output + "'");
  file << text << "\n";
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

// Loads either instance format; graph instances (JSON or edge list) are
// reduced to their set form.
SetSystemInstance load_instance(const InputOpts& io, std::istream& in) {
  const std::string text = read_input(io, in);
  if (looks_like_json(text)) {
    const json probe = json::parse(text, nullptr, false);
    if (probe.is_object() && probe.contains("vertices")) {
      return reduce_to_set_instance(parse_graph_instance(text), io.min_pi_size);
    }
    return parse_instance(text);
  }
  GraphInstance gi;
  gi.graph = parse_edge_list(text);
  if (io.r < 1) throw InstanceError("edge-list input requires --r");
  if (io.alpha_json.empty()) throw InstanceError("edge-list input requires --alpha");
  gi.r = io.r;
  gi.k = io.k;
  gi.pi = parse_pi_spec(io.pi_json, gi.r);
  gi.alpha = parse_alpha_spec(io.alpha_json);
  return reduce_to_set_instance(gi, io.min_pi_size);
}

std::optional<std::uint64_t> budget_from_env() {
  const char* raw = std::getenv("OVERLAP_PACK_NODE_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    throw InstanceError("OVERLAP_PACK_NODE_BUDGET is not a valid count");
  }
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const std::string& w : warnings) err << "warning: " << w << "\n";
}

std::string pretty_report(const SolveReport& report) {
  std::ostringstream os;
  os << "solution:              ";
  if (report.solution) {
    for (std::size_t i = 0; i < report.solution->chosen.size(); ++i) {
      if (i > 0) os << ' ';
      os << report.solution->chosen[i];
    }
  } else {
    os << (report.budget_exhausted ? "(budget exhausted)" : "none");
  }
  os << "\nnodes expanded:        " << report.nodes_expanded;
  os << "\nmax depth:             " << report.max_depth;
  os << "\nroot children:         " << report.root_children;
  os << "\npredicate evaluations: " << report.predicate_evaluations;
  os << "\nseeded by maximal:     " << (report.seeded_by_maximal ? "yes" : "no");
  if (report.cluster_head_count) {
    os << "\ncluster heads:         " << *report.cluster_head_count;
  }
  return os.str();
}

SolveReport dispatch_solve(const SetSystemInstance& inst, const SolveOptions& opts) {
  return inst.cluster_heads ? solve_pch(inst, opts) : solve(inst, opts);
}

int run_solve(const InputOpts& io, const SolveOptions& base, bool pretty,
              std::istream& in, std::ostream& out, std::ostream& err) {
  const SetSystemInstance inst = load_instance(io, in);
  SolveOptions opts = base;
  if (!opts.node_budget) opts.node_budget = budget_from_env();
  const SolveReport report = dispatch_solve(inst, opts);
  print_warnings(report.warnings, err);
  write_output(io, out, pretty ? pretty_report(report) : serialize_report(report));
  if (report.budget_exhausted) return 3;
  return report.solution ? 0 : 1;
}

int run_oracle(const InputOpts& io, OracleConfig cfg, bool pretty,
               std::istream& in, std::ostream& out, std::ostream& err) {
  const SetSystemInstance inst = load_instance(io, in);
  print_warnings(inst.load_warnings, err);
  cfg.pch_mode = inst.cluster_heads.has_value();
  const std::optional<Solution> found = brute_force_solve(inst, cfg);
  if (pretty) {
    std::ostringstream os;
    os << "solution: ";
    if (found) {
      for (std::size_t i = 0; i < found->chosen.size(); ++i) {
        if (i > 0) os << ' ';
        os << found->chosen[i];
      }
    } else {
      os << "none";
    }
    write_output(io, out, os.str());
  } else {
    json j;
    if (found) {
      j["solution"] = found->chosen;
    } else {
      j["solution"] = nullptr;
    }
    write_output(io, out, j.dump());
  }
  return found ? 0 : 1;
}

int run_check(const InputOpts& io, const SolveOptions& base, OracleConfig cfg,
              bool pretty, std::istream& in, std::ostream& out, std::ostream& err) {
  const SetSystemInstance inst = load_instance(io, in);
  SolveOptions opts = base;
  if (!opts.node_budget) opts.node_budget = budget_from_env();
  const SolveReport report = dispatch_solve(inst, opts);
  print_warnings(report.warnings, err);
  if (report.budget_exhausted) {
    err << "solver exhausted its node budget; nothing to compare\n";
    return 3;
  }
  cfg.pch_mode = inst.cluster_heads.has_value();
  cfg.shared_heads = opts.shared_heads;
  const std::optional<Solution> oracle_found = brute_force_solve(inst, cfg);
  const bool agree = report.solution.has_value() == oracle_found.has_value();
  bool solver_valid = true;
  if (report.solution) {
    solver_valid =
        validate_solution(inst, *report.solution, opts.shared_heads).pass;
  }
  if (pretty) {
    std::ostringstream os;
    os << "solver:  " << (report.solution ? "solution" : "no solution")
       << "\noracle:  " << (oracle_found ? "solution" : "no solution")
       << "\nvalid:   " << (solver_valid ? "yes" : "no")
       << "\nagree:   " << (agree ? "yes" : "no");
    write_output(io, out, os.str());
  } else {
    json j;
    j["agree"] = agree;
    j["solver_found"] = report.solution.has_value();
    j["oracle_found"] = oracle_found.has_value();
    j["solver_solution_valid"] = solver_valid;
    write_output(io, out, j.dump());
  }
  return (agree && solver_valid) ? 0 : 1;
}

struct ValidateAlphaOpts {
  std::string kind;
  int n_max = 6;
  int r = 4;
  int draws = 20;
  std::uint64_t seed = 0;
  AlphaOverrides overrides;
};

int run_validate_alpha(const ValidateAlphaOpts& va, const InputOpts& io,
                       std::ostream& out) {
  const auto kind = alpha_kind_from_string(va.kind);
  if (!kind) throw InstanceError("unknown alpha kind '" + va.kind + "'");
  if (kind->second) {
    throw InstanceError("validate-alpha: use 'metric' (distance is its graph flavour)");
  }
  std::mt19937_64 rng(va.seed);
  std::uint64_t hereditary = 0, condition_ii = 0, pairs = 0;
  for (int d = 0; d < va.draws; ++d) {
    const AlphaDraw draw =
        random_alpha_draw(kind->first, va.n_max, rng, va.overrides);
    const ConditionReport report =
        validate_well_conditioned(draw.build(), va.n_max, va.r);
    hereditary += report.hereditary_violations.size();
    condition_ii += report.condition_ii_violations.size();
    pairs += report.checked_pairs;
  }
  json j;
  j["kind"] = va.kind;
  j["draws"] = va.draws;
  j["n_max"] = va.n_max;
  j["r"] = va.r;
  j["checked_pairs"] = pairs;
  j["hereditary_violations"] = hereditary;
  j["condition_ii_violations"] = condition_ii;
  write_output(io, out, j.dump());
  return (hereditary == 0 && condition_ii == 0) ? 0 : 1;
}

int run_enumerate_pi(const InputOpts& io, std::istream& in, std::ostream& out,
                     std::ostream& err) {
  const std::string text = read_input(io, in);
  GraphInstance gi;
  if (looks_like_json(text)) {
    gi = parse_graph_instance(text);
  } else {
    gi.graph = parse_edge_list(text);
    if (io.r < 1) throw InstanceError("edge-list input requires --r");
    gi.r = io.r;
    gi.pi = parse_pi_spec(io.pi_json, gi.r);
  }
  print_warnings(gi.load_warnings, err);
  const SetFamily family =
      enumerate_pi_subgraphs(gi.graph, gi.pi, gi.r, io.min_pi_size);
  json subgraphs = json::array();
  for (const ElementSet& s : family.members) subgraphs.push_back(s.elems());
  json j;
  j["count"] = family.members.size();
  j["pi_subgraphs"] = std::move(subgraphs);
  write_output(io, out, j.dump());
  return 0;
}

struct GenOpts {
  std::string type = "set";
  std::uint64_t seed = 0;
  std::string alpha_kind = "size";
  std::string pi_kind = "clique";
  GenParams params;
};

int run_gen(const GenOpts& g, const InputOpts& io, std::ostream& out) {
  GenParams params = g.params;
  params.graph_form = (g.type == "graph");
  if (!params.graph_form && g.type != "set") {
    throw InstanceError("gen: --type must be 'set' or 'graph'");
  }
  const auto kind = alpha_kind_from_string(g.alpha_kind);
  if (!kind) throw InstanceError("unknown alpha kind '" + g.alpha_kind + "'");
  params.alpha_kind = kind->first;
  params.graph_distance = kind->second;
  const auto pi = pi_kind_from_string(g.pi_kind);
  if (!pi) throw InstanceError("unknown pi kind '" + g.pi_kind + "'");
  params.pi_kind = *pi;
  write_output(io, out, gen_instance_json(params, g.seed));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"overlap-pack: exact set and subgraph packing under pairwise overlap constraints"};
  app.require_subcommand(1);

  InputOpts io;
  SolveOptions solve_opts;
  OracleConfig oracle_cfg;
  bool pretty = false;
  std::uint64_t budget_flag = 0;

  auto add_budget = [&](CLI::App* cmd) {
    return cmd->add_option("--node-budget", budget_flag,
                           "Node budget (default: the theoretical tree bound; "
                           "env OVERLAP_PACK_NODE_BUDGET)");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "Run the search-tree solver");
  add_input_opts(solve_cmd, io);
  CLI::Option* solve_budget = add_budget(solve_cmd);
  solve_cmd->add_flag("--shared-heads", solve_opts.shared_heads,
                      "PCH: allow solutions to share head elements");
  solve_cmd->add_flag("--parallel", solve_opts.parallel,
                      "Explore root subtrees concurrently");
  solve_cmd->add_flag("--pretty", pretty, "Human-readable output");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Run the brute-force reference solver");
  add_input_opts(oracle_cmd, io);
  oracle_cmd->add_option("--max-family", oracle_cfg.max_family_size,
                         "Refuse families larger than this");
  oracle_cmd->add_flag("--shared-heads", oracle_cfg.shared_heads,
                       "PCH: allow solutions to share head elements");
  oracle_cmd->add_flag("--pretty", pretty, "Human-readable output");

  CLI::App* check_cmd =
      app.add_subcommand("check", "Solve and cross-check against the oracle");
  add_input_opts(check_cmd, io);
  CLI::Option* check_budget = add_budget(check_cmd);
  check_cmd->add_option("--max-family", oracle_cfg.max_family_size,
                        "Refuse families larger than this");
  check_cmd->add_flag("--shared-heads", solve_opts.shared_heads,
                      "PCH: allow solutions to share head elements");
  check_cmd->add_flag("--parallel", solve_opts.parallel,
                      "Explore root subtrees concurrently");
  check_cmd->add_flag("--pretty", pretty, "Human-readable output");

  ValidateAlphaOpts va;
  int va_t = 0;
  double va_wt = 0, va_dt = 0;
  int va_c = 0;
  CLI::App* validate_cmd = app.add_subcommand(
      "validate-alpha", "Exhaustively check a built-in predicate's conditions");
  validate_cmd->add_option("--kind", va.kind, "Alpha kind")->required();
  validate_cmd->add_option("--n-max", va.n_max, "Universe size for enumeration");
  validate_cmd->add_option("--r", va.r, "Maximum set size");
  validate_cmd->add_option("--draws", va.draws, "Randomized annotation draws");
  validate_cmd->add_option("--seed", va.seed, "Draw seed");
  CLI::Option* va_t_opt = validate_cmd->add_option("--t", va_t, "Fix t");
  CLI::Option* va_wt_opt = validate_cmd->add_option("--w-t", va_wt, "Fix w_t");
  CLI::Option* va_dt_opt = validate_cmd->add_option("--d-t", va_dt, "Fix d_t");
  CLI::Option* va_c_opt = validate_cmd->add_option("--c", va_c, "Fix c");
  validate_cmd->add_option("--output,-o", io.output, "Report path");

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate-pi", "List all induced pi-subgraphs");
  add_input_opts(enumerate_cmd, io, /*with_k=*/false);

  GenOpts gen_opts;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--seed", gen_opts.seed, "RNG seed")->required();
  gen_cmd->add_option("--type", gen_opts.type, "'set' or 'graph'");
  gen_cmd->add_option("--n", gen_opts.params.n, "Universe / vertex count");
  gen_cmd->add_option("--m", gen_opts.params.m, "Family size (set form)");
  gen_cmd->add_option("--r", gen_opts.params.r, "Maximum set size");
  gen_cmd->add_option("--k", gen_opts.params.k, "Solution size");
  gen_cmd->add_option("--alpha-kind", gen_opts.alpha_kind, "Alpha kind");
  gen_cmd->add_option("--pi-kind", gen_opts.pi_kind, "Pi kind (graph form)");
  gen_cmd->add_option("--heads", gen_opts.params.cluster_heads,
                      "Cluster head count (PCH)");
  gen_cmd->add_option("--edge-prob", gen_opts.params.edge_prob,
                      "Edge probability (graph form)");
  gen_cmd->add_option("--output,-o", io.output, "Instance path");

  std::vector<const char*> argv;
  argv.push_back("overlap-pack");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) {
      if (*solve_budget) solve_opts.node_budget = budget_flag;
      return run_solve(io, solve_opts, pretty, in, out, err);
    }
    if (oracle_cmd->parsed()) {
      return run_oracle(io, oracle_cfg, pretty, in, out, err);
    }
    if (check_cmd->parsed()) {
      if (*check_budget) solve_opts.node_budget = budget_flag;
      return run_check(io, solve_opts, oracle_cfg, pretty, in, out, err);
    }
    if (validate_cmd->parsed()) {
      if (*va_t_opt) va.overrides.t = va_t;
      if (*va_wt_opt) va.overrides.w_t = va_wt;
      if (*va_dt_opt) va.overrides.d_t = va_dt;
      if (*va_c_opt) va.overrides.c = va_c;
      return run_validate_alpha(va, io, out);
    }
    if (enumerate_cmd->parsed()) {
      return run_enumerate_pi(io, in, out, err);
    }
    if (gen_cmd->parsed()) {
      return run_gen(gen_opts, io, out);
    }
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InstanceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace opack
