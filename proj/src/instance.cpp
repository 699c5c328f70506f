#include "opack/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <json.hpp>

namespace opack {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("malformed JSON: ") + e.what());
  }
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find_if(known.begin(), known.end(), [&](const char* k) {
          return it.key() == k;
        }) == known.end()) {
      throw InstanceError(where + ": unknown field '" + it.key() + "'");
    }
  }
}

const json& require_field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw InstanceError(where + ": missing field '" + key + "'");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw InstanceError(where + ": expected an integer");
  }
  return j.get<int>();
}

double as_double(const json& j, const std::string& where) {
  if (!j.is_number()) throw InstanceError(where + ": expected a number");
  return j.get<double>();
}

ElementSet element_set_from_json(const json& j, int universe_size,
                                 const std::string& where) {
  if (!j.is_array()) throw InstanceError(where + ": expected an array");
  std::vector<Elem> elems;
  elems.reserve(j.size());
  for (const auto& entry : j) {
    const int u = as_int(entry, where);
    if (u < 0 || u >= universe_size) {
      throw InstanceError(where + ": element " + std::to_string(u) +
                          " out of range [0, " + std::to_string(universe_size) + ")");
    }
    elems.push_back(u);
  }
  return ElementSet(std::move(elems));
}

json element_set_to_json(const ElementSet& s) {
  return json(s.elems());
}

Graph graph_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw InstanceError(where + ": expected an object");
  reject_unknown_keys(j, {"vertices", "edges"}, where);
  const int n = as_int(require_field(j, "vertices", where), where + ".vertices");
  const json& edges_json = require_field(j, "edges", where);
  if (!edges_json.is_array()) throw InstanceError(where + ".edges: expected an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : edges_json) {
    if (!e.is_array() || e.size() != 2) {
      throw InstanceError(where + ".edges: expected [u, v] pairs");
    }
    edges.emplace_back(as_int(e[0], where + ".edges"), as_int(e[1], where + ".edges"));
  }
  return Graph::from_edges(n, std::move(edges));
}

json graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.n;
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

AlphaSpec alpha_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw InstanceError(where + ": expected an object");
  const json& kind_json = require_field(j, "kind", where);
  if (!kind_json.is_string()) throw InstanceError(where + ".kind: expected a string");
  const std::string kind = kind_json.get<std::string>();

  AlphaSpec spec;
  if (kind == "size") {
    reject_unknown_keys(j, {"kind", "t"}, where);
    spec.kind = AlphaSpec::Kind::size;
    spec.t = as_int(require_field(j, "t", where), where + ".t");
    if (spec.t < 0) throw InstanceError(where + ".t: must be >= 0");
  } else if (kind == "weight") {
    reject_unknown_keys(j, {"kind", "w_t"}, where);
    spec.kind = AlphaSpec::Kind::weight;
    spec.w_t = as_double(require_field(j, "w_t", where), where + ".w_t");
    if (!(spec.w_t >= 0.0)) throw InstanceError(where + ".w_t: must be >= 0");
  } else if (kind == "measure") {
    reject_unknown_keys(j, {"kind", "t", "values"}, where);
    spec.kind = AlphaSpec::Kind::measure;
    spec.measure_t = as_double(require_field(j, "t", where), where + ".t");
    if (!(spec.measure_t >= 0.0)) throw InstanceError(where + ".t: must be >= 0");
    const json& values = require_field(j, "values", where);
    if (!values.is_array()) throw InstanceError(where + ".values: expected an array");
    for (const auto& v : values) {
      const double x = as_double(v, where + ".values");
      if (!(x >= 0.0) || !std::isfinite(x)) {
        throw InstanceError(where + ".values: must be non-negative");
      }
      spec.values.push_back(x);
    }
  } else if (kind == "metric" || kind == "distance") {
    reject_unknown_keys(j, {"kind", "d_t"}, where);
    spec.kind = AlphaSpec::Kind::metric;
    spec.graph_distance = (kind == "distance");
    spec.d_t = as_double(require_field(j, "d_t", where), where + ".d_t");
    if (!(spec.d_t > 0.0)) throw InstanceError(where + ".d_t: must be > 0");
  } else if (kind == "pattern") {
    reject_unknown_keys(j, {"kind", "class", "graphs"}, where);
    spec.kind = AlphaSpec::Kind::pattern;
    const json& cls = require_field(j, "class", where);
    if (!cls.is_string()) throw InstanceError(where + ".class: expected a string");
    const std::string cls_name = cls.get<std::string>();
    if (cls_name == "clique") {
      spec.pattern_class = AlphaSpec::PatternClass::clique;
    } else if (cls_name == "edgeless") {
      spec.pattern_class = AlphaSpec::PatternClass::edgeless;
    } else if (cls_name == "forbidden_induced") {
      spec.pattern_class = AlphaSpec::PatternClass::forbidden_induced;
      const json& graphs = require_field(j, "graphs", where);
      if (!graphs.is_array() || graphs.empty()) {
        throw InstanceError(where + ".graphs: expected a non-empty array");
      }
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        spec.forbidden.push_back(
            graph_from_json(graphs[i], where + ".graphs[" + std::to_string(i) + "]"));
        if (spec.forbidden.back().n < 1) {
          throw InstanceError(where + ".graphs: pattern graph must have >= 1 vertex");
        }
      }
    } else {
      throw InstanceError(where + ".class: unknown class '" + cls_name + "'");
    }
    if (cls_name != "forbidden_induced" && j.contains("graphs")) {
      throw InstanceError(where + ".graphs: only valid for class forbidden_induced");
    }
  } else if (kind == "property") {
    reject_unknown_keys(j, {"kind"}, where);
    spec.kind = AlphaSpec::Kind::property;
  } else if (kind == "dense_overlap") {
    reject_unknown_keys(j, {"kind", "c"}, where);
    spec.kind = AlphaSpec::Kind::dense_overlap;
    spec.c = as_int(require_field(j, "c", where), where + ".c");
    if (spec.c < 0) throw InstanceError(where + ".c: must be >= 0");
  } else if (kind == "density") {
    reject_unknown_keys(j, {"kind", "t", "c"}, where);
    spec.kind = AlphaSpec::Kind::density;
    spec.t = as_int(require_field(j, "t", where), where + ".t");
    spec.c = as_int(require_field(j, "c", where), where + ".c");
    if (spec.t < 0) throw InstanceError(where + ".t: must be >= 0");
    if (spec.c < 0) throw InstanceError(where + ".c: must be >= 0");
  } else if (kind == "conjunction") {
    reject_unknown_keys(j, {"kind", "parts"}, where);
    spec.kind = AlphaSpec::Kind::conjunction;
    const json& parts = require_field(j, "parts", where);
    if (!parts.is_array() || parts.empty()) {
      throw InstanceError(where + ".parts: expected a non-empty array");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      spec.parts.push_back(
          alpha_from_json(parts[i], where + ".parts[" + std::to_string(i) + "]"));
    }
  } else {
    throw InstanceError(where + ".kind: unknown alpha kind '" + kind + "'");
  }
  return spec;
}

json alpha_to_json(const AlphaSpec& spec) {
  json j;
  switch (spec.kind) {
    case AlphaSpec::Kind::size:
      j["kind"] = "size";
      j["t"] = spec.t;
      break;
    case AlphaSpec::Kind::weight:
      j["kind"] = "weight";
      j["w_t"] = spec.w_t;
      break;
    case AlphaSpec::Kind::measure:
      j["kind"] = "measure";
      j["t"] = spec.measure_t;
      j["values"] = spec.values;
      break;
    case AlphaSpec::Kind::metric:
      j["kind"] = spec.graph_distance ? "distance" : "metric";
      j["d_t"] = spec.d_t;
      break;
    case AlphaSpec::Kind::pattern:
      j["kind"] = "pattern";
      switch (spec.pattern_class) {
        case AlphaSpec::PatternClass::clique: j["class"] = "clique"; break;
        case AlphaSpec::PatternClass::edgeless: j["class"] = "edgeless"; break;
        case AlphaSpec::PatternClass::forbidden_induced: {
          j["class"] = "forbidden_induced";
          json graphs = json::array();
          for (const Graph& g : spec.forbidden) graphs.push_back(graph_to_json(g));
          j["graphs"] = std::move(graphs);
          break;
        }
      }
      break;
    case AlphaSpec::Kind::property:
      j["kind"] = "property";
      break;
    case AlphaSpec::Kind::dense_overlap:
      j["kind"] = "dense_overlap";
      j["c"] = spec.c;
      break;
    case AlphaSpec::Kind::density:
      j["kind"] = "density";
      j["t"] = spec.t;
      j["c"] = spec.c;
      break;
    case AlphaSpec::Kind::conjunction: {
      j["kind"] = "conjunction";
      json parts = json::array();
      for (const AlphaSpec& p : spec.parts) parts.push_back(alpha_to_json(p));
      j["parts"] = std::move(parts);
      break;
    }
  }
  return j;
}

PiSpec pi_from_json(const json& j, int r, const std::string& where) {
  if (!j.is_object()) throw InstanceError(where + ": expected an object");
  const json& kind_json = require_field(j, "kind", where);
  if (!kind_json.is_string()) throw InstanceError(where + ".kind: expected a string");
  const std::string kind = kind_json.get<std::string>();

  PiSpec pi;
  if (kind == "clique") {
    reject_unknown_keys(j, {"kind"}, where);
    pi.kind = PiSpec::Kind::clique;
  } else if (kind == "family") {
    reject_unknown_keys(j, {"kind", "graphs"}, where);
    pi.kind = PiSpec::Kind::family;
    const json& graphs = require_field(j, "graphs", where);
    if (!graphs.is_array() || graphs.empty()) {
      throw InstanceError(where + ".graphs: expected a non-empty array");
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      pi.patterns.push_back(
          graph_from_json(graphs[i], where + ".graphs[" + std::to_string(i) + "]"));
      if (pi.patterns.back().n < 1 || pi.patterns.back().n > r) {
        throw InstanceError(where + ".graphs: pattern order must be in [1, r]");
      }
    }
  } else if (kind == "min_edges") {
    reject_unknown_keys(j, {"kind", "t", "max_boundary_edges"}, where);
    pi.kind = PiSpec::Kind::min_edges;
    pi.min_edges = as_int(require_field(j, "t", where), where + ".t");
    if (pi.min_edges < 0) throw InstanceError(where + ".t: must be >= 0");
    if (j.contains("max_boundary_edges")) {
      pi.max_boundary_edges = as_int(j["max_boundary_edges"], where + ".max_boundary_edges");
      if (*pi.max_boundary_edges < 0) {
        throw InstanceError(where + ".max_boundary_edges: must be >= 0");
      }
    }
  } else if (kind == "min_degree_offset") {
    reject_unknown_keys(j, {"kind", "c"}, where);
    pi.kind = PiSpec::Kind::min_degree_offset;
    pi.degree_offset = as_int(require_field(j, "c", where), where + ".c");
    if (pi.degree_offset < 0) throw InstanceError(where + ".c: must be >= 0");
  } else {
    throw InstanceError(where + ".kind: unknown pi kind '" + kind + "'");
  }
  return pi;
}

json pi_to_json(const PiSpec& pi) {
  json j;
  switch (pi.kind) {
    case PiSpec::Kind::clique:
      j["kind"] = "clique";
      break;
    case PiSpec::Kind::family: {
      j["kind"] = "family";
      json graphs = json::array();
      for (const Graph& g : pi.patterns) graphs.push_back(graph_to_json(g));
      j["graphs"] = std::move(graphs);
      break;
    }
    case PiSpec::Kind::min_edges:
      j["kind"] = "min_edges";
      j["t"] = pi.min_edges;
      if (pi.max_boundary_edges) j["max_boundary_edges"] = *pi.max_boundary_edges;
      break;
    case PiSpec::Kind::min_degree_offset:
      j["kind"] = "min_degree_offset";
      j["c"] = pi.degree_offset;
      break;
  }
  return j;
}

std::vector<double> weights_from_json(const json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw InstanceError(where + ": expected an array of length " + std::to_string(n));
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    const double x = as_double(v, where);
    if (!std::isfinite(x) || x < 0.0) {
      throw InstanceError(where + ": entries must be finite and >= 0");
    }
    out.push_back(x);
  }
  return out;
}

std::vector<char> properties_from_json(const json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw InstanceError(where + ": expected an array of length " + std::to_string(n));
  }
  std::vector<char> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_boolean()) throw InstanceError(where + ": entries must be booleans");
    out.push_back(v.get<bool>() ? 1 : 0);
  }
  return out;
}

DistanceMatrix distances_from_json(const json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw InstanceError(where + ": expected " + std::to_string(n) + " rows");
  }
  DistanceMatrix dist(n);
  for (int u = 0; u < n; ++u) {
    const json& row = j[u];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InstanceError(where + ": row " + std::to_string(u) + " must have " +
                          std::to_string(n) + " entries");
    }
    for (int v = 0; v < n; ++v) {
      // null encodes +infinity (unreachable pair).
      if (row[v].is_null()) {
        dist.d[static_cast<std::size_t>(u) * n + v] =
            std::numeric_limits<double>::infinity();
      } else {
        dist.d[static_cast<std::size_t>(u) * n + v] = as_double(row[v], where);
      }
    }
  }
  dist.validate_metric();
  return dist;
}

json distances_to_json(const DistanceMatrix& dist) {
  json rows = json::array();
  for (int u = 0; u < dist.n; ++u) {
    json row = json::array();
    for (int v = 0; v < dist.n; ++v) {
      const double x = dist.at(u, v);
      if (std::isfinite(x)) {
        row.push_back(x);
      } else {
        row.push_back(nullptr);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ElementSet> cluster_heads_from_json(const json& j, int n, int r,
                                                std::vector<std::string>& warnings,
                                                const std::string& where) {
  if (!j.is_array()) throw InstanceError(where + ": expected an array");
  std::vector<ElementSet> heads;
  for (std::size_t i = 0; i < j.size(); ++i) {
    ElementSet head =
        element_set_from_json(j[i], n, where + "[" + std::to_string(i) + "]");
    if (head.empty()) {
      throw InstanceError(where + "[" + std::to_string(i) + "]: head must be non-empty");
    }
    if (static_cast<int>(head.size()) > r) {
      warnings.push_back("cluster head " + to_string(head) +
                         " has more than r elements; discarded");
      continue;
    }
    heads.push_back(std::move(head));
  }
  return heads;
}

void check_alpha_annotations(const AlphaSpec& alpha, const Universe& universe,
                             bool have_graph) {
  if (alpha.needs_weights() && !universe.weights) {
    throw InstanceError("alpha: weight predicate requires 'weights'");
  }
  if (alpha.needs_properties() && !universe.properties) {
    throw InstanceError("alpha: property predicate requires 'properties'");
  }
  if (!have_graph) {
    if (alpha.needs_graph()) {
      throw InstanceError(
          "alpha: pattern/dense_overlap/density/distance kinds require a "
          "graph instance");
    }
    if (alpha.needs_distances() && !universe.distances) {
      throw InstanceError("alpha: metric predicate requires 'distances'");
    }
  }
}

}  // namespace

SetSystemInstance parse_instance(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw InstanceError("instance: expected a JSON object");
  reject_unknown_keys(j,
                      {"universe", "r", "k", "sets", "weights", "properties",
                       "distances", "alpha", "cluster_heads"},
                      "instance");

  SetSystemInstance inst;
  const int n = as_int(require_field(j, "universe", "instance"), "instance.universe");
  if (n < 0) throw InstanceError("instance.universe: must be >= 0");
  inst.universe.size = n;

  const int r = as_int(require_field(j, "r", "instance"), "instance.r");
  if (r < 1) throw InstanceError("instance.r: must be >= 1");
  inst.family.max_set_size = r;

  inst.k = as_int(require_field(j, "k", "instance"), "instance.k");
  if (inst.k < 1) throw InstanceError("instance.k: must be >= 1");

  const json& sets = require_field(j, "sets", "instance");
  if (!sets.is_array()) throw InstanceError("instance.sets: expected an array");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string where = "instance.sets[" + std::to_string(i) + "]";
    ElementSet member = element_set_from_json(sets[i], n, where);
    if (member.empty()) throw InstanceError(where + ": set must be non-empty");
    if (static_cast<int>(member.size()) > r) {
      throw InstanceError(where + ": set exceeds r");
    }
    inst.family.members.push_back(std::move(member));
  }
  {
    std::set<ElementSet> seen;
    for (std::size_t i = 0; i < inst.family.members.size(); ++i) {
      if (!seen.insert(inst.family.members[i]).second) {
        throw InstanceError("instance.sets[" + std::to_string(i) +
                            "]: duplicate set " + to_string(inst.family.members[i]));
      }
    }
  }

  if (j.contains("weights")) {
    inst.universe.weights = weights_from_json(j["weights"], n, "instance.weights");
  }
  if (j.contains("properties")) {
    inst.universe.properties =
        properties_from_json(j["properties"], n, "instance.properties");
  }
  if (j.contains("distances")) {
    inst.universe.distances =
        distances_from_json(j["distances"], n, "instance.distances");
  }

  inst.alpha = alpha_from_json(require_field(j, "alpha", "instance"), "instance.alpha");
  if (inst.alpha.kind == AlphaSpec::Kind::measure &&
      static_cast<int>(inst.alpha.values.size()) != n) {
    throw InstanceError("instance.alpha.values: length must equal universe size");
  }
  check_alpha_annotations(inst.alpha, inst.universe, /*have_graph=*/false);

  if (j.contains("cluster_heads")) {
    inst.cluster_heads = cluster_heads_from_json(j["cluster_heads"], n, r,
                                                 inst.load_warnings,
                                                 "instance.cluster_heads");
  }
  return inst;
}

std::string serialize_instance(const SetSystemInstance& inst) {
  json j;
  j["universe"] = inst.universe.size;
  j["r"] = inst.family.max_set_size;
  j["k"] = inst.k;
  json sets = json::array();
  for (const auto& member : inst.family.members) {
    sets.push_back(element_set_to_json(member));
  }
  j["sets"] = std::move(sets);
  if (inst.universe.weights) j["weights"] = *inst.universe.weights;
  if (inst.universe.properties) {
    json props = json::array();
    for (char f : *inst.universe.properties) props.push_back(f != 0);
    j["properties"] = std::move(props);
  }
  if (inst.universe.distances) {
    j["distances"] = distances_to_json(*inst.universe.distances);
  }
  j["alpha"] = alpha_to_json(inst.alpha);
  if (inst.cluster_heads) {
    json heads = json::array();
    for (const auto& head : *inst.cluster_heads) {
      heads.push_back(element_set_to_json(head));
    }
    j["cluster_heads"] = std::move(heads);
  }
  return j.dump();
}

GraphInstance parse_graph_instance(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw InstanceError("graph instance: expected a JSON object");
  reject_unknown_keys(j,
                      {"vertices", "edges", "r", "k", "pi", "alpha", "weights",
                       "properties", "cluster_heads"},
                      "graph instance");

  GraphInstance gi;
  {
    json graph_part;
    graph_part["vertices"] = require_field(j, "vertices", "graph instance");
    graph_part["edges"] = require_field(j, "edges", "graph instance");
    gi.graph = graph_from_json(graph_part, "graph instance");
  }
  gi.r = as_int(require_field(j, "r", "graph instance"), "graph instance.r");
  if (gi.r < 1) throw InstanceError("graph instance.r: must be >= 1");
  gi.k = as_int(require_field(j, "k", "graph instance"), "graph instance.k");
  if (gi.k < 1) throw InstanceError("graph instance.k: must be >= 1");
  gi.pi = pi_from_json(require_field(j, "pi", "graph instance"), gi.r,
                       "graph instance.pi");
  gi.alpha = alpha_from_json(require_field(j, "alpha", "graph instance"),
                             "graph instance.alpha");
  if (gi.alpha.kind == AlphaSpec::Kind::measure &&
      static_cast<int>(gi.alpha.values.size()) != gi.graph.n) {
    throw InstanceError("graph instance.alpha.values: length must equal vertex count");
  }
  if (j.contains("weights")) {
    gi.weights = weights_from_json(j["weights"], gi.graph.n, "graph instance.weights");
  }
  if (j.contains("properties")) {
    gi.properties =
        properties_from_json(j["properties"], gi.graph.n, "graph instance.properties");
  }
  {
    Universe annotations;
    annotations.size = gi.graph.n;
    annotations.weights = gi.weights;
    if (gi.properties) {
      annotations.properties = gi.properties;
    }
    check_alpha_annotations(gi.alpha, annotations, /*have_graph=*/true);
  }
  if (j.contains("cluster_heads")) {
    gi.cluster_heads = cluster_heads_from_json(j["cluster_heads"], gi.graph.n, gi.r,
                                               gi.load_warnings,
                                               "graph instance.cluster_heads");
  }
  return gi;
}

std::string serialize_graph_instance(const GraphInstance& gi) {
  json j = graph_to_json(gi.graph);
  j["r"] = gi.r;
  j["k"] = gi.k;
  j["pi"] = pi_to_json(gi.pi);
  j["alpha"] = alpha_to_json(gi.alpha);
  if (gi.weights) j["weights"] = *gi.weights;
  if (gi.properties) {
    json props = json::array();
    for (char f : *gi.properties) props.push_back(f != 0);
    j["properties"] = std::move(props);
  }
  if (gi.cluster_heads) {
    json heads = json::array();
    for (const auto& head : *gi.cluster_heads) {
      heads.push_back(element_set_to_json(head));
    }
    j["cluster_heads"] = std::move(heads);
  }
  return j.dump();
}

AlphaSpec parse_alpha_spec(const std::string& json_text) {
  return alpha_from_json(parse_json(json_text), "alpha");
}

PiSpec parse_pi_spec(const std::string& json_text, int r) {
  return pi_from_json(parse_json(json_text), r, "pi");
}

std::vector<int> sets_containing(const SetFamily& family, const ElementSet& s) {
  if (s.empty()) throw InstanceError("sets_containing: subset must be non-empty");
  std::vector<int> out;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (s.subset_of(family.members[i])) out.push_back(static_cast<int>(i));
  }
  return out;
}

SetSystemInstance reduce_to_set_instance(const GraphInstance& gi, int min_pi_size) {
  SetSystemInstance inst;
  inst.universe.size = gi.graph.n;
  inst.universe.weights = gi.weights;
  inst.universe.properties = gi.properties;
  if (gi.alpha.needs_distances()) {
    inst.universe.distances = graph_distance_matrix(gi.graph);
  }
  inst.family = enumerate_pi_subgraphs(gi.graph, gi.pi, gi.r, min_pi_size);
  inst.k = gi.k;
  inst.alpha = gi.alpha;
  inst.cluster_heads = gi.cluster_heads;
  inst.graph_context = gi.graph;
  inst.load_warnings = gi.load_warnings;
  return inst;
}

ValidationReport validate_solution(const SetSystemInstance& instance,
                                   const Solution& solution, bool shared_heads) {
  ValidationReport report;
  auto fail = [&report](std::string message) {
    report.pass = false;
    report.problems.push_back(std::move(message));
  };

  const int m = static_cast<int>(instance.family.members.size());
  if (static_cast<int>(solution.chosen.size()) != instance.k) {
    fail("wrong cardinality: expected " + std::to_string(instance.k) + " indices, got " +
         std::to_string(solution.chosen.size()));
  }
  std::vector<int> usable;
  {
    std::set<int> seen;
    for (int idx : solution.chosen) {
      if (idx < 0 || idx >= m) {
        fail("index " + std::to_string(idx) + " out of range");
        continue;
      }
      if (!seen.insert(idx).second) {
        fail("index " + std::to_string(idx) + " chosen twice");
        continue;
      }
      usable.push_back(idx);
    }
  }

  const OverlapPredicate pred = instance.make_predicate();
  for (std::size_t i = 0; i < usable.size(); ++i) {
    for (std::size_t j = i + 1; j < usable.size(); ++j) {
      const auto& a = instance.family.members[usable[i]];
      const auto& b = instance.family.members[usable[j]];
      if (pred.evaluate(a, b) == Verdict::Conflict) {
        report.conflicting_pairs.emplace_back(usable[i], usable[j]);
        report.pass = false;
      }
    }
  }

  if (instance.cluster_heads) {
    const auto& heads = *instance.cluster_heads;
    for (int idx : usable) {
      const auto& member = instance.family.members[idx];
      const bool has_head = std::any_of(
          heads.begin(), heads.end(),
          [&member](const ElementSet& head) { return head.subset_of(member); });
      if (!has_head) {
        report.sets_missing_head.push_back(idx);
        report.pass = false;
      }
    }
    if (!shared_heads) {
      const ElementSet head_elems = val_union(heads);
      for (std::size_t i = 0; i < usable.size(); ++i) {
        for (std::size_t j = i + 1; j < usable.size(); ++j) {
          const auto& a = instance.family.members[usable[i]];
          const auto& b = instance.family.members[usable[j]];
          if (!intersect(intersect(a, b), head_elems).empty()) {
            report.shared_head_pairs.emplace_back(usable[i], usable[j]);
            report.pass = false;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace opack
