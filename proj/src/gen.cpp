#include "opack/gen.hpp"

#include <algorithm>
#include <set>

namespace opack {

std::uint64_t max_distinct_sets(int n, int r) {
  std::uint64_t total = 0;
  for (int size = 1; size <= std::min(n, r); ++size) {
    std::uint64_t binom = 1;
    for (int j = 1; j <= size; ++j) {
      binom = binom * static_cast<std::uint64_t>(n - size + j) / j;
    }
    total += binom;
    if (total >= (1u << 20)) return 1u << 20;
  }
  return total;
}

int rnd_int(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

double rnd_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool rnd_bool(std::mt19937_64& rng, double p) { return rnd_unit(rng) < p; }

std::vector<double> random_weights(std::mt19937_64& rng, int n) {
  std::vector<double> w(n);
  for (double& x : w) x = static_cast<double>(rnd_int(rng, 0, 3));
  return w;
}

std::vector<char> random_properties(std::mt19937_64& rng, int n) {
  std::vector<char> flags(n);
  for (char& f : flags) f = rnd_bool(rng, 0.6) ? 1 : 0;
  return flags;
}

DistanceMatrix random_metric(std::mt19937_64& rng, int n) {
  DistanceMatrix dist(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      dist.set(u, v, static_cast<double>(rnd_int(rng, 1, 8)));
    }
  }
  // Shortest-path closure restores the triangle inequality; entries stay
  // integral, so later threshold comparisons are exact.
  for (int w = 0; w < n; ++w) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        const double via = dist.at(u, w) + dist.at(w, v);
        if (via < dist.at(u, v)) dist.set(u, v, via);
      }
    }
  }
  return dist;
}

Graph random_graph(std::mt19937_64& rng, int n, double edge_prob) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rnd_bool(rng, edge_prob)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

std::vector<ElementSet> random_heads(std::mt19937_64& rng, int n, int r, int count) {
  std::vector<ElementSet> heads;
  heads.reserve(count);
  const int max_head = std::min({2, r, n});
  for (int i = 0; i < count; ++i) {
    const int size = rnd_int(rng, 1, max_head);
    std::set<Elem> elems;
    while (static_cast<int>(elems.size()) < size) {
      elems.insert(rnd_int(rng, 0, n - 1));
    }
    heads.emplace_back(std::vector<Elem>(elems.begin(), elems.end()));
  }
  return heads;
}

std::optional<std::pair<AlphaSpec::Kind, bool>> alpha_kind_from_string(
    const std::string& name) {
  using K = AlphaSpec::Kind;
  if (name == "size") return {{K::size, false}};
  if (name == "weight") return {{K::weight, false}};
  if (name == "measure") return {{K::measure, false}};
  if (name == "metric") return {{K::metric, false}};
  if (name == "distance") return {{K::metric, true}};
  if (name == "pattern") return {{K::pattern, false}};
  if (name == "property") return {{K::property, false}};
  if (name == "dense_overlap") return {{K::dense_overlap, false}};
  if (name == "density") return {{K::density, false}};
  if (name == "conjunction") return {{K::conjunction, false}};
  return std::nullopt;
}

std::optional<PiSpec::Kind> pi_kind_from_string(const std::string& name) {
  using K = PiSpec::Kind;
  if (name == "clique") return K::clique;
  if (name == "family") return K::family;
  if (name == "min_edges") return K::min_edges;
  if (name == "min_degree_offset") return K::min_degree_offset;
  return std::nullopt;
}

namespace {

Graph triangle_pattern() {
  return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
}

Graph path3_pattern() {
  return Graph::from_edges(3, {{0, 1}, {1, 2}});
}

// Fills the spec's parameters (respecting overrides) and whatever
// annotations the kind needs, assuming sets of size up to about 4.
AlphaSpec random_alpha_spec(AlphaSpec::Kind kind, int n, std::mt19937_64& rng,
                            const AlphaOverrides& over, Universe& universe,
                            std::optional<Graph>& graph) {
  using K = AlphaSpec::Kind;
  AlphaSpec spec;
  spec.kind = kind;
  auto ensure_graph = [&] {
    if (!graph) graph = random_graph(rng, n, 0.2 + 0.4 * rnd_unit(rng));
  };
  switch (kind) {
    case K::size:
      spec.t = over.t.value_or(rnd_int(rng, 0, 2));
      break;
    case K::weight:
      universe.weights = random_weights(rng, n);
      spec.w_t = over.w_t.value_or(static_cast<double>(rnd_int(rng, 0, 6)));
      break;
    case K::measure: {
      spec.values.resize(n);
      for (double& v : spec.values) v = static_cast<double>(rnd_int(rng, 0, 3));
      spec.measure_t = over.w_t.value_or(static_cast<double>(rnd_int(rng, 0, 6)));
      break;
    }
    case K::metric:
      universe.distances = random_metric(rng, n);
      spec.d_t = over.d_t.value_or(static_cast<double>(rnd_int(rng, 1, 6)));
      break;
    case K::pattern: {
      ensure_graph();
      const int which = rnd_int(rng, 0, 2);
      if (which == 0) {
        spec.pattern_class = AlphaSpec::PatternClass::clique;
      } else if (which == 1) {
        spec.pattern_class = AlphaSpec::PatternClass::edgeless;
      } else {
        spec.pattern_class = AlphaSpec::PatternClass::forbidden_induced;
        spec.forbidden.push_back(rnd_bool(rng, 0.5) ? triangle_pattern()
                                                    : path3_pattern());
      }
      break;
    }
    case K::property:
      universe.properties = random_properties(rng, n);
      break;
    case K::dense_overlap:
      ensure_graph();
      spec.c = over.c.value_or(rnd_int(rng, 0, 2));
      break;
    case K::density:
      ensure_graph();
      spec.t = over.t.value_or(rnd_int(rng, 1, 3));
      spec.c = over.c.value_or(rnd_int(rng, 0, 3));
      break;
    case K::conjunction: {
      AlphaSpec size_part;
      size_part.kind = K::size;
      size_part.t = over.t.value_or(rnd_int(rng, 1, 2));
      AlphaSpec property_part;
      property_part.kind = K::property;
      universe.properties = random_properties(rng, n);
      spec.parts = {size_part, property_part};
      break;
    }
  }
  return spec;
}

void check_caps(const GenParams& p) {
  if (p.n < 1 || p.n > 64) throw InstanceError("gen: n must be in [1, 64]");
  if (p.r < 1 || p.r > 8) throw InstanceError("gen: r must be in [1, 8]");
  if (p.k < 1 || p.k > 8) throw InstanceError("gen: k must be in [1, 8]");
  if (p.m < 0 || p.m > 512) throw InstanceError("gen: m must be in [0, 512]");
  if (p.cluster_heads < 0 || p.cluster_heads > 32) {
    throw InstanceError("gen: cluster_heads must be in [0, 32]");
  }
  if (p.edge_prob < 0.0 || p.edge_prob > 1.0) {
    throw InstanceError("gen: edge_prob must be in [0, 1]");
  }
}

}  // namespace

AlphaDraw random_alpha_draw(AlphaSpec::Kind kind, int n, std::mt19937_64& rng,
                            const AlphaOverrides& overrides) {
  AlphaDraw draw;
  draw.universe.size = n;
  draw.spec = random_alpha_spec(kind, n, rng, overrides, draw.universe, draw.graph);
  return draw;
}

SetSystemInstance random_set_instance(std::mt19937_64& rng, const GenParams& p) {
  check_caps(p);
  SetSystemInstance inst;
  inst.universe.size = p.n;
  inst.family.max_set_size = p.r;
  inst.k = p.k;

  std::set<ElementSet> seen;
  int attempts = 0;
  while (static_cast<int>(inst.family.members.size()) < p.m) {
    if (++attempts > 200 * p.m + 1000) {
      throw InstanceError("gen: could not draw enough distinct sets");
    }
    const int size = rnd_int(rng, 1, std::min(p.r, p.n));
    std::set<Elem> elems;
    while (static_cast<int>(elems.size()) < size) {
      elems.insert(rnd_int(rng, 0, p.n - 1));
    }
    ElementSet member(std::vector<Elem>(elems.begin(), elems.end()));
    if (seen.insert(member).second) inst.family.members.push_back(std::move(member));
  }

  AlphaOverrides none;
  std::optional<Graph> graph;
  inst.alpha = random_alpha_spec(p.alpha_kind, p.n, rng, none, inst.universe, graph);
  inst.alpha.graph_distance = p.graph_distance;
  inst.graph_context = graph;

  if (p.cluster_heads > 0) {
    std::vector<ElementSet> heads;
    for (int i = 0; i < p.cluster_heads; ++i) {
      // Mostly subsets of actual members so that heads are completable.
      if (!inst.family.members.empty() && rnd_bool(rng, 0.8)) {
        const ElementSet& member =
            inst.family.members[rnd_int(rng, 0, p.m - 1)];
        const int size =
            rnd_int(rng, 1, std::min<int>(2, static_cast<int>(member.size())));
        std::set<Elem> elems;
        while (static_cast<int>(elems.size()) < size) {
          const auto& e = member.elems();
          elems.insert(e[rnd_int(rng, 0, static_cast<int>(e.size()) - 1)]);
        }
        heads.emplace_back(std::vector<Elem>(elems.begin(), elems.end()));
      } else {
        auto extra = random_heads(rng, p.n, p.r, 1);
        heads.push_back(std::move(extra.front()));
      }
    }
    inst.cluster_heads = std::move(heads);
  }
  return inst;
}

GraphInstance random_graph_instance(std::mt19937_64& rng, const GenParams& p) {
  check_caps(p);
  GraphInstance gi;
  gi.graph = random_graph(rng, p.n, p.edge_prob);
  gi.r = p.r;
  gi.k = p.k;

  gi.pi.kind = p.pi_kind;
  switch (p.pi_kind) {
    case PiSpec::Kind::clique:
      break;
    case PiSpec::Kind::family:
      gi.pi.patterns.push_back(triangle_pattern());
      break;
    case PiSpec::Kind::min_edges:
      gi.pi.min_edges = rnd_int(rng, 1, 3);
      break;
    case PiSpec::Kind::min_degree_offset:
      gi.pi.degree_offset = rnd_int(rng, 0, 2);
      break;
  }

  AlphaOverrides none;
  Universe annotations;
  annotations.size = p.n;
  std::optional<Graph> context = gi.graph;
  gi.alpha =
      random_alpha_spec(p.alpha_kind, p.n, rng, none, annotations, context);
  gi.alpha.graph_distance = p.graph_distance;
  // Graph instances derive distances from the graph itself.
  if (gi.alpha.kind == AlphaSpec::Kind::metric) {
    gi.alpha.graph_distance = true;
  }
  gi.weights = annotations.weights;
  gi.properties = annotations.properties;

  if (p.cluster_heads > 0) {
    gi.cluster_heads = random_heads(rng, p.n, p.r, p.cluster_heads);
  }
  return gi;
}

std::string gen_instance_json(const GenParams& p, std::uint64_t seed) {
  check_caps(p);
  std::mt19937_64 rng(seed);
  if (p.graph_form) {
    return serialize_graph_instance(random_graph_instance(rng, p));
  }
  if (p.alpha_kind == AlphaSpec::Kind::pattern ||
      p.alpha_kind == AlphaSpec::Kind::dense_overlap ||
      p.alpha_kind == AlphaSpec::Kind::density || p.graph_distance) {
    throw InstanceError(
        "gen: alpha kind needs a graph context; use the graph form");
  }
  return serialize_instance(random_set_instance(rng, p));
}

}  // namespace opack
