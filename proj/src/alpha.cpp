#include "opack/alpha.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace opack {

bool AlphaSpec::needs_weights() const {
  if (kind == Kind::weight) return true;
  for (const auto& p : parts) {
    if (p.needs_weights()) return true;
  }
  return false;
}

bool AlphaSpec::needs_properties() const {
  if (kind == Kind::property) return true;
  for (const auto& p : parts) {
    if (p.needs_properties()) return true;
  }
  return false;
}

bool AlphaSpec::needs_distances() const {
  if (kind == Kind::metric) return true;
  for (const auto& p : parts) {
    if (p.needs_distances()) return true;
  }
  return false;
}

bool AlphaSpec::needs_graph() const {
  if (kind == Kind::pattern || kind == Kind::dense_overlap ||
      kind == Kind::density) {
    return true;
  }
  if (kind == Kind::metric && graph_distance) return true;
  for (const auto& p : parts) {
    if (p.needs_graph()) return true;
  }
  return false;
}

std::string to_string(AlphaSpec::Kind kind) {
  switch (kind) {
    case AlphaSpec::Kind::size: return "size";
    case AlphaSpec::Kind::weight: return "weight";
    case AlphaSpec::Kind::measure: return "measure";
    case AlphaSpec::Kind::metric: return "metric";
    case AlphaSpec::Kind::pattern: return "pattern";
    case AlphaSpec::Kind::property: return "property";
    case AlphaSpec::Kind::dense_overlap: return "dense_overlap";
    case AlphaSpec::Kind::density: return "density";
    case AlphaSpec::Kind::conjunction: return "conjunction";
  }
  return "?";
}

std::size_t OverlapPredicate::KeyHash::operator()(const Key& k) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(k.a.size());
  for (Elem e : k.a) mix(static_cast<std::size_t>(e));
  mix(k.b.size() + 0x517cc1b727220a95ull);
  for (Elem e : k.b) mix(static_cast<std::size_t>(e));
  return h;
}

OverlapPredicate::OverlapPredicate(std::string name, Fn fn)
    : st_(std::make_shared<State>()) {
  st_->name = std::move(name);
  st_->fn = std::move(fn);
}

Verdict OverlapPredicate::evaluate(const ElementSet& a, const ElementSet& b) const {
  auto& st = *st_;
  st.calls.fetch_add(1, std::memory_order_relaxed);
  const ElementSet* lo = &a;
  const ElementSet* hi = &b;
  if (*hi < *lo) std::swap(lo, hi);
  Key key{lo->elems(), hi->elems()};
  {
    std::lock_guard lock(st.mu);
    auto it = st.memo.find(key);
    if (it != st.memo.end()) return it->second;
  }
  const Verdict v = st.fn(*lo, *hi);
  {
    std::lock_guard lock(st.mu);
    st.memo.emplace(std::move(key), v);
  }
  return v;
}

std::uint64_t OverlapPredicate::evaluations() const {
  return st_ ? st_->calls.load(std::memory_order_relaxed) : 0;
}

const std::string& OverlapPredicate::name() const {
  static const std::string empty;
  return st_ ? st_->name : empty;
}

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw InstanceError(message);
}

Verdict no_conflict_if(bool ok) {
  return ok ? Verdict::NoConflict : Verdict::Conflict;
}

// G[s] avoids every forbidden graph as an induced subgraph.
bool avoids_forbidden(const Graph& g, const ElementSet& s,
                      const std::vector<Graph>& forbidden) {
  const auto& verts = s.elems();
  for (const Graph& f : forbidden) {
    const int fs = f.n;
    if (fs > static_cast<int>(verts.size())) continue;
    std::vector<int> pick(fs);
    std::function<bool(int, int)> search = [&](int depth, int first) -> bool {
      if (depth == fs) {
        std::vector<Elem> chosen(fs);
        for (int i = 0; i < fs; ++i) chosen[i] = verts[pick[i]];
        return induced_isomorphic(g, ElementSet(std::move(chosen)), f);
      }
      for (int i = first; i + (fs - depth) <= static_cast<int>(verts.size()); ++i) {
        pick[depth] = i;
        if (search(depth + 1, i + 1)) return true;
      }
      return false;
    };
    if (search(0, 0)) return false;
  }
  return true;
}

}  // namespace

OverlapPredicate build_predicate(const AlphaSpec& spec, const Universe& universe,
                                 const Graph* graph_context) {
  if (graph_context != nullptr) {
    require(graph_context->n == universe.size,
            "graph context order does not match universe size");
  }
  switch (spec.kind) {
    case AlphaSpec::Kind::size: {
      require(spec.t >= 0, "alpha size: t must be >= 0");
      const int bound = spec.t;
      return OverlapPredicate("size", [bound](const ElementSet& a, const ElementSet& b) {
        return no_conflict_if(static_cast<int>(intersect(a, b).size()) <= bound);
      });
    }
    case AlphaSpec::Kind::weight: {
      require(spec.w_t >= 0.0, "alpha weight: w_t must be >= 0");
      require(universe.weights.has_value(),
              "alpha weight: universe has no weights");
      const std::vector<double> w = *universe.weights;
      const double bound = spec.w_t;
      return OverlapPredicate("weight", [w, bound](const ElementSet& a, const ElementSet& b) {
        const ElementSet overlap = intersect(a, b);
        double total = 0.0;
        for (Elem u : overlap.elems()) total += w.at(u);
        return no_conflict_if(total <= bound);
      });
    }
    case AlphaSpec::Kind::measure: {
      require(spec.measure_t >= 0.0, "alpha measure: t must be >= 0");
      require(static_cast<int>(spec.values.size()) == universe.size,
              "alpha measure: values length must equal universe size");
      for (double v : spec.values) {
        require(std::isfinite(v) && v >= 0.0,
                "alpha measure: values must be non-negative");
      }
      const std::vector<double> values = spec.values;
      const double bound = spec.measure_t;
      return OverlapPredicate("measure", [values, bound](const ElementSet& a, const ElementSet& b) {
        const ElementSet overlap = intersect(a, b);
        double total = 0.0;
        for (Elem u : overlap.elems()) total += values.at(u);
        return no_conflict_if(total <= bound);
      });
    }
    case AlphaSpec::Kind::metric: {
      require(spec.d_t > 0.0, "alpha metric: d_t must be > 0");
      DistanceMatrix dist;
      if (universe.distances.has_value()) {
        dist = *universe.distances;
      } else if (graph_context != nullptr) {
        dist = graph_distance_matrix(*graph_context);
      } else {
        throw InstanceError("alpha metric: universe has no distances");
      }
      const double bound = spec.d_t;
      return OverlapPredicate("metric", [dist, bound](const ElementSet& a, const ElementSet& b) {
        const ElementSet ov = intersect(a, b);
        if (ov.size() <= 1) return Verdict::NoConflict;
        const auto& e = ov.elems();
        for (std::size_t i = 0; i < e.size(); ++i) {
          for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (!(dist.at(e[i], e[j]) <= bound)) return Verdict::Conflict;
          }
        }
        return Verdict::NoConflict;
      });
    }
    case AlphaSpec::Kind::pattern: {
      require(graph_context != nullptr, "alpha pattern: requires a graph context");
      const Graph g = *graph_context;
      switch (spec.pattern_class) {
        case AlphaSpec::PatternClass::clique:
          return OverlapPredicate("pattern:clique", [g](const ElementSet& a, const ElementSet& b) {
            const ElementSet ov = intersect(a, b);
            const int o = static_cast<int>(ov.size());
            return no_conflict_if(g.edges_within(ov) == o * (o - 1) / 2);
          });
        case AlphaSpec::PatternClass::edgeless:
          return OverlapPredicate("pattern:edgeless", [g](const ElementSet& a, const ElementSet& b) {
            return no_conflict_if(g.edges_within(intersect(a, b)) == 0);
          });
        case AlphaSpec::PatternClass::forbidden_induced: {
          require(!spec.forbidden.empty(),
                  "alpha pattern: forbidden_induced needs at least one graph");
          for (const Graph& f : spec.forbidden) {
            require(f.n >= 1, "alpha pattern: forbidden graph must have >= 1 vertex");
          }
          const std::vector<Graph> forbidden = spec.forbidden;
          return OverlapPredicate("pattern:forbidden", [g, forbidden](const ElementSet& a, const ElementSet& b) {
            return no_conflict_if(avoids_forbidden(g, intersect(a, b), forbidden));
          });
        }
      }
      throw InstanceError("alpha pattern: unknown class");
    }
    case AlphaSpec::Kind::property: {
      require(universe.properties.has_value(),
              "alpha property: universe has no properties");
      const std::vector<char> flags = *universe.properties;
      return OverlapPredicate("property", [flags](const ElementSet& a, const ElementSet& b) {
        const ElementSet overlap = intersect(a, b);
        for (Elem u : overlap.elems()) {
          if (!flags.at(u)) return Verdict::Conflict;
        }
        return Verdict::NoConflict;
      });
    }
    case AlphaSpec::Kind::dense_overlap: {
      require(spec.c >= 0, "alpha dense_overlap: c must be >= 0");
      require(graph_context != nullptr,
              "alpha dense_overlap: requires a graph context");
      const Graph g = *graph_context;
      const int slack = spec.c;
      return OverlapPredicate("dense_overlap", [g, slack](const ElementSet& a, const ElementSet& b) {
        const ElementSet ov = intersect(a, b);
        if (ov.empty()) return Verdict::NoConflict;
        const int o = static_cast<int>(ov.size());
        return no_conflict_if(g.edges_within(ov) >= o * (o - 1) / 2 - slack);
      });
    }
    case AlphaSpec::Kind::density: {
      require(spec.t >= 0, "alpha density: t must be >= 0");
      require(spec.c >= 0, "alpha density: c must be >= 0");
      require(graph_context != nullptr, "alpha density: requires a graph context");
      const Graph g = *graph_context;
      const int vert_bound = spec.t;
      const int edge_bound = spec.c;
      return OverlapPredicate("density", [g, vert_bound, edge_bound](const ElementSet& a, const ElementSet& b) {
        const ElementSet ov = intersect(a, b);
        if (ov.empty()) return Verdict::NoConflict;
        return no_conflict_if(static_cast<int>(ov.size()) <= vert_bound &&
                              g.edges_within(ov) <= edge_bound);
      });
    }
    case AlphaSpec::Kind::conjunction: {
      require(!spec.parts.empty(), "alpha conjunction: needs at least one part");
      std::vector<OverlapPredicate> parts;
      std::string name = "conjunction(";
      for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        parts.push_back(build_predicate(spec.parts[i], universe, graph_context));
        if (i > 0) name += ",";
        name += parts.back().name();
      }
      name += ")";
      return OverlapPredicate(name, [parts](const ElementSet& a, const ElementSet& b) {
        for (const auto& p : parts) {
          if (p.evaluate(a, b) == Verdict::Conflict) return Verdict::Conflict;
        }
        return Verdict::NoConflict;
      });
    }
  }
  throw InstanceError("alpha: unknown kind");
}

ConditionReport validate_well_conditioned(const OverlapPredicate& pred,
                                          int n_max, int r) {
  require(n_max >= 0 && n_max <= 8,
          "validate_well_conditioned: n_max must be in [0, 8]");
  require(r >= 0, "validate_well_conditioned: r must be >= 0");

  // All subsets of {0..n_max-1} with size <= r, as bitmasks.
  const std::uint32_t full = 1u << n_max;
  std::vector<std::uint32_t> masks;
  std::vector<int> id(full, -1);
  for (std::uint32_t m = 0; m < full; ++m) {
    if (std::popcount(m) <= r) {
      id[m] = static_cast<int>(masks.size());
      masks.push_back(m);
    }
  }
  const int count = static_cast<int>(masks.size());
  std::vector<ElementSet> sets(count);
  for (int i = 0; i < count; ++i) {
    std::vector<Elem> e;
    for (int v = 0; v < n_max; ++v) {
      if (masks[i] & (1u << v)) e.push_back(v);
    }
    sets[i] = ElementSet(std::move(e));
  }

  std::vector<std::vector<Verdict>> table(count, std::vector<Verdict>(count));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      table[i][j] = pred.evaluate(sets[i], sets[j]);
    }
  }

  constexpr std::size_t witness_cap = 10000;
  ConditionReport report;
  report.checked_pairs = static_cast<std::uint64_t>(count) * count;
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      const std::uint32_t a = masks[i];
      const std::uint32_t b = masks[j];
      const std::uint32_t overlap = a & b;
      if (table[i][j] == Verdict::NoConflict) {
        for (std::uint32_t sa = a;; sa = (sa - 1) & a) {
          for (std::uint32_t sb = b;; sb = (sb - 1) & b) {
            if (table[id[sa]][id[sb]] == Verdict::Conflict &&
                report.hereditary_violations.size() < witness_cap) {
              report.hereditary_violations.push_back(
                  {sets[i], sets[j], sets[id[sa]], sets[id[sb]]});
            }
            if (sb == 0) break;
          }
          if (sa == 0) break;
        }
      } else {
        if (overlap == 0 && report.condition_ii_violations.size() < witness_cap) {
          report.condition_ii_violations.push_back({sets[i], sets[j], true, {}, {}});
        }
        for (std::uint32_t sa = a;; sa = (sa - 1) & a) {
          for (std::uint32_t sb = b;; sb = (sb - 1) & b) {
            if (table[id[sa]][id[sb]] == Verdict::NoConflict &&
                (overlap & ~(sa & sb)) == 0 &&
                report.condition_ii_violations.size() < witness_cap) {
              report.condition_ii_violations.push_back(
                  {sets[i], sets[j], false, sets[id[sa]], sets[id[sb]]});
            }
            if (sb == 0) break;
          }
          if (sa == 0) break;
        }
      }
    }
  }
  return report;
}

}  // namespace opack
