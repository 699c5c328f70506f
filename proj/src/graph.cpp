#include "opack/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace opack {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw InstanceError("graph: negative vertex count");
  Graph g;
  g.n = n;
  g.adj.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InstanceError("graph: edge endpoint out of range (" +
                          std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (u == v) {
      throw InstanceError("graph: self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InstanceError("graph: parallel edge");
  }
  for (auto [u, v] : edges) {
    g.adj[static_cast<std::size_t>(u) * n + v] = 1;
    g.adj[static_cast<std::size_t>(v) * n + u] = 1;
  }
  g.edges = std::move(edges);
  return g;
}

int Graph::edges_within(const ElementSet& s) const {
  int count = 0;
  const auto& e = s.elems();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      count += adjacent(e[i], e[j]);
    }
  }
  return count;
}

int Graph::degree_within(int v, const ElementSet& s) const {
  int count = 0;
  for (Elem u : s.elems()) {
    if (u != v && adjacent(u, v)) ++count;
  }
  return count;
}

int Graph::boundary_edges(const ElementSet& s) const {
  int count = 0;
  for (auto [u, v] : edges) {
    count += (s.contains(u) != s.contains(v));
  }
  return count;
}

namespace {

bool extend_isomorphism(const Graph& g, const std::vector<Elem>& verts,
                        const Graph& pattern, std::vector<int>& assigned,
                        std::vector<char>& used, std::size_t depth) {
  if (depth == verts.size()) return true;
  for (int p = 0; p < pattern.n; ++p) {
    if (used[p]) continue;
    bool ok = true;
    for (std::size_t q = 0; q < depth; ++q) {
      if (g.adjacent(verts[depth], verts[q]) != pattern.adjacent(p, assigned[q])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    assigned[depth] = p;
    used[p] = 1;
    if (extend_isomorphism(g, verts, pattern, assigned, used, depth + 1)) return true;
    used[p] = 0;
  }
  return false;
}

}  // namespace

bool induced_isomorphic(const Graph& g, const ElementSet& s, const Graph& pattern) {
  if (static_cast<int>(s.size()) != pattern.n) return false;
  std::vector<int> assigned(s.size(), -1);
  std::vector<char> used(pattern.n, 0);
  return extend_isomorphism(g, s.elems(), pattern, assigned, used, 0);
}

bool check_pi(const Graph& g, const ElementSet& s, const PiSpec& pi) {
  switch (pi.kind) {
    case PiSpec::Kind::clique: {
      const auto& e = s.elems();
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
          if (!g.adjacent(e[i], e[j])) return false;
        }
      }
      return true;
    }
    case PiSpec::Kind::family: {
      for (const Graph& h : pi.patterns) {
        if (induced_isomorphic(g, s, h)) return true;
      }
      return false;
    }
    case PiSpec::Kind::min_edges: {
      if (g.edges_within(s) < pi.min_edges) return false;
      if (pi.max_boundary_edges && g.boundary_edges(s) > *pi.max_boundary_edges) {
        return false;
      }
      return true;
    }
    case PiSpec::Kind::min_degree_offset: {
      const int need = static_cast<int>(s.size()) - pi.degree_offset;
      for (Elem v : s.elems()) {
        if (g.degree_within(v, s) < need) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

void enumerate_subsets(const Graph& g, const PiSpec& pi, int size, int first,
                       std::vector<Elem>& current, std::vector<ElementSet>& out) {
  if (static_cast<int>(current.size()) == size) {
    ElementSet s(current);
    if (check_pi(g, s, pi)) out.push_back(std::move(s));
    return;
  }
  const int remaining = size - static_cast<int>(current.size());
  for (int v = first; v + remaining <= g.n; ++v) {
    current.push_back(v);
    enumerate_subsets(g, pi, size, v + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

SetFamily enumerate_pi_subgraphs(const Graph& g, const PiSpec& pi, int r,
                                 int min_size) {
  if (r < 1) throw InstanceError("enumerate_pi_subgraphs: r must be >= 1");
  if (min_size < 1 || min_size > r) {
    throw InstanceError("enumerate_pi_subgraphs: min_size must be in [1, r]");
  }
  SetFamily family;
  family.max_set_size = r;
  std::vector<Elem> current;
  for (int size = min_size; size <= std::min(r, g.n); ++size) {
    enumerate_subsets(g, pi, size, 0, current, family.members);
  }
  std::sort(family.members.begin(), family.members.end());
  return family;
}

DistanceMatrix graph_distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> neighbours(g.n);
  for (auto [u, v] : g.edges) {
    neighbours[u].push_back(v);
    neighbours[v].push_back(u);
  }
  const double inf = std::numeric_limits<double>::infinity();
  DistanceMatrix dist(g.n);
  std::fill(dist.d.begin(), dist.d.end(), inf);
  std::deque<int> queue;
  for (int src = 0; src < g.n; ++src) {
    dist.d[static_cast<std::size_t>(src) * g.n + src] = 0.0;
    queue.assign(1, src);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      const double du = dist.at(src, u);
      for (int v : neighbours[u]) {
        if (dist.at(src, v) == inf) {
          dist.d[static_cast<std::size_t>(src) * g.n + v] = du + 1.0;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw InstanceError("edge list: expected header 'n m'");
  if (n < 0 || m < 0) throw InstanceError("edge list: negative header value");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw InstanceError("edge list: expected " + std::to_string(m) +
                          " edges, got " + std::to_string(i));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  long long extra = 0;
  if (in >> extra) throw InstanceError("edge list: trailing tokens after edges");
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

}  // namespace opack
