#include "opack/sets.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

namespace opack {

ElementSet::ElementSet(std::vector<Elem> elems) : e_(std::move(elems)) {
  std::sort(e_.begin(), e_.end());
  if (std::adjacent_find(e_.begin(), e_.end()) != e_.end()) {
    throw InstanceError("duplicate element in set " + to_string(*this));
  }
}

ElementSet::ElementSet(std::initializer_list<Elem> elems)
    : ElementSet(std::vector<Elem>(elems)) {}

bool ElementSet::contains(Elem u) const {
  return std::binary_search(e_.begin(), e_.end(), u);
}

bool ElementSet::subset_of(const ElementSet& other) const {
  return std::includes(other.e_.begin(), other.e_.end(), e_.begin(), e_.end());
}

ElementSet ElementSet::with(Elem u) const {
  if (contains(u)) return *this;
  ElementSet out = *this;
  out.e_.insert(std::upper_bound(out.e_.begin(), out.e_.end(), u), u);
  return out;
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> out;
  std::set_intersection(a.elems().begin(), a.elems().end(), b.elems().begin(),
                        b.elems().end(), std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet unite(const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> out;
  std::set_union(a.elems().begin(), a.elems().end(), b.elems().begin(),
                 b.elems().end(), std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet difference(const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> out;
  std::set_difference(a.elems().begin(), a.elems().end(), b.elems().begin(),
                      b.elems().end(), std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet val_union(const std::vector<ElementSet>& sets) {
  ElementSet out;
  for (const auto& s : sets) out = unite(out, s);
  return out;
}

std::string to_string(const ElementSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) os << ',';
    os << s.elems()[i];
  }
  os << '}';
  return os.str();
}

DistanceMatrix::DistanceMatrix(int size)
    : n(size), d(static_cast<std::size_t>(size) * size, 0.0) {}

void DistanceMatrix::set(int u, int v, double value) {
  d[static_cast<std::size_t>(u) * n + v] = value;
  d[static_cast<std::size_t>(v) * n + u] = value;
}

void DistanceMatrix::validate_metric() const {
  auto pos = [&](int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  };
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const double x = at(u, v);
      if (std::isnan(x) || x < 0.0) {
        throw InstanceError("distances: negative or NaN entry at " + pos(u, v));
      }
      if (u == v && x != 0.0) {
        throw InstanceError("distances: nonzero diagonal at " + pos(u, v));
      }
      if (at(u, v) != at(v, u)) {
        throw InstanceError("distances: not symmetric at " + pos(u, v));
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        if (at(u, w) > at(u, v) + at(v, w)) {
          throw InstanceError("distances: triangle inequality violated for (" +
                              std::to_string(u) + "," + std::to_string(v) +
                              "," + std::to_string(w) + ")");
        }
      }
    }
  }
}

}  // namespace opack
