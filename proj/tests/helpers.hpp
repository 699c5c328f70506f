#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "opack/alpha.hpp"
#include "opack/gen.hpp"
#include "opack/instance.hpp"
#include "opack/sets.hpp"

namespace opack::test {

// Keeps randomly drawn (n, m, r) combinations satisfiable: a universe of n
// elements only has so many distinct sets of size <= r.
inline void clamp_family_size(GenParams& params) {
  params.m = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(params.m),
      max_distinct_sets(params.n, params.r)));
}

inline SetFamily make_family(std::vector<std::vector<Elem>> members, int r) {
  SetFamily family;
  family.max_set_size = r;
  for (auto& m : members) family.members.emplace_back(std::move(m));
  return family;
}

inline SetSystemInstance size_instance(std::vector<std::vector<Elem>> members,
                                       int n, int r, int k, int t) {
  SetSystemInstance inst;
  inst.universe.size = n;
  inst.family = make_family(std::move(members), r);
  inst.k = k;
  inst.alpha.kind = AlphaSpec::Kind::size;
  inst.alpha.t = t;
  return inst;
}

inline OverlapPredicate size_predicate(int t) {
  AlphaSpec spec;
  spec.kind = AlphaSpec::Kind::size;
  spec.t = t;
  Universe u;
  u.size = 0;  // the size predicate reads no annotations
  return build_predicate(spec, u);
}

// All subsets of {0..n-1} with lo <= size <= hi.
inline std::vector<ElementSet> all_subsets(int n, int lo, int hi) {
  std::vector<ElementSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Elem> elems;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) elems.push_back(v);
    }
    const int size = static_cast<int>(elems.size());
    if (size >= lo && size <= hi) out.emplace_back(std::move(elems));
  }
  return out;
}

}  // namespace opack::test
