#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "opack/instance.hpp"

namespace opack {

struct OracleConfig {
  std::size_t max_family_size = 24;  // refuse larger families
  bool pch_mode = false;
  bool shared_heads = false;
};

// Definition-literal reference solver: enumerates k-subsets of the family
// in canonical order and returns the first one whose pairs all pass (and,
// in PCH mode, the two PCH conditions). Deliberately naive; this is the
// ground truth for the differential suites.
std::optional<Solution> brute_force_solve(const SetSystemInstance& instance,
                                          const OracleConfig& cfg = {});

// Every solution, in canonical order. Test harness helper.
std::vector<Solution> brute_force_all_solutions(const SetSystemInstance& instance,
                                                const OracleConfig& cfg = {});

}  // namespace opack
