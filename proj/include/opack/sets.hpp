#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace opack {

struct InstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Elem = int;

// Sorted, duplicate-free subset of universe elements. This is the canonical
// representation used everywhere: family members, partial-solution slots,
// overlap regions, cluster heads.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Elem> elems);
  ElementSet(std::initializer_list<Elem> elems);

  const std::vector<Elem>& elems() const { return e_; }
  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }
  bool contains(Elem u) const;
  bool subset_of(const ElementSet& other) const;
  ElementSet with(Elem u) const;

  auto operator<=>(const ElementSet&) const = default;

 private:
  std::vector<Elem> e_;
};

ElementSet intersect(const ElementSet& a, const ElementSet& b);
ElementSet unite(const ElementSet& a, const ElementSet& b);
ElementSet difference(const ElementSet& a, const ElementSet& b);
ElementSet val_union(const std::vector<ElementSet>& sets);
std::string to_string(const ElementSet& s);

// Dense symmetric pairwise-distance table; +infinity marks unreachable
// pairs (triangle inequality holds for it under IEEE arithmetic).
struct DistanceMatrix {
  int n = 0;
  std::vector<double> d;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int size);

  double at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
  void set(int u, int v, double value);
  // Throws InstanceError naming the first violated metric axiom.
  void validate_metric() const;

  bool operator==(const DistanceMatrix&) const = default;
};

struct Universe {
  int size = 0;
  std::optional<std::vector<double>> weights;
  std::optional<std::vector<char>> properties;  // the xi flags, 0/1
  std::optional<DistanceMatrix> distances;

  bool operator==(const Universe&) const = default;
};

struct SetFamily {
  std::vector<ElementSet> members;
  int max_set_size = 1;  // r

  bool operator==(const SetFamily&) const = default;
};

}  // namespace opack
