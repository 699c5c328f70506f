#include <doctest.h>

#include <random>
#include <vector>

#include "helpers.hpp"
#include "opack/alpha.hpp"
#include "opack/gen.hpp"

using namespace opack;
using opack::test::all_subsets;
using opack::test::size_predicate;

namespace {

Universe unit_weight_universe(int n) {
  Universe u;
  u.size = n;
  u.weights = std::vector<double>(n, 1.0);
  return u;
}

Universe path_metric_universe(int n) {
  Universe u;
  u.size = n;
  DistanceMatrix d(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) d.set(a, b, std::abs(a - b));
  }
  u.distances = d;
  return u;
}

const std::vector<AlphaSpec::Kind> all_kinds = {
    AlphaSpec::Kind::size,          AlphaSpec::Kind::weight,
    AlphaSpec::Kind::measure,       AlphaSpec::Kind::metric,
    AlphaSpec::Kind::pattern,       AlphaSpec::Kind::property,
    AlphaSpec::Kind::dense_overlap, AlphaSpec::Kind::density,
    AlphaSpec::Kind::conjunction};

}  // namespace

TEST_SUITE_BEGIN("alpha");

TEST_CASE("alpha-Weight with unit weights and w_t = 1") {
  AlphaSpec spec;
  spec.kind = AlphaSpec::Kind::weight;
  spec.w_t = 1.0;
  const OverlapPredicate pred = build_predicate(spec, unit_weight_universe(5));
  CHECK(pred.evaluate({0, 1, 2}, {2, 3, 4}) == Verdict::NoConflict);
  CHECK(pred.evaluate({0, 1, 2}, {1, 2, 3}) == Verdict::Conflict);
  CHECK(pred.evaluate({0, 1}, {2, 3}) == Verdict::NoConflict);
}

TEST_CASE("alpha-Metric over the path metric 0-1-2-3-4, d_t = 2") {
  AlphaSpec spec;
  spec.kind = AlphaSpec::Kind::metric;
  spec.d_t = 2.0;
  const OverlapPredicate pred = build_predicate(spec, path_metric_universe(5));
  CHECK(pred.evaluate({0, 3}, {0, 3}) == Verdict::Conflict);      // dist 3 > 2
  CHECK(pred.evaluate({0, 1, 2}, {2}) == Verdict::NoConflict);    // overlap size 1
  CHECK(pred.evaluate({1, 2, 3}, {1, 2, 3}) == Verdict::NoConflict);
}

TEST_CASE("alpha-Density with t = 2, c = 1") {
  const Graph g = Graph::from_edges(3, {{0, 1}});
  Universe u;
  u.size = 3;
  AlphaSpec spec;
  spec.kind = AlphaSpec::Kind::density;
  spec.t = 2;
  spec.c = 1;
  const OverlapPredicate pred = build_predicate(spec, u, &g);
  CHECK(pred.evaluate({0, 1, 2}, {0, 1, 2}) == Verdict::Conflict);  // 3 > t
  CHECK(pred.evaluate({0, 1}, {0, 1}) == Verdict::NoConflict);      // 2 <= 2, 1 <= 1
  CHECK(pred.evaluate({0}, {1}) == Verdict::NoConflict);            // empty overlap
}

TEST_CASE("size with t = 0 is disjointness") {
  const OverlapPredicate pred = size_predicate(0);
  for (const ElementSet& a : all_subsets(5, 0, 3)) {
    for (const ElementSet& b : all_subsets(5, 0, 3)) {
      CHECK((pred.evaluate(a, b) == Verdict::NoConflict) ==
            intersect(a, b).empty());
    }
  }
}

TEST_CASE("construction-time errors") {
  Universe bare;
  bare.size = 4;

  AlphaSpec metric;
  metric.kind = AlphaSpec::Kind::metric;
  metric.d_t = 1.0;
  CHECK_THROWS_WITH_AS(build_predicate(metric, bare),
                       doctest::Contains("distances"), InstanceError);
  metric.d_t = 0.0;
  CHECK_THROWS_WITH_AS(build_predicate(metric, path_metric_universe(4)),
                       doctest::Contains("d_t"), InstanceError);

  AlphaSpec weight;
  weight.kind = AlphaSpec::Kind::weight;
  weight.w_t = 1.0;
  CHECK_THROWS_AS(build_predicate(weight, bare), InstanceError);

  AlphaSpec measure;
  measure.kind = AlphaSpec::Kind::measure;
  measure.measure_t = 1.0;
  measure.values = {1.0, -2.0, 0.0, 0.0};
  CHECK_THROWS_WITH_AS(build_predicate(measure, bare),
                       doctest::Contains("non-negative"), InstanceError);

  AlphaSpec pattern;
  pattern.kind = AlphaSpec::Kind::pattern;
  CHECK_THROWS_WITH_AS(build_predicate(pattern, bare),
                       doctest::Contains("graph"), InstanceError);
}

TEST_CASE("conjunction conflicts exactly when a constituent does") {
  std::mt19937_64 rng(5);
  Universe u;
  u.size = 5;
  u.properties = random_properties(rng, 5);

  AlphaSpec size_part;
  size_part.kind = AlphaSpec::Kind::size;
  size_part.t = 2;
  AlphaSpec property_part;
  property_part.kind = AlphaSpec::Kind::property;
  AlphaSpec both;
  both.kind = AlphaSpec::Kind::conjunction;
  both.parts = {size_part, property_part};

  const OverlapPredicate conj = build_predicate(both, u);
  const OverlapPredicate by_size = build_predicate(size_part, u);
  const OverlapPredicate by_property = build_predicate(property_part, u);
  for (const ElementSet& a : all_subsets(5, 0, 4)) {
    for (const ElementSet& b : all_subsets(5, 0, 4)) {
      const bool conflict = by_size.evaluate(a, b) == Verdict::Conflict ||
                            by_property.evaluate(a, b) == Verdict::Conflict;
      CHECK((conj.evaluate(a, b) == Verdict::Conflict) == conflict);
    }
  }
}

TEST_CASE("every built-in is symmetric and safe on disjoint sets") {
  std::mt19937_64 rng(23);
  for (const auto kind : all_kinds) {
    for (int draw = 0; draw < 3; ++draw) {
      const AlphaDraw d = random_alpha_draw(kind, 6, rng);
      const OverlapPredicate pred = d.build();
      const auto subsets = all_subsets(6, 0, 3);
      for (const ElementSet& a : subsets) {
        for (const ElementSet& b : subsets) {
          CHECK(pred.evaluate(a, b) == pred.evaluate(b, a));
          if (intersect(a, b).empty()) {
            CHECK(pred.evaluate(a, b) == Verdict::NoConflict);
          }
        }
      }
    }
  }
}

TEST_CASE("alpha-Weight is well-conditioned for random non-negative weights") {
  std::mt19937_64 rng(31);
  for (int draw = 0; draw < 5; ++draw) {
    const AlphaDraw d = random_alpha_draw(AlphaSpec::Kind::weight, 5, rng);
    const ConditionReport report = validate_well_conditioned(d.build(), 5, 3);
    CHECK(report.ok());
    CHECK(report.checked_pairs > 0);
  }
}

TEST_CASE("alpha-Pattern with the clique class is well-conditioned") {
  std::mt19937_64 rng(37);
  for (int draw = 0; draw < 5; ++draw) {
    const Graph g = random_graph(rng, 5, rnd_unit(rng));
    Universe u;
    u.size = 5;
    AlphaSpec spec;
    spec.kind = AlphaSpec::Kind::pattern;
    spec.pattern_class = AlphaSpec::PatternClass::clique;
    const ConditionReport report =
        validate_well_conditioned(build_predicate(spec, u, &g), 5, 3);
    CHECK(report.ok());
  }
}

TEST_CASE("every built-in passes the validator on random annotations") {
  std::mt19937_64 rng(41);
  for (const auto kind : all_kinds) {
    for (int draw = 0; draw < 3; ++draw) {
      const AlphaDraw d = random_alpha_draw(kind, 5, rng);
      const ConditionReport report = validate_well_conditioned(d.build(), 5, 3);
      CAPTURE(to_string(kind));
      CHECK(report.ok());
    }
  }
}

TEST_CASE("the validator exposes a non-hereditary predicate") {
  // Conflict iff the overlap size is even and at least 2: {0,1,2} vs itself
  // passes while the subset pair {0,1},{0,1} conflicts.
  const OverlapPredicate broken(
      "broken", [](const ElementSet& a, const ElementSet& b) {
        const auto o = intersect(a, b).size();
        return (o >= 2 && o % 2 == 0) ? Verdict::Conflict : Verdict::NoConflict;
      });
  const ConditionReport report = validate_well_conditioned(broken, 5, 3);
  CHECK_FALSE(report.hereditary_violations.empty());
  for (const auto& v : report.hereditary_violations) {
    CHECK(broken.evaluate(v.si, v.sj) == Verdict::NoConflict);
    CHECK(broken.evaluate(v.si_sub, v.sj_sub) == Verdict::Conflict);
    CHECK(v.si_sub.subset_of(v.si));
    CHECK(v.sj_sub.subset_of(v.sj));
  }
}

TEST_CASE("the validator exposes a predicate conflicting on empty overlap") {
  const OverlapPredicate broken(
      "always-conflict",
      [](const ElementSet&, const ElementSet&) { return Verdict::Conflict; });
  const ConditionReport report = validate_well_conditioned(broken, 3, 2);
  bool saw_empty_overlap = false;
  for (const auto& v : report.condition_ii_violations) {
    saw_empty_overlap |= v.empty_overlap;
  }
  CHECK(saw_empty_overlap);
}

TEST_CASE("validator refuses n_max above 8") {
  CHECK_THROWS_AS(validate_well_conditioned(size_predicate(1), 9, 3),
                  InstanceError);
}

TEST_CASE("unit weights with w_t = t reduce to the size predicate") {
  const Universe u = unit_weight_universe(5);
  for (int t = 0; t <= 3; ++t) {
    AlphaSpec spec;
    spec.kind = AlphaSpec::Kind::weight;
    spec.w_t = t;
    const OverlapPredicate by_weight = build_predicate(spec, u);
    const OverlapPredicate by_size = size_predicate(t);
    for (const ElementSet& a : all_subsets(5, 0, 5)) {
      for (const ElementSet& b : all_subsets(5, 0, 5)) {
        CHECK(by_weight.evaluate(a, b) == by_size.evaluate(a, b));
      }
    }
  }
}

TEST_CASE("graph distance reads dist_G, not the overlap's induced graph") {
  // On the path 0-1-2 the overlap {0,2} has dist_G = 2 through the outside
  // vertex 1; inside G[{0,2}] the two are disconnected. With d_t = 2 the two
  // readings disagree, and the hereditary one (dist_G) must win.
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Universe u;
  u.size = 3;
  AlphaSpec spec;
  spec.kind = AlphaSpec::Kind::metric;
  spec.graph_distance = true;
  spec.d_t = 2.0;
  const OverlapPredicate pred = build_predicate(spec, u, &g);
  CHECK(pred.evaluate({0, 1, 2}, {0, 2}) == Verdict::NoConflict);
  // Sanity: a genuinely distant pair still conflicts.
  const Graph longer = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Universe four;
  four.size = 4;
  const OverlapPredicate far = build_predicate(spec, four, &longer);
  CHECK(far.evaluate({0, 3}, {0, 3}) == Verdict::Conflict);
}

TEST_CASE("evaluation counting survives memoization") {
  const OverlapPredicate pred = size_predicate(1);
  CHECK(pred.evaluations() == 0);
  pred.evaluate({0, 1}, {1, 2});
  pred.evaluate({1, 2}, {0, 1});  // memo hit, still counted
  CHECK(pred.evaluations() == 2);
}

TEST_SUITE_END();
