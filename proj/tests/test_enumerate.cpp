#include "cluster/enumerate.hpp"

#include "doctest.h"

using namespace cluster;

TEST_CASE("depth zero returns the initial cluster") {
  const auto r = bfs_explore(initial_seed(build_a_matrix(2, 1)), 0);
  CHECK(r.variables.size() == 3);
  CHECK(r.seeds_visited == 1);
  for (int i = 0; i < 3; ++i) CHECK(r.variables.contains(LaurentPoly::variable(3, i)));
}

TEST_CASE("depth one adds one variable per vertex") {
  const auto r = bfs_explore(initial_seed(build_a_matrix(2, 1)), 1);
  CHECK(r.variables.size() == 6);
  CHECK(r.seeds_visited == 4);
}

TEST_CASE("layer accounting: each frontier seed rediscovers its parent") {
  const auto r = bfs_explore(initial_seed(build_a_matrix(2, 1)), 2);
  CHECK(r.seeds_visited == 10);  // 1 + 3 + 3*2
  CHECK(r.dedupe_hits == 3);
}

TEST_CASE("finite type exchange graph closes up") {
  // single arrow on two vertices: five clusters, ten ordered seeds
  ExchangeMatrix a2(2);
  a2.add_arrow(0, 1);
  const auto r = bfs_explore(initial_seed(a2), 20);
  CHECK(r.variables.size() == 5);
  CHECK(r.seeds_visited == 10);
  CHECK(r.dedupe_hits > 0);

  const auto deeper = bfs_explore(initial_seed(a2), 40);
  CHECK(deeper.variables.size() == 5);
  CHECK(deeper.seeds_visited == 10);
}

TEST_CASE("worker count does not change the result") {
  const auto one = bfs_explore(initial_seed(build_a_matrix(3, 2)), 3, 1);
  const auto four = bfs_explore(initial_seed(build_a_matrix(3, 2)), 3, 4);
  CHECK(one.variables.size() == four.variables.size());
  CHECK(one.seeds_visited == four.seeds_visited);
  auto it = one.variables.entries().begin();
  auto jt = four.variables.entries().begin();
  for (; it != one.variables.entries().end(); ++it, ++jt) CHECK(it->first == jt->first);
}

TEST_CASE("small annulus enumeration agrees with the prediction") {
  AFamilies fam(2, 1);
  const auto found = bfs_explore(initial_seed(build_a_matrix(2, 1)), 8);
  const auto report = cross_check(fam, found, 8);
  CHECK(report.passed);
  CHECK(report.found_not_predicted.empty());
  CHECK(report.determinant_missing.empty());
  CHECK(report.non_frieze_found == 2);
  CHECK(!report.near_window_edge);

  // the two non-frieze variables are exactly the period-2 family
  CHECK(found.variables.contains(fam.j.value(0)));
  CHECK(found.variables.contains(fam.j.value(1)));

  for (const auto& [key, v] : found.variables.entries()) CHECK(v.positive_coefficients());
}

TEST_CASE("five-point annulus finds all eight determinant variables") {
  AFamilies fam(3, 2);
  const auto found = bfs_explore(initial_seed(build_a_matrix(3, 2)), 6);
  const auto predicted = predicted_variables(fam, 6);
  CHECK(predicted.determinant.size() == 8);
  const auto report = cross_check(fam, found, 6);
  CHECK(report.passed);
  CHECK(report.found_not_predicted.empty());
  CHECK(report.determinant_missing.empty());
}

TEST_CASE("twice-punctured disk enumeration reports extras without failing") {
  DFamilies fam(4);
  const auto found = bfs_explore(initial_seed(build_d_matrix(4)), 6);
  const auto report = cross_check(fam, found, 6);
  CHECK(report.passed);
  CHECK(found.variables.contains(fam.jprime.value(0)));
  CHECK(found.variables.contains(fam.jprime.value(1)));
  CHECK(report.extras >= 3);

  for (const auto& [key, v] : found.variables.entries()) CHECK(v.positive_coefficients());
}

TEST_CASE("a too-narrow comparison window is flagged") {
  AFamilies fam(2, 1);
  const auto found = bfs_explore(initial_seed(build_a_matrix(2, 1)), 3);
  const auto narrow = cross_check(fam, found, 3, 2);
  CHECK(narrow.near_window_edge);
  const auto wide = cross_check(fam, found, 3);
  CHECK(!wide.near_window_edge);
}

TEST_CASE("non-frieze discoveries stay at two for the small annulus") {
  AFamilies fam(2, 1);
  for (int depth : {3, 5, 8}) {
    const auto found = bfs_explore(initial_seed(build_a_matrix(2, 1)), depth);
    const auto report = cross_check(fam, found, depth);
    CHECK(report.passed);
    CHECK(report.non_frieze_found == (depth >= 2 ? 2 : 0));
  }
}

TEST_CASE("predicted family sizes") {
  AFamilies a21(2, 1);
  CHECK(predicted_variables(a21, 4).determinant.size() == 2);
  DFamilies d5(5);
  CHECK(predicted_variables(d5, 2).determinant.size() == 6);  // (N-2)(N-3)
}
