#include "cluster/surface.hpp"

#include <random>

#include "doctest.h"

using namespace cluster;

TEST_CASE("initial triangulation of the small annulus") {
  const auto t = AnnulusTriangulation::initial(2, 1);
  REQUIRE(t.arcs().size() == 3);
  CHECK(t.arcs()[0] == Arc{CrossingArc{0, 0}});
  CHECK(t.arcs()[1] == Arc{CrossingArc{1, 0}});
  // the third arc wraps once: canonical lift (0, -1), label 2
  CHECK(t.arcs()[2] == Arc{CrossingArc{0, -1}});

  for (auto [q, p] : {std::pair{3, 2}, std::pair{5, 3}, std::pair{8, 7}}) {
    const auto big = AnnulusTriangulation::initial(q, p);
    CHECK(static_cast<int>(big.arcs().size()) == q + p);
  }
  CHECK_THROWS_AS(AnnulusTriangulation::initial(4, 2), UnsupportedError);
}

TEST_CASE("triangulation validation") {
  // two arcs from the same deck orbit collide
  CHECK_THROWS_AS(AnnulusTriangulation(2, 1,
                                       {CrossingArc{0, 0}, CrossingArc{2, 1}, CrossingArc{1, 0}}),
                  std::invalid_argument);
  // crossing pair: (0,0) and (1,-1) interleave
  CHECK_THROWS_AS(AnnulusTriangulation(2, 1,
                                       {CrossingArc{0, 0}, CrossingArc{1, -1}, CrossingArc{1, 0}}),
                  std::invalid_argument);
  // peripheral span too wide for the boundary
  CHECK_THROWS_AS(AnnulusTriangulation(2, 1,
                                       {PeripheralArc{true, 0, 2}, CrossingArc{0, 0},
                                        CrossingArc{1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("extracted quiver matches the builder") {
  CHECK(AnnulusTriangulation::initial(2, 1).quiver() == build_a_matrix(2, 1));
  CHECK(AnnulusTriangulation::initial(3, 2).quiver() == build_a_matrix(3, 2));
  CHECK(AnnulusTriangulation::initial(8, 7).quiver() == build_a_matrix(8, 7));
  CHECK(AnnulusTriangulation::initial(1, 1).quiver() == build_a_matrix(1, 1));
  // more top points than bottom points works the same way
  CHECK(AnnulusTriangulation::initial(2, 3).quiver() == build_a_matrix(2, 3));
  CHECK(AnnulusTriangulation::initial(3, 4).quiver() == build_a_matrix(3, 4));
  CHECK(AnnulusTriangulation::initial(1, 2).quiver() == build_a_matrix(1, 2));
}

TEST_CASE("initial arc slots carry their labels") {
  // 15-point annulus: arc k runs bottom k - floor(7k/15) to top floor(7k/15)
  // and sits in slot 7k mod 15
  const auto t = AnnulusTriangulation::initial(8, 7);
  CHECK(t.arcs()[0] == Arc{CrossingArc{0, 0}});
  CHECK(t.arcs()[7] == Arc{CrossingArc{1, 0}});
  CHECK(t.arcs()[14] == Arc{CrossingArc{2, 0}});
  CHECK(t.arcs()[6] == Arc{CrossingArc{2, 1}});   // k = 3
  CHECK(t.arcs()[13] == Arc{CrossingArc{3, 1}});  // k = 4
  CHECK(t.arcs()[8] == Arc{CrossingArc{0, -1}});  // k = 14, wrapped
}

TEST_CASE("double arrows flow through flips and Ptolemy") {
  // two vertices joined by a double arrow: the flip quadrilateral has the
  // other arc on both opposite sides, so x_old x_new = x_other^2 + 1
  AFamilies fam(1, 1);
  AnnulusTriangulation t = AnnulusTriangulation::initial(1, 1);
  Seed seed = initial_seed(build_a_matrix(1, 1));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 1);
  for (int step = 0; step < 10; ++step) {
    const int k = pick(rng);
    CHECK(ptolemy_check(t, k, fam).passed);
    const auto flip = t.flip(k);
    seed = mutate_seed(seed, k);
    REQUIRE(arc_variable(flip.added, fam) == seed.vars[k]);
    CHECK(flip.triangulation.quiver() == seed.matrix);
    t = std::move(flip.triangulation);
  }
}

TEST_CASE("flips commute with matrix mutation") {
  const auto t = AnnulusTriangulation::initial(8, 7);
  CHECK(t.flip(0).triangulation.quiver() == mutate_matrix(build_a_matrix(8, 7), 0));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    AnnulusTriangulation cur = AnnulusTriangulation::initial(3, 2);
    ExchangeMatrix m = build_a_matrix(3, 2);
    std::uniform_int_distribution<int> pick(0, 4);
    const int len = 1 + trial % 12;
    for (int step = 0; step < len; ++step) {
      const int k = pick(rng);
      cur = cur.flip(k).triangulation;
      m = mutate_matrix(m, k);
      REQUIRE(cur.quiver() == m);
    }
  }
}

TEST_CASE("flip is an involution") {
  AnnulusTriangulation t = AnnulusTriangulation::initial(3, 2);
  t = t.flip(1).triangulation;  // move off the initial configuration
  for (int slot = 0; slot < 5; ++slot) {
    const auto once = t.flip(slot);
    const auto twice = once.triangulation.flip(slot);
    CHECK(twice.triangulation.arcs() == t.arcs());
    CHECK(once.removed == twice.added);
  }
}

TEST_CASE("arc variables classify correctly") {
  AFamilies a32(3, 2);

  // initial crossing arcs carry the initial variables, slot by slot
  const auto t = AnnulusTriangulation::initial(3, 2);
  for (int slot = 0; slot < 5; ++slot)
    CHECK(arc_variable(t.arcs()[slot], a32) == LaurentPoly::variable(5, slot));

  // bottom arcs over one gap carry J, the widest carry the deepest continuant
  for (long j = 0; j < 3; ++j) {
    CHECK(arc_variable(PeripheralArc{true, j, 1}, a32) == a32.j.value(j * 2));
    CHECK(arc_variable(PeripheralArc{true, j, 2}, a32) == continuant(a32.j, 2, 2, j * 2));
  }
  CHECK(arc_variable(PeripheralArc{false, 0, 1}, a32) == a32.jtilde.value(-2 * 3));

  // crossing index is deck invariant
  CHECK(crossing_index(CrossingArc{1, -1}, 3, 2) == 5);
  CHECK(crossing_index(CrossingArc{4, 1}, 3, 2) == 5);
}

TEST_CASE("flips realise seed mutation through the Ptolemy relation") {
  AFamilies a21(2, 1);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, 2);
  AnnulusTriangulation t = AnnulusTriangulation::initial(2, 1);
  Seed seed = initial_seed(build_a_matrix(2, 1));
  for (int step = 0; step < 20; ++step) {
    const int k = pick(rng);
    CHECK(ptolemy_check(t, k, a21).passed);
    const auto flipped = t.flip(k);
    seed = mutate_seed(seed, k);
    REQUIRE(arc_variable(flipped.added, a21) == seed.vars[k]);
    t = std::move(flipped.triangulation);
  }
}

TEST_CASE("deeper flips on the 5-point annulus stay consistent") {
  AFamilies a32(3, 2);
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> pick(0, 4);
  AnnulusTriangulation t = AnnulusTriangulation::initial(3, 2);
  Seed seed = initial_seed(build_a_matrix(3, 2));
  bool saw_peripheral = false;
  for (int step = 0; step < 20; ++step) {
    const int k = pick(rng);
    const auto flipped = t.flip(k);
    seed = mutate_seed(seed, k);
    REQUIRE(arc_variable(flipped.added, a32) == seed.vars[k]);
    saw_peripheral |= std::holds_alternative<PeripheralArc>(flipped.added);
    t = std::move(flipped.triangulation);
  }
  CHECK(saw_peripheral);  // the walk must exercise the continuant families
}

TEST_CASE("peripheral quadrilaterals satisfy the continuant recurrence") {
  // the quadrilateral with diagonals D^{l-1}(J_{jp}) and J_{(j+l-2)p}:
  // D^{l-2}(J_{jp}) * J_{(j+l-2)p} == D^{l-3}(J_{jp}) + D^{l-1}(J_{jp})
  AFamilies a43(4, 3);
  for (long j = 0; j < 4; ++j)
    for (int l = 3; l <= 4; ++l) {
      const LaurentPoly lhs =
          continuant(a43.j, 3, l - 2, j * 3) * a43.j.value((j + l - 2) * 3);
      const LaurentPoly rhs =
          continuant(a43.j, 3, l - 3, j * 3) + continuant(a43.j, 3, l - 1, j * 3);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("triangulation json round-trips") {
  AnnulusTriangulation t = AnnulusTriangulation::initial(3, 2).flip(1).triangulation;
  const auto j = t.to_json();
  CHECK(j["q"] == 3);
  const auto back = AnnulusTriangulation::from_json(j);
  CHECK(back.arcs() == t.arcs());
  CHECK_THROWS(AnnulusTriangulation::from_json(nlohmann::json{{"q", 2}, {"p", 1}, {"arcs", {{{"kind", "bogus"}}}}}));
}

TEST_CASE("twice-punctured disk arc families") {
  DFamilies d5(5);
  for (long j = 0; j <= 2; ++j)
    CHECK(d_enclosing_arc_value(d5, j, 1) == d5.jprime.value(j));
  CHECK(d_enclosing_arc_value(d5, 0, 2) == continuant(d5.jprime, 1, 2, 0));
  CHECK_THROWS_AS(d_enclosing_arc_value(d5, 0, 3), std::out_of_range);  // span N-2 rejected
  CHECK_THROWS_AS(d_enclosing_arc_value(d5, 0, 0), std::out_of_range);

  const DArcCounts counts = count_d_arcs(5, -1, 1);
  CHECK(counts.enclosing == 6);  // (N-2)(N-3)
  CHECK(counts.exceptional == 3);
  CHECK(counts.splitting == 27);
  CHECK(counts.punctured == 9);
  CHECK_THROWS_AS(count_d_arcs(3, 0, 0), UnsupportedError);
}
