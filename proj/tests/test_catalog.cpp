#include <chrono>
#include <set>

#include "doctest.h"
#include "fano/catalog.hpp"
#include "fano/constructions.hpp"
#include "fixtures.hpp"

using namespace fano;

TEST_CASE("catalog at 3d vertices") {
  auto c2 = catalog_3d(2);
  REQUIRE(c2.size() == 1);
  CHECK(are_equivalent(c2[0].polytope, polygon(PolygonKind::P6)));
  CHECK(catalog_3d(3).empty());
  auto c4 = catalog_3d(4);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].polytope.vertex_count() == 12);
  CHECK(is_smooth_fano(c4[0].polytope));
}

TEST_CASE("catalog at 3d-1 vertices") {
  auto c1 = catalog_3d_minus_1(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].polytope.same_vertex_set(segment()));

  auto c2 = catalog_3d_minus_1(2);
  REQUIRE(c2.size() == 1);
  CHECK(are_equivalent(c2[0].polytope, polygon(PolygonKind::P5)));

  auto c3 = catalog_3d_minus_1(3);
  REQUIRE(c3.size() == 2);
  LatticePolytope proper = bipyramid(polygon(PolygonKind::P6), ApexSpec::zero());
  LatticePolytope skew =
      bipyramid(polygon(PolygonKind::P6), ApexSpec::at(hexagon_vertex(1)));
  CHECK((are_equivalent(c3[0].polytope, proper) || are_equivalent(c3[1].polytope, proper)));
  CHECK((are_equivalent(c3[0].polytope, skew) || are_equivalent(c3[1].polytope, skew)));
  CHECK_FALSE(are_equivalent(c3[0].polytope, c3[1].polytope));

  auto c4 = catalog_3d_minus_1(4);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].polytope.vertex_count() == 11);
}

TEST_CASE("catalog counts at 3d-2 vertices up to dimension five") {
  CHECK(catalog_3d_minus_2(1).empty());
  CHECK(catalog_3d_minus_2(2).size() == 2);
  // four classes, not two: the bipyramids over P5 with apex offsets
  // 0, w1, w2, w3 are pairwise inequivalent (their eta multisets differ),
  // matching the count of smooth Fano 3-polytopes with seven vertices
  CHECK(catalog_3d_minus_2(3).size() == 4);
  CHECK(catalog_3d_minus_2(4).size() == 10);
  CHECK(catalog_3d_minus_2(5).size() == 5);
}

TEST_CASE("the dimension-three classes are the four bipyramids over P5") {
  auto c3 = catalog_3d_minus_2(3);
  REQUIRE(c3.size() == 4);
  std::set<std::string> got;
  for (const auto& e : c3) got.insert(e.class_id.key());
  std::set<std::string> want;
  LatticePolytope p5 = polygon(PolygonKind::P5);
  want.insert(canonical_form(bipyramid(p5, ApexSpec::zero())).key());
  for (int k : {1, 2, 3})
    want.insert(canonical_form(bipyramid(p5, ApexSpec::at(pentagon_vertex(k)))).key());
  CHECK(got == want);
  // the reflection of the pentagon identifies w5 with w2 and w4 with w3
  CHECK(are_equivalent(bipyramid(p5, ApexSpec::at(pentagon_vertex(5))),
                       bipyramid(p5, ApexSpec::at(pentagon_vertex(2)))));
  CHECK(are_equivalent(bipyramid(p5, ApexSpec::at(pentagon_vertex(4))),
                       bipyramid(p5, ApexSpec::at(pentagon_vertex(3)))));
}

TEST_CASE("the planar catalog is P4a and P4b") {
  auto c2 = catalog_3d_minus_2(2);
  REQUIRE(c2.size() == 2);
  bool has_a = false, has_b = false;
  for (const auto& e : c2) {
    if (are_equivalent(e.polytope, polygon(PolygonKind::P4a))) has_a = true;
    if (are_equivalent(e.polytope, polygon(PolygonKind::P4b))) has_b = true;
  }
  CHECK(has_a);
  CHECK(has_b);
}

TEST_CASE("the running examples appear in their catalogs") {
  bool found_a = false;
  for (const auto& e : catalog_3d_minus_2(3))
    if (are_equivalent(e.polytope, fixtures::example_a())) found_a = true;
  CHECK(found_a);
  bool found_b = false;
  for (const auto& e : catalog_3d_minus_2(4))
    if (are_equivalent(e.polytope, fixtures::example_b())) found_b = true;
  CHECK(found_b);
}

TEST_CASE("recipes rebuild their polytopes exactly") {
  for (Index d : {2, 3, 4, 5}) {
    for (const auto& e : catalog_3d_minus_2(d)) {
      LatticePolytope rebuilt = e.recipe.build();
      CHECK(rebuilt.same_vertex_set(e.polytope));
      CHECK(canonical_form(rebuilt) == e.class_id);
    }
  }
}

TEST_CASE("every bipyramid entry has a base from the 3(d-1)-1 catalog") {
  for (Index d : {3, 4, 5}) {
    auto smaller = catalog_3d_minus_1(d - 1);
    for (const auto& e : catalog_3d_minus_2(d)) {
      if (e.recipe.apexes.empty()) continue;
      Recipe base_recipe = e.recipe;
      base_recipe.apexes.pop_back();
      LatticePolytope base = base_recipe.build();
      bool matches = false;
      for (const auto& s : smaller)
        if (are_equivalent(base, s.polytope)) matches = true;
      CHECK(matches);
    }
  }
}

TEST_CASE("direct-sum entries decompose according to their recipes") {
  for (Index d : {4, 5}) {
    for (const auto& e : catalog_3d_minus_2(d)) {
      if (!e.recipe.apexes.empty()) continue;
      auto parts = decompose_direct_sum(e.polytope);
      CHECK(parts.size() == e.recipe.summands.size());
    }
  }
}

TEST_CASE("apex choices beyond the listed ones collapse into known classes") {
  // the automorphism group of the hexagon acts sharply transitively on
  // adjacent vertex pairs, so other apex picks reproduce listed classes
  auto c4 = catalog_3d_minus_2(4);
  std::set<std::string> keys;
  for (const auto& e : c4) keys.insert(e.class_id.key());
  for (Recipe extra : {Recipe{{"P6"}, {"0", "v3"}}, Recipe{{"P6"}, {"v1", "v5"}},
                       Recipe{{"P6"}, {"v1", "v6"}}, Recipe{{"P6"}, {"v2", "v3"}}}) {
    CHECK(keys.count(canonical_form(extra.build()).key()) == 1);
  }
  auto c5 = catalog_3d_minus_2(5);
  std::set<std::string> keys5;
  for (const auto& e : c5) keys5.insert(e.class_id.key());
  for (Recipe extra : {Recipe{{"P5", "P6"}, {"w4"}}, Recipe{{"P5", "P6"}, {"w5"}},
                       Recipe{{"P5", "P6"}, {"v2"}}}) {
    CHECK(keys5.count(canonical_form(extra.build()).key()) == 1);
  }
}

TEST_CASE("verify_catalog passes in dimension four") {
  VerifyReport report = verify_catalog(4, 10);
  CHECK(report.classes == 10);
  for (const auto& line : report.lines) {
    INFO(line.check, " ", line.detail);
    CHECK(line.passed);
  }
  CHECK(report.passed());
}

TEST_CASE("verify_catalog covers the other vertex counts") {
  CHECK(verify_catalog(4, 12).passed());
  CHECK(verify_catalog(3, 8).passed());
  CHECK_THROWS_AS(verify_catalog(4, 9), PreconditionError);
}

TEST_CASE("exhaustive planar scan finds exactly the two classes") {
  OracleResult oracle = exhaustive_box_classification(2);
  CHECK(oracle.candidates == 70);  // C(8,4)
  REQUIRE(oracle.classes.size() == 2);
  std::set<std::string> got, want;
  for (const auto& c : oracle.classes) got.insert(c.key());
  for (const auto& e : catalog_3d_minus_2(2)) want.insert(e.class_id.key());
  CHECK(got == want);
  CHECK_THROWS_AS(exhaustive_box_classification(4), PreconditionError);
}
