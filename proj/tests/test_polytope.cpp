#include <algorithm>
#include <set>

#include "doctest.h"
#include "fano/constructions.hpp"
#include "fano/polytope.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fano;

TEST_CASE("constructor hygiene") {
  CHECK_THROWS_WITH_AS(LatticePolytope::from_rows({{1, 0}, {0, 1}, {1, 0}}),
                       doctest::Contains("duplicates"), PreconditionError);
  // midpoint of two vertices is not a vertex
  CHECK_THROWS_WITH_AS(LatticePolytope::from_rows({{2, 0}, {0, 2}, {-1, -1}, {1, 1}}),
                       doctest::Contains("not a vertex"), PreconditionError);
  // all points on a line: witness hyperplane reported
  CHECK_THROWS_WITH_AS(LatticePolytope::from_rows({{1, 0}, {-1, 0}, {2, 0}}),
                       doctest::Contains("not full-dimensional"), PreconditionError);
}

TEST_CASE("facets of the hexagon") {
  LatticePolytope p6 = polygon(PolygonKind::P6);
  const auto& fs = p6.facets();
  CHECK(fs.facets.size() == 6);
  for (const Facet& f : fs.facets) {
    CHECK(f.vertex_indices.size() == 2);
    CHECK(f.rhs == 1);
    CHECK(vector_gcd(f.normal) == 1);
  }
  CHECK(fs.simplicial);
}

TEST_CASE("facets of the skew bipyramid over the pentagon") {
  LatticePolytope a = fixtures::example_a();
  const auto& fs = a.facets();
  CHECK(fs.facets.size() == 10);
  auto e1 = *a.find_vertex(ivec({1, 0, 0}));
  auto e2 = *a.find_vertex(ivec({0, 1, 0}));
  int with_both = 0;
  for (const Facet& f : fs.facets) {
    bool has1 = std::count(f.vertex_indices.begin(), f.vertex_indices.end(), e1) > 0;
    bool has2 = std::count(f.vertex_indices.begin(), f.vertex_indices.end(), e2) > 0;
    if (has1 && has2) ++with_both;
  }
  CHECK(with_both == 2);
}

TEST_CASE("a facet with seven vertices in dimension six") {
  // 6-dimensional configuration whose hull is not simplicial.
  IMat pts = imat({{1, 0, 0, 0, 0, 0},
                   {0, 1, 0, 0, 0, 0},
                   {0, 0, 1, 0, 0, 0},
                   {0, 0, 0, 1, 0, 0},
                   {0, 0, 0, 0, 1, 0},
                   {0, 0, 0, 0, 0, 1},
                   {1, 0, 0, -1, 0, 0},
                   {-1, 0, 0, 1, 0, 0},
                   {0, 1, 0, 0, -1, 0},
                   {0, -1, 0, 0, 1, 0},
                   {0, 0, 1, 0, 0, -1},
                   {0, 0, -1, 0, 0, 1},
                   {-1, 0, 0, 0, 0, 0},
                   {0, -1, 0, 0, 0, 0},
                   {0, 0, -1, 0, 0, 0},
                   {0, 0, 0, -1, -1, -1}});
  FacetStructure fs = enumerate_facets(pts);
  IVec u = ivec({1, 1, -1, 0, 1, -2});
  bool found = false;
  for (const Facet& f : fs.facets)
    if (f.normal == u || f.normal == IVec(-u)) {
      found = true;
      CHECK(f.vertex_indices.size() == 7);
    }
  CHECK(found);
  CHECK_FALSE(fs.simplicial);
}

TEST_CASE("contains_origin_interior") {
  CHECK(contains_origin_interior(polygon(PolygonKind::P6)));
  LatticePolytope boundary_origin =
      LatticePolytope::from_rows({{1, 0}, {0, 1}, {1, -1}, {-1, 1}});
  CHECK_FALSE(contains_origin_interior(boundary_origin));
  CHECK(contains_origin_interior(segment()));
}

TEST_CASE("is_simplicial") {
  CHECK(is_simplicial(polygon(PolygonKind::P6)));
  CHECK(is_simplicial(cross_polytope(3)));
  // 4-dimensional configuration with a non-simplex facet induced by (-1,-2,0,1)
  IMat pts = imat({{1, 0, 0, 0},
                   {0, 1, 0, 0},
                   {0, 0, 1, 0},
                   {0, 0, 0, 1},
                   {1, -1, 0, 0},
                   {-1, 1, 0, 0},
                   {0, 0, 1, -1},
                   {0, 0, -1, 1},
                   {-1, 0, 0, 0},
                   {0, -1, -1, -1}});
  FacetStructure fs = enumerate_facets(pts);
  CHECK_FALSE(fs.simplicial);
  IVec u = ivec({-1, -2, 0, 1});
  bool found = false;
  for (const Facet& f : fs.facets)
    if (f.normal == u) {
      found = true;
      // not a simplex; it carries five vertices
      CHECK(f.vertex_indices.size() == 5);
    }
  CHECK(found);
}

TEST_CASE("is_reflexive") {
  CHECK(is_reflexive(polygon(PolygonKind::P6)));
  CHECK_FALSE(is_reflexive(fixtures::wide_segment()));
  // 3-dimensional configuration that fails reflexivity: three facets have
  // right-hand side 3, e.g. (1,-2,-2)
  IMat pts = imat({{1, 0, 0},
                   {0, 1, 0},
                   {0, 0, 1},
                   {1, -1, 0},
                   {-1, 1, 0},
                   {0, 1, -1},
                   {0, -1, 1},
                   {-1, 0, 1},
                   {1, 0, -1},
                   {-1, -1, -1}});
  LatticePolytope q(3, pts);
  CHECK_FALSE(is_reflexive(q));
  bool found = false;
  for (const Facet& f : q.facets().facets)
    if (f.normal == ivec({1, -2, -2})) {
      found = true;
      CHECK(f.rhs == 3);
      CHECK(f.vertex_indices.size() == 3);
    }
  CHECK(found);
  LatticePolytope boundary_origin =
      LatticePolytope::from_rows({{1, 0}, {0, 1}, {1, -1}, {-1, 1}});
  CHECK_THROWS_AS(is_reflexive(boundary_origin), PreconditionError);
}

TEST_CASE("polar duality") {
  LatticePolytope cross = cross_polytope(3);
  LatticePolytope cube = polar_dual(cross);
  CHECK(cube.vertex_count() == 8);
  std::set<std::vector<Int>> want;
  for (int s = 0; s < 8; ++s)
    want.insert({Int(s & 1 ? 1 : -1), Int(s & 2 ? 1 : -1), Int(s & 4 ? 1 : -1)});
  std::set<std::vector<Int>> got;
  for (Index i = 0; i < 8; ++i) {
    IVec v = cube.vertex(i);
    got.insert({v(0), v(1), v(2)});
  }
  CHECK(got == want);

  LatticePolytope p6 = polygon(PolygonKind::P6);
  CHECK(polar_dual(polar_dual(p6)).same_vertex_set(p6));
  LatticePolytope a = fixtures::example_a();
  CHECK(polar_dual(polar_dual(a)).same_vertex_set(a));
  CHECK_THROWS_AS(polar_dual(fixtures::wide_segment()), PreconditionError);
}

TEST_CASE("polar of a direct sum is the product of polars") {
  LatticePolytope p6 = polygon(PolygonKind::P6);
  LatticePolytope sum = direct_sum(p6, p6);
  LatticePolytope dual = polar_dual(sum);
  LatticePolytope hex_dual = polar_dual(p6);
  IMat prod(hex_dual.vertex_count() * hex_dual.vertex_count(), 4);
  Index r = 0;
  for (Index i = 0; i < hex_dual.vertex_count(); ++i)
    for (Index j = 0; j < hex_dual.vertex_count(); ++j) {
      prod.block(r, 0, 1, 2) = hex_dual.vertices().row(i);
      prod.block(r, 2, 1, 2) = hex_dual.vertices().row(j);
      ++r;
    }
  CHECK(dual.same_vertex_set(LatticePolytope(4, prod)));
}

TEST_CASE("lattice_points") {
  LatticePolytope p6 = polygon(PolygonKind::P6);
  CHECK(lattice_points(p6).size() == 7);
  CHECK(lattice_points(fixtures::wide_segment()).size() == 5);
  LatticePolytope p3 = polygon(PolygonKind::P3);
  CHECK(lattice_points(p3).size() == 4);
  // agree with a direct scan of the bounding box
  CHECK(oracles::lattice_points_by_scan(p3) == lattice_points(p3));
  CHECK(oracles::lattice_points_by_scan(p6) == lattice_points(p6));
}

TEST_CASE("terminal and canonical") {
  CHECK(is_terminal(polygon(PolygonKind::P6)));
  CHECK(is_canonical(polygon(PolygonKind::P6)));
  CHECK_FALSE(is_terminal(fixtures::stretched_cross()));
  CHECK(is_terminal(del_pezzo(4)));
  CHECK(is_terminal(fixtures::example_a()));
  CHECK(is_terminal(fixtures::example_b()));
}

TEST_CASE("is_smooth_fano") {
  CHECK(is_smooth_fano(polygon(PolygonKind::P5)));
  CHECK(is_smooth_fano(fixtures::example_b()));
  // facet conv{e1, -e1-2e2} has determinant -2
  LatticePolytope q = LatticePolytope::from_rows({{1, 0}, {0, 1}, {-1, -2}});
  CHECK(determinant<Int>(imat({{1, 0}, {-1, -2}})) == -2);
  CHECK_FALSE(is_smooth_fano(q));
  CHECK_FALSE(is_smooth_fano(fixtures::wide_segment()));
}

TEST_CASE("symmetry predicates") {
  CHECK(is_pseudo_symmetric(cross_polytope(2)));
  CHECK(is_centrally_symmetric(cross_polytope(2)));
  CHECK_FALSE(is_pseudo_symmetric(polygon(PolygonKind::P4b)));
  CHECK_FALSE(is_centrally_symmetric(polygon(PolygonKind::P4b)));
  CHECK(is_centrally_symmetric(del_pezzo(4)));
  CHECK(is_pseudo_symmetric(del_pezzo(4)));
  CHECK(is_pseudo_symmetric(pseudo_del_pezzo(4)));
  CHECK_FALSE(is_centrally_symmetric(pseudo_del_pezzo(4)));
}

TEST_CASE("facet structure invariants on fixtures") {
  auto check_invariants = [](const LatticePolytope& p) {
    for (Index v = 0; v < p.vertex_count(); ++v) {
      Index incident = 0;
      for (const Facet& f : p.facets().facets) {
        Int lv = level_of(f, p.vertex(v));
        CHECK(lv <= f.rhs);
        bool listed = std::binary_search(f.vertex_indices.begin(),
                                         f.vertex_indices.end(), v);
        CHECK((lv == f.rhs) == listed);
        if (listed) ++incident;
      }
      CHECK(incident >= p.dim());
    }
    for (const Facet& f : p.facets().facets) CHECK(vector_gcd(f.normal) == 1);
  };
  check_invariants(polygon(PolygonKind::P4b));
  check_invariants(fixtures::example_a());
  check_invariants(fixtures::example_b());
  check_invariants(del_pezzo(4));
  check_invariants(cross_polytope(4));
}

TEST_CASE("facet enumeration agrees with the row-reduction oracle") {
  auto check = [](const LatticePolytope& p) {
    CHECK(oracles::facets_by_row_reduction(p.vertices()) ==
          oracles::facet_summary(p.facets()));
  };
  check(segment());
  check(polygon(PolygonKind::P3));
  check(polygon(PolygonKind::P4a));
  check(polygon(PolygonKind::P4b));
  check(polygon(PolygonKind::P5));
  check(polygon(PolygonKind::P6));
  check(cross_polytope(3));
  check(fixtures::example_a());
  check(fixtures::example_b());
  check(del_pezzo(4));
  check(fixtures::stretched_cross());
}

TEST_CASE("facets of the skew bipyramid match the hand-computed list") {
  // All ten facet normals of example A; u_F = (1,1,1) and u_G = (1,1,0) are
  // the two special ones.
  LatticePolytope a = fixtures::example_a();
  std::set<std::vector<Int>> got;
  for (const Facet& f : a.facets().facets) {
    CHECK(f.rhs == 1);
    got.insert({f.normal(0), f.normal(1), f.normal(2)});
  }
  CHECK(got.count({1, 1, 1}) == 1);
  CHECK(got.count({1, 1, 0}) == 1);
  CHECK(got.size() == 10);
}
