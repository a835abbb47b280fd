#pragma once

#include "doctest.h"
#include "fano/constructions.hpp"
#include "fano/polytope.hpp"

namespace fano::fixtures {

// Skew bipyramid over the pentagon with apices e3 and e1-e3; the vertex sum
// is e1+e2 and its two special facets are conv{e1,e2,e3} and conv{e1,e2,e1-e3}.
inline LatticePolytope example_a() {
  return LatticePolytope::from_rows({{1, 0, 0},
                                     {0, 1, 0},
                                     {0, 0, 1},
                                     {1, -1, 0},
                                     {-1, 1, 0},
                                     {1, 0, -1},
                                     {-1, 0, 0}});
}

// Smooth Fano 4-polytope with vanishing vertex sum; all 24 facets are
// special and the eta vector depends on the facet.
inline LatticePolytope example_b() {
  return LatticePolytope::from_rows({{1, 0, 0, 0},
                                     {0, 1, 0, 0},
                                     {0, 0, 1, 0},
                                     {0, 0, 0, 1},
                                     {1, -1, 0, 0},
                                     {-1, 1, 0, 0},
                                     {-1, 0, 0, 0},
                                     {0, -1, 0, 0},
                                     {1, -1, -1, 0},
                                     {-1, 1, 0, -1}});
}

// Non-terminal (and non-reflexive) summand for preservation tests.
inline LatticePolytope stretched_cross() {
  return LatticePolytope::from_rows({{1, 0}, {-1, 0}, {0, 2}, {0, -2}});
}

// Non-reflexive interval.
inline LatticePolytope wide_segment() {
  return LatticePolytope::from_rows({{2}, {-2}});
}

inline int facet_with_vertices(const LatticePolytope& p,
                               std::initializer_list<std::initializer_list<long>> verts) {
  std::vector<Index> want;
  for (const auto& row : verts) {
    IVec v(static_cast<Index>(row.size()));
    Index i = 0;
    for (long e : row) v(i++) = e;
    auto id = p.find_vertex(v);
    REQUIRE_MESSAGE(id.has_value(), "fixture vertex not found");
    want.push_back(*id);
  }
  std::sort(want.begin(), want.end());
  const auto& fs = p.facets().facets;
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    if (fs[f].vertex_indices == want) return f;
  REQUIRE_MESSAGE(false, "no facet with the requested vertex set");
  return -1;
}

}  // namespace fano::fixtures
