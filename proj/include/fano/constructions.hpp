#pragma once

#include "fano/polytope.hpp"

namespace fano {

// The five terminal reflexive polygons, with the coordinates fixed once and
// for all:
//   P3  = {e1, e2, -e1-e2}
//   P4a = {+-e1, +-e2}
//   P4b = {e1, e2, -e1, e1-e2}
//   P5  = {+-e1, e2, +-(e1-e2)}
//   P6  = {+-e1, +-e2, +-(e2-e1)}
enum class PolygonKind { P3, P4a, P4b, P5, P6 };

LatticePolytope segment();  // conv{-1, +1} in Z^1
LatticePolytope polygon(PolygonKind kind);
LatticePolytope cross_polytope(Index d);

// conv{+-e1, ..., +-ed, +-(1,...,1)}; only simplicial when d is even.
LatticePolytope del_pezzo(Index d);
// Same with -(1,...,1) removed.
LatticePolytope pseudo_del_pezzo(Index d);

// Vertices of P6 in cyclic order: v1 = e1, v2 = e2, v3 = e2-e1, v4 = -e1,
// v5 = -e2, v6 = e1-e2.
IVec hexagon_vertex(int k);
// Vertices of P5 in cyclic order, w1 = e2 being the unique vertex whose
// negative is not a vertex: w2 = e2-e1, w3 = -e1, w4 = e1-e2, w5 = e1.
IVec pentagon_vertex(int k);

// conv(P u Q) with P embedded in the first dim(P) coordinates. Both summands
// must contain the origin in their (relative) interiors.
LatticePolytope direct_sum(const LatticePolytope& p, const LatticePolytope& q);

// Apex offset of a bipyramid: either zero (proper bipyramid) or a vertex of
// the base (skew bipyramid).
struct ApexSpec {
  static ApexSpec zero() { return ApexSpec{}; }
  static ApexSpec at(IVec base_vertex) {
    ApexSpec a;
    a.vertex = std::move(base_vertex);
    return a;
  }
  bool is_zero() const { return !vertex.has_value(); }
  std::optional<IVec> vertex;
};

// Embeds the base in the first d-1 coordinates and adds the apices e_d and
// -e_d + v. The segment between the apices must meet the base's relative
// interior; this is verified exactly rather than assumed.
LatticePolytope bipyramid(const LatticePolytope& base, const ApexSpec& apex);

}  // namespace fano
