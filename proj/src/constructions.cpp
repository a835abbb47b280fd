#include "fano/constructions.hpp"

namespace fano {

LatticePolytope segment() { return LatticePolytope::from_rows({{1}, {-1}}); }

LatticePolytope polygon(PolygonKind kind) {
  switch (kind) {
    case PolygonKind::P3:
      return LatticePolytope::from_rows({{1, 0}, {0, 1}, {-1, -1}});
    case PolygonKind::P4a:
      return LatticePolytope::from_rows({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    case PolygonKind::P4b:
      return LatticePolytope::from_rows({{1, 0}, {0, 1}, {-1, 0}, {1, -1}});
    case PolygonKind::P5:
      return LatticePolytope::from_rows({{1, 0}, {-1, 0}, {0, 1}, {1, -1}, {-1, 1}});
    case PolygonKind::P6:
      return LatticePolytope::from_rows(
          {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, 1}, {1, -1}});
  }
  throw PreconditionError("polygon: unknown kind");
}

LatticePolytope cross_polytope(Index d) {
  if (d < 1) throw PreconditionError("cross_polytope: dimension must be >= 1");
  IMat m = IMat::Zero(2 * d, d);
  for (Index i = 0; i < d; ++i) {
    m(2 * i, i) = 1;
    m(2 * i + 1, i) = -1;
  }
  return LatticePolytope(d, std::move(m));
}

namespace {

IMat del_pezzo_rows(Index d, bool with_negative_ones) {
  if (d < 2) throw PreconditionError("del_pezzo: dimension must be >= 2");
  if (d % 2 != 0)
    throw PreconditionError("del_pezzo: not simplicial in odd dimensions");
  const Index n = 2 * d + (with_negative_ones ? 2 : 1);
  IMat m = IMat::Zero(n, d);
  for (Index i = 0; i < d; ++i) {
    m(2 * i, i) = 1;
    m(2 * i + 1, i) = -1;
  }
  for (Index j = 0; j < d; ++j) m(2 * d, j) = 1;
  if (with_negative_ones)
    for (Index j = 0; j < d; ++j) m(2 * d + 1, j) = -1;
  return m;
}

}  // namespace

LatticePolytope del_pezzo(Index d) {
  return LatticePolytope(d, del_pezzo_rows(d, true));
}

LatticePolytope pseudo_del_pezzo(Index d) {
  return LatticePolytope(d, del_pezzo_rows(d, false));
}

IVec hexagon_vertex(int k) {
  switch (k) {
    case 1: return ivec({1, 0});
    case 2: return ivec({0, 1});
    case 3: return ivec({-1, 1});
    case 4: return ivec({-1, 0});
    case 5: return ivec({0, -1});
    case 6: return ivec({1, -1});
  }
  throw PreconditionError("hexagon_vertex: index must be in 1..6");
}

IVec pentagon_vertex(int k) {
  switch (k) {
    case 1: return ivec({0, 1});
    case 2: return ivec({-1, 1});
    case 3: return ivec({-1, 0});
    case 4: return ivec({1, -1});
    case 5: return ivec({1, 0});
  }
  throw PreconditionError("pentagon_vertex: index must be in 1..5");
}

LatticePolytope direct_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (!contains_origin_interior(p) || !contains_origin_interior(q))
    throw PreconditionError("direct_sum: a summand does not contain the origin "
                            "in its relative interior");
  const Index d = p.dim() + q.dim();
  IMat m = IMat::Zero(p.vertex_count() + q.vertex_count(), d);
  m.block(0, 0, p.vertex_count(), p.dim()) = p.vertices();
  m.block(p.vertex_count(), p.dim(), q.vertex_count(), q.dim()) = q.vertices();
  return LatticePolytope(d, std::move(m));
}

LatticePolytope bipyramid(const LatticePolytope& base, const ApexSpec& apex) {
  const Index dq = base.dim();
  IVec v = IVec::Zero(dq);
  if (!apex.is_zero()) {
    v = *apex.vertex;
    if (v.size() != dq || !base.find_vertex(v))
      throw PreconditionError("bipyramid: apex offset " + show(v) +
                              " is not a vertex of the base");
  }
  // The apex segment [e_d, -e_d + v] meets the base hyperplane in v/2, which
  // must lie in the base's relative interior.
  for (const Facet& f : base.facets().facets)
    if (f.normal.dot(v) >= 2 * f.rhs)
      throw PreconditionError("bipyramid: apex segment misses the base's "
                              "relative interior");
  const Index d = dq + 1;
  IMat m = IMat::Zero(base.vertex_count() + 2, d);
  m.block(0, 0, base.vertex_count(), dq) = base.vertices();
  m(base.vertex_count(), d - 1) = 1;
  m.block(base.vertex_count() + 1, 0, 1, dq) = v.transpose();
  m(base.vertex_count() + 1, d - 1) = -1;
  return LatticePolytope(d, std::move(m));
}

}  // namespace fano
