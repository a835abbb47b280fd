#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fano/exact.hpp"
#include "fano/types.hpp"

namespace fano {

// One facet of a full-dimensional lattice polytope: <normal, x> <= rhs is
// valid on the polytope and tight exactly on the facet. The normal is
// primitive; for a reflexive polytope rhs == 1 on every facet.
struct Facet {
  std::vector<Index> vertex_indices;  // ascending
  IVec normal;
  Int rhs;
};

struct FacetStructure {
  std::vector<Facet> facets;
  bool simplicial = false;
  // neighbor[f][k] is the facet across the ridge spanned by facet f minus its
  // k-th listed vertex. Populated only when the polytope is simplicial.
  std::vector<std::vector<int>> neighbor;
};

// Complete facet enumeration of a full-dimensional point configuration.
// Every d-subset spanning a supporting hyperplane contributes; coplanar
// supporting hyperplanes are merged into a single facet. Facets are sorted by
// (normal, rhs) lexicographically, so the result is deterministic.
// Throws PreconditionError naming a witness hyperplane if the points are not
// full-dimensional.
FacetStructure enumerate_facets(const IMat& points);

// Non-throwing variant; nullopt when the points are not full-dimensional.
std::optional<FacetStructure> try_enumerate_facets(const IMat& points);

// A full-dimensional lattice polytope given by its vertices (matrix rows).
// Construction validates the vertex list exactly: duplicates and points that
// are not vertices of the hull are rejected. Immutable afterwards; all
// queries are pure, so concurrent use is safe.
class LatticePolytope {
 public:
  LatticePolytope(Index dim, IMat vertices);

  static LatticePolytope from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    IMat m = imat(rows);
    const Index d = m.cols();
    return LatticePolytope(d, std::move(m));
  }

  Index dim() const { return dim_; }
  Index vertex_count() const { return vertices_.rows(); }
  const IMat& vertices() const { return vertices_; }
  IVec vertex(Index i) const { return vertices_.row(i).transpose(); }
  std::optional<Index> find_vertex(const IVec& v) const;
  const FacetStructure& facets() const { return *facets_; }
  const Facet& facet(int f) const;

  // Vertex sets equal as sets (order-insensitive).
  bool same_vertex_set(const LatticePolytope& other) const;

 private:
  LatticePolytope(Index dim, IMat vertices, FacetStructure precomputed);

  Index dim_;
  IMat vertices_;
  std::shared_ptr<const FacetStructure> facets_;

  friend LatticePolytope polar_dual(const LatticePolytope&);
};

inline Int level_of(const Facet& f, const IVec& x) { return f.normal.dot(x); }
inline bool on_facet(const Facet& f, const IVec& x) { return level_of(f, x) == f.rhs; }

bool contains(const LatticePolytope& p, const IVec& x);
bool on_boundary(const LatticePolytope& p, const IVec& x);

bool contains_origin_interior(const LatticePolytope& p);
bool is_simplicial(const LatticePolytope& p);

// True iff every facet inequality has right-hand side 1 (with primitive
// normal); equivalently the polar polytope is again a lattice polytope.
// Requires the origin in the interior.
bool is_reflexive(const LatticePolytope& p);

// All lattice points of p, in lexicographic order.
std::vector<IVec> lattice_points(const LatticePolytope& p);

bool is_terminal(const LatticePolytope& p);   // lattice points = vertices + 0
bool is_canonical(const LatticePolytope& p);  // 0 is the only interior lattice point

// Origin interior, simplicial, and every facet's vertices form a lattice
// basis. This implies terminal and reflexive; both are re-checked and an
// InconsistencyError is raised if they were to fail.
bool is_smooth_fano(const LatticePolytope& p);

bool is_pseudo_symmetric(const LatticePolytope& p);   // some facet F with -F a facet
bool is_centrally_symmetric(const LatticePolytope& p);

// Polar dual of a reflexive polytope. The dual's vertices are the facet
// normals of p and its facets are read off the vertices of p directly, so no
// hull computation is performed.
LatticePolytope polar_dual(const LatticePolytope& p);

// d x d matrix whose rows are the vertices of a simplicial facet.
IMat facet_vertex_matrix(const LatticePolytope& p, int f);

}  // namespace fano
