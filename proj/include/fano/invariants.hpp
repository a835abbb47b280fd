#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/polytope.hpp"

namespace fano {

IVec vertex_sum(const LatticePolytope& p);

// Facets whose cone contains the vertex sum, i.e. the barycentric coordinates
// of v_P with respect to the facet's vertices are all nonnegative. Boundary
// cases (a zero coordinate) are included. The face fan is complete, so the
// result is never empty.
std::vector<int> special_facets(const LatticePolytope& p);

// Level histogram of the vertices with respect to a facet. counts[k] is the
// number of vertices v with <u_F, v> = k; zero counts are omitted.
struct EtaVector {
  std::map<Int, Int, std::greater<Int>> counts;
  Index dim = 0;

  Int at(const Int& level) const {
    auto it = counts.find(level);
    return it == counts.end() ? Int(0) : it->second;
  }
  Int total() const;
  Int min_level() const;  // lowest level carrying a vertex
  // Rendered from level 1 downward with trailing zeros trimmed, e.g. "(4,3,2,1)".
  std::string str() const;

  bool operator==(const EtaVector& o) const { return counts == o.counts; }
  bool operator!=(const EtaVector& o) const { return !(*this == o); }
  bool operator<(const EtaVector& o) const;
};

EtaVector make_eta(Index dim, std::initializer_list<long> from_level_one_down);

EtaVector eta_vector(const LatticePolytope& p, int facet_id);  // requires reflexive

// The common level of the vertex sum over all special facets. Equality across
// the special facets is asserted, not assumed.
Int eccentricity(const LatticePolytope& p);  // requires simplicial and reflexive

// Dual basis data of a simplicial facet: for the k-th listed vertex v of F,
// vertex_normals.row(k) is the functional u_{F,v} with <u_{F,v}, v> = 1 and
// value 0 on the other facet vertices (rational in general), neighbor[k] is
// the facet across the ridge F minus v, and opposite[k] the vertex completing
// that neighbor.
struct FacetFrame {
  int facet_id = -1;
  QMat vertex_normals;
  std::vector<int> neighbor;
  std::vector<Index> opposite;
};

FacetFrame frame(const LatticePolytope& p, int facet_id);

// phi maps the k-th vertex v of F to the facet vertex opp(F,v) + v when that
// point is a vertex of F, and to nothing ("zero") otherwise.
struct PhiMap {
  int facet_id = -1;
  std::vector<std::optional<Index>> image;  // global vertex ids
};

PhiMap phi(const LatticePolytope& p, int facet_id);

// v is good for F when opp(F,v) lies at level 0 and <u_{F,v}, opp(F,v)> = -1.
bool is_good(const LatticePolytope& p, int facet_id, Index vertex_id);

// Two boundary lattice points are distant when no facet contains both; faces
// of lower dimension reduce to the facet test.
bool are_distant(const LatticePolytope& p, const IVec& x, const IVec& y);

// All eta vectors compatible with n = 3d-2: eta_1 = d, integer counts, and
// the three constraints  0 <= d + sum_{k<=-1} k*eta_k,  d-2 <= eta_0 <= d,
// d-2 <= sum_{k<=-1} eta_k <= d. Sorted deterministically.
std::vector<EtaVector> admissible_eta_vectors(Index d, Index n);

enum class LemmaStatus { pass, fail, skip };

struct LemmaCheck {
  std::string id;
  LemmaStatus status = LemmaStatus::skip;
  long instances = 0;   // hypothesis instances that were verified
  long skipped = 0;     // instances skipped (e.g. no unimodular facet basis)
  std::string witness;  // populated on failure
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == LemmaStatus::fail) return false;
    return true;
  }
};

// Checks the structural lemmas on every facet of a simplicial terminal
// reflexive polytope: the normal-transfer identity and vertex-normal bound,
// the level-zero results (adjacency, opposite-sign criterion, uniqueness
// implies distant, every level-0 vertex is opposite to a facet vertex), the
// lattice-basis criterion from good vertices, the phi involution, the
// coordinate formula, the no-two-negative restriction, the level counts at
// eta_0 = d, and the classification of V(F,0) and V(F,-1) on special facets.
LemmaReport check_structure_lemmas(const LatticePolytope& p);

const char* to_string(LemmaStatus s);

}  // namespace fano
