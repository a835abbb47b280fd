#pragma once

#include "fano/polytope.hpp"

namespace fano {

// Lexicographically minimal sorted vertex matrix over all unimodular
// re-coordinatizations that send some facet basis to the standard basis,
// composed with all coordinate permutations. Lattice-equivalent polytopes
// (in the supported class) get equal canonical forms, and conversely.
struct CanonicalForm {
  IMat matrix;
  int basis_facet = -1;

  // Row-major serialization; usable as a class id in catalog exports.
  std::string key() const;

  bool operator==(const CanonicalForm& o) const { return compare_lex(matrix, o.matrix) == 0; }
  bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
  bool operator<(const CanonicalForm& o) const { return compare_lex(matrix, o.matrix) < 0; }
};

// Requires at least one simplicial facet whose vertex matrix is unimodular
// (every smooth Fano polytope qualifies); throws PreconditionError otherwise.
CanonicalForm canonical_form(const LatticePolytope& p);

bool are_equivalent(const LatticePolytope& p, const LatticePolytope& q);

// Finest decomposition of p as a direct sum, found by re-coordinatizing over
// a unimodular facet basis and splitting the coordinates into connected
// components of shared vertex support. Returns the summands in canonical
// order; a singleton list means indecomposable.
std::vector<LatticePolytope> decompose_direct_sum(const LatticePolytope& p);

}  // namespace fano
