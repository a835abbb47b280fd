#pragma once

#include "fano/equivalence.hpp"
#include "fano/invariants.hpp"
#include "fano/polytope.hpp"

namespace fano {

// Construction provenance of a catalog entry: a direct sum of named building
// blocks ("P5", "P6", "DP4"), wrapped in zero or more bipyramid layers applied
// innermost first. Apex names: "0" for a proper layer, "x" for the apex added
// by the previous layer, "v<k>" / "v<k>'" for a vertex of the first / second
// hexagon summand, "w<k>" for a pentagon vertex. An empty summand list starts
// from the one-point polytope, so the first layer must be proper and yields
// the segment.
struct Recipe {
  std::vector<std::string> summands;
  std::vector<std::string> apexes;

  std::string label() const;
  LatticePolytope build() const;
};

struct CatalogEntry {
  LatticePolytope polytope;
  Recipe recipe;
  CanonicalForm class_id;
};

// n = 3d: one class (P6^(d/2)) for even d, none for odd d.
std::vector<CatalogEntry> catalog_3d(Index d);

// n = 3d-1: P5 + P6^(d/2-1) for even d; the proper and the skew bipyramid
// over P6^((d-1)/2) for odd d >= 3; the segment for d = 1.
std::vector<CatalogEntry> catalog_3d_minus_1(Index d);

// n = 3d-2: generates every candidate recipe, deduplicates by canonical form
// and asserts the expected class counts (2, 2, 10, 5 for d = 2, 3, 4, odd
// d >= 5 and 11 for even d >= 6); a count mismatch raises InconsistencyError
// naming the colliding recipes.
std::vector<CatalogEntry> catalog_3d_minus_2(Index d);

struct VerifyLine {
  std::string check;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  Index dim = 0;
  Index vertices = 0;
  std::size_t classes = 0;
  std::vector<VerifyLine> lines;
  bool passed() const {
    for (const auto& l : lines)
      if (!l.passed) return false;
    return true;
  }
};

// Checks every entry of the catalog at (d, n): dimension and vertex count,
// smoothness and the simplicial/terminal/reflexive predicates, eccentricity
// in {0,1,2}, admissible eta vectors on special facets with (d,d,d-3,0,1)
// absent (n = 3d-2 only), pairwise inequivalence, recipe round-trips, and the
// structure lemma suite.
VerifyReport verify_catalog(Index d, Index n);

struct OracleResult {
  long candidates = 0;  // subsets scanned
  long str_hits = 0;    // simplicial terminal reflexive configurations found
  std::vector<CanonicalForm> classes;
};

// Exhaustive bounded-box classification: scans every size-(3d-2) subset of
// {-1,0,1}^d minus the origin, keeps the simplicial terminal reflexive ones
// and deduplicates by canonical form. Supported for d <= 3.
OracleResult exhaustive_box_classification(Index d);

}  // namespace fano
