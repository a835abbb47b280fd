#include "fano/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fano {

namespace {

std::vector<int> unimodular_facets(const LatticePolytope& p) {
  std::vector<int> out;
  const int nf = static_cast<int>(p.facets().facets.size());
  for (int f = 0; f < nf; ++f) {
    if (static_cast<Index>(p.facet(f).vertex_indices.size()) != p.dim()) continue;
    Int det = determinant<Int>(facet_vertex_matrix(p, f));
    if (det == 1 || det == -1) out.push_back(f);
  }
  return out;
}

void sort_rows(IMat& m) {
  std::vector<Index> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    for (Index j = 0; j < m.cols(); ++j)
      if (m(a, j) != m(b, j)) return m(a, j) < m(b, j);
    return false;
  });
  IMat sorted(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) sorted.row(i) = m.row(order[i]);
  m = std::move(sorted);
}

}  // namespace

std::string CanonicalForm::key() const {
  std::ostringstream os;
  os << matrix.cols() << "x" << matrix.rows();
  for (Index i = 0; i < matrix.rows(); ++i)
    for (Index j = 0; j < matrix.cols(); ++j) os << " " << matrix(i, j);
  return os.str();
}

CanonicalForm canonical_form(const LatticePolytope& p) {
  const Index d = p.dim();
  const Index n = p.vertex_count();
  std::vector<int> bases = unimodular_facets(p);
  if (bases.empty())
    throw PreconditionError("canonical_form: no facet forms a lattice basis, "
                            "polytope is outside the supported class");
  CanonicalForm best;
  for (int f : bases) {
    // send the facet's vertices to the standard basis
    IMat to_std = unimodular_inverse(facet_vertex_matrix(p, f).transpose());
    IMat transformed = p.vertices() * to_std.transpose();
    std::vector<Index> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      IMat candidate(n, d);
      for (Index j = 0; j < d; ++j) candidate.col(j) = transformed.col(perm[j]);
      sort_rows(candidate);
      if (best.basis_facet < 0 || compare_lex(candidate, best.matrix) < 0) {
        best.matrix = std::move(candidate);
        best.basis_facet = f;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

bool are_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() != q.dim() || p.vertex_count() != q.vertex_count()) return false;
  return canonical_form(p) == canonical_form(q);
}

namespace {

struct CoordinateSplit {
  std::vector<std::vector<Index>> components;  // coordinate classes
};

// Union of coordinates sharing a vertex with nonzero entries at both.
CoordinateSplit split_coordinates(const IMat& vertices) {
  const Index d = vertices.cols();
  std::vector<Index> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Index i = 0; i < vertices.rows(); ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = j + 1; k < d; ++k)
        if (vertices(i, j) != 0 && vertices(i, k) != 0)
          parent[find(j)] = find(k);
  std::map<Index, std::vector<Index>> groups;
  for (Index j = 0; j < d; ++j) groups[find(j)].push_back(j);
  CoordinateSplit out;
  for (auto& [root, coords] : groups) out.components.push_back(std::move(coords));
  return out;
}

std::optional<std::vector<LatticePolytope>> try_split(const IMat& vertices) {
  CoordinateSplit split = split_coordinates(vertices);
  if (split.components.size() < 2) return std::nullopt;
  std::vector<LatticePolytope> out;
  for (const auto& coords : split.components) {
    std::vector<Index> rows;
    for (Index i = 0; i < vertices.rows(); ++i) {
      bool supported = false;
      for (Index j : coords)
        if (vertices(i, j) != 0) supported = true;
      if (supported) rows.push_back(i);
    }
    IMat group(static_cast<Index>(rows.size()), static_cast<Index>(coords.size()));
    for (Index r = 0; r < static_cast<Index>(rows.size()); ++r)
      for (Index c = 0; c < static_cast<Index>(coords.size()); ++c)
        group(r, c) = vertices(rows[r], coords[c]);
    // each group must be a full-dimensional polytope around the origin
    try {
      LatticePolytope q(static_cast<Index>(coords.size()), std::move(group));
      if (!contains_origin_interior(q)) return std::nullopt;
      out.push_back(std::move(q));
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
  }
  Index total = 0;
  for (const auto& q : out) total += q.vertex_count();
  if (total != vertices.rows()) return std::nullopt;
  return out;
}

void decompose_into(const LatticePolytope& p, std::vector<LatticePolytope>& out) {
  // coordinates that already separate witness a direct sum as-is
  if (auto parts = try_split(p.vertices())) {
    for (const LatticePolytope& q : *parts) decompose_into(q, out);
    return;
  }
  for (int f : unimodular_facets(p)) {
    IMat to_std = unimodular_inverse(facet_vertex_matrix(p, f).transpose());
    IMat transformed = p.vertices() * to_std.transpose();
    if (auto parts = try_split(transformed)) {
      for (const LatticePolytope& q : *parts) decompose_into(q, out);
      return;
    }
  }
  out.push_back(p);
}

}  // namespace

std::vector<LatticePolytope> decompose_direct_sum(const LatticePolytope& p) {
  if (!contains_origin_interior(p))
    throw PreconditionError("decompose_direct_sum: origin is not interior");
  std::vector<LatticePolytope> out;
  decompose_into(p, out);
  std::sort(out.begin(), out.end(), [](const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
    return compare_lex(canonical_form(a).matrix, canonical_form(b).matrix) < 0;
  });
  return out;
}

}  // namespace fano
