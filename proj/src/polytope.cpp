#include "fano/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace fano {

namespace {

// Normal of the hyperplane through d affinely independent points (rows of
// `pts` selected by `idx`), via the generalized cross product of the
// difference vectors. Zero vector when the points are affinely dependent.
IVec hyperplane_normal(const IMat& pts, const std::vector<Index>& idx) {
  const Index d = pts.cols();
  IMat diffs(d - 1, d);
  for (Index i = 1; i < d; ++i)
    diffs.row(i - 1) = pts.row(idx[i]) - pts.row(idx[0]);
  IVec normal(d);
  IMat sub(d - 1, d - 1);
  for (Index j = 0; j < d; ++j) {
    for (Index c = 0, sc = 0; c < d; ++c) {
      if (c == j) continue;
      sub.col(sc++) = diffs.col(c);
    }
    Int m = determinant<Int>(sub);
    normal(j) = (j % 2 == 0) ? m : Int(-m);
  }
  return normal;
}

bool next_combination(std::vector<Index>& c, Index n) {
  const Index k = static_cast<Index>(c.size());
  for (Index i = k; i-- > 0;) {
    if (c[i] < n - (k - i)) {
      ++c[i];
      for (Index j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void finalize_structure(FacetStructure& fs, Index d) {
  std::sort(fs.facets.begin(), fs.facets.end(), [](const Facet& a, const Facet& b) {
    int c = compare_lex(a.normal, b.normal);
    if (c != 0) return c < 0;
    return a.rhs < b.rhs;
  });
  fs.simplicial = true;
  for (const Facet& f : fs.facets)
    if (static_cast<Index>(f.vertex_indices.size()) != d) fs.simplicial = false;
  fs.neighbor.clear();
  if (!fs.simplicial) return;
  std::map<std::vector<Index>, std::vector<int>> ridge_to_facets;
  for (int f = 0; f < static_cast<int>(fs.facets.size()); ++f) {
    const auto& vi = fs.facets[f].vertex_indices;
    for (Index k = 0; k < d; ++k) {
      std::vector<Index> ridge;
      for (Index j = 0; j < d; ++j)
        if (j != k) ridge.push_back(vi[j]);
      ridge_to_facets[ridge].push_back(f);
    }
  }
  fs.neighbor.assign(fs.facets.size(), std::vector<int>(d, -1));
  for (const auto& [ridge, fids] : ridge_to_facets) {
    if (fids.size() != 2)
      throw InconsistencyError("facet structure: a ridge lies in " +
                               std::to_string(fids.size()) + " facets");
    for (int which = 0; which < 2; ++which) {
      int f = fids[which], g = fids[1 - which];
      const auto& vi = fs.facets[f].vertex_indices;
      for (Index k = 0; k < d; ++k) {
        bool in_ridge = std::binary_search(ridge.begin(), ridge.end(), vi[k]);
        if (!in_ridge) fs.neighbor[f][k] = g;
      }
    }
  }
}

// Integer witness functional vanishing on all difference vectors, for the
// not-full-dimensional error message.
IVec degenerate_witness(const IMat& pts) {
  const Index n = pts.rows(), d = pts.cols();
  QMat m(n - 1 > 0 ? n - 1 : 1, d);
  m.setZero();
  for (Index i = 1; i < n; ++i)
    for (Index j = 0; j < d; ++j) m(i - 1, j) = Rat(pts(i, j) - pts(0, j));
  // Gauss-Jordan; read a kernel vector off a free column.
  std::vector<Index> pivot_col;
  Index r = 0;
  for (Index c = 0; c < d && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(r).swap(m.row(p));
    Rat lead = m(r, c);
    for (Index j = 0; j < d; ++j) m(r, j) /= lead;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat t = m(i, c);
      for (Index j = 0; j < d; ++j) m(i, j) -= t * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  Index free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end())
    ++free_col;
  QVec kernel = QVec::Zero(d);
  kernel(free_col) = 1;
  for (Index k = 0; k < static_cast<Index>(pivot_col.size()); ++k)
    kernel(pivot_col[k]) = -m(k, free_col);
  Int lcm_den = 1;
  for (Index j = 0; j < d; ++j) {
    using boost::multiprecision::lcm;
    lcm_den = lcm(lcm_den, Int(denominator(kernel(j))));
  }
  IVec w(d);
  for (Index j = 0; j < d; ++j) w(j) = Int(numerator(kernel(j))) * (lcm_den / Int(denominator(kernel(j))));
  return primitive_part(w);
}

std::optional<FacetStructure> enumerate_impl(const IMat& points, bool want_witness) {
  const Index n = points.rows(), d = points.cols();
  if (d < 1) throw PreconditionError("enumerate_facets: dimension must be >= 1");
  if (n < d + 1) {
    if (!want_witness) return std::nullopt;
  }
  {
    IMat diffs(n > 0 ? n - 1 : 0, d);
    for (Index i = 1; i < n; ++i) diffs.row(i - 1) = points.row(i) - points.row(0);
    if (n < 1 || rank<Int>(diffs) < d) {
      if (!want_witness) return std::nullopt;
      IVec w = degenerate_witness(points);
      Int c = points.row(0).transpose().dot(w);
      throw PreconditionError("polytope is not full-dimensional: all points satisfy <" +
                              show(w) + ", x> = " + c.str());
    }
  }

  FacetStructure fs;
  std::set<std::pair<std::vector<Int>, Int>> seen;
  std::vector<Index> comb(d);
  for (Index i = 0; i < d; ++i) comb[i] = i;
  do {
    IVec normal = hyperplane_normal(points, comb);
    if (normal.isZero()) continue;
    Int rhs = points.row(comb[0]).transpose().dot(normal);
    // Orient outward; discard hyperplanes that do not support the hull.
    bool above = false, below = false;
    for (Index i = 0; i < n && !(above && below); ++i) {
      Int lv = points.row(i).transpose().dot(normal);
      if (lv > rhs) above = true;
      if (lv < rhs) below = true;
    }
    if (above && below) continue;
    if (above) {
      normal = -normal;
      rhs = -rhs;
    }
    normal = primitive_part(normal);
    rhs = points.row(comb[0]).transpose().dot(normal);
    std::vector<Int> key(normal.data(), normal.data() + d);
    if (!seen.insert({key, rhs}).second) continue;
    Facet f;
    f.normal = normal;
    f.rhs = rhs;
    for (Index i = 0; i < n; ++i)
      if (points.row(i).transpose().dot(normal) == rhs) f.vertex_indices.push_back(i);
    fs.facets.push_back(std::move(f));
  } while (next_combination(comb, n));

  finalize_structure(fs, d);
  return fs;
}

}  // namespace

FacetStructure enumerate_facets(const IMat& points) {
  return *enumerate_impl(points, true);
}

std::optional<FacetStructure> try_enumerate_facets(const IMat& points) {
  return enumerate_impl(points, false);
}

LatticePolytope::LatticePolytope(Index dim, IMat vertices)
    : dim_(dim), vertices_(std::move(vertices)) {
  if (dim_ < 1) throw PreconditionError("LatticePolytope: dimension must be >= 1");
  if (vertices_.cols() != dim_)
    throw PreconditionError("LatticePolytope: vertex width does not match dimension");
  if (vertices_.rows() < dim_ + 1)
    throw PreconditionError("LatticePolytope: too few vertices for a full-dimensional polytope");
  const Index n = vertices_.rows();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (vertices_.row(i) == vertices_.row(j))
        throw PreconditionError("LatticePolytope: vertex " + std::to_string(j) +
                                " duplicates vertex " + std::to_string(i));
  FacetStructure fs = enumerate_facets(vertices_);
  // Every listed point must be a genuine vertex: its incident facet normals
  // span the whole space.
  for (Index i = 0; i < n; ++i) {
    std::vector<Index> incident;
    for (Index f = 0; f < static_cast<Index>(fs.facets.size()); ++f)
      if (on_facet(fs.facets[f], vertices_.row(i).transpose()))
        incident.push_back(f);
    IMat normals(static_cast<Index>(incident.size()), dim_);
    for (Index k = 0; k < static_cast<Index>(incident.size()); ++k)
      normals.row(k) = fs.facets[incident[k]].normal.transpose();
    if (rank<Int>(normals) < dim_)
      throw PreconditionError("LatticePolytope: point " + std::to_string(i) + " " +
                              show(vertices_.row(i).transpose()) +
                              " is not a vertex of the hull");
  }
  facets_ = std::make_shared<const FacetStructure>(std::move(fs));
}

LatticePolytope::LatticePolytope(Index dim, IMat vertices, FacetStructure precomputed)
    : dim_(dim),
      vertices_(std::move(vertices)),
      facets_(std::make_shared<const FacetStructure>(std::move(precomputed))) {}

std::optional<Index> LatticePolytope::find_vertex(const IVec& v) const {
  for (Index i = 0; i < vertices_.rows(); ++i)
    if (vertices_.row(i).transpose() == v) return i;
  return std::nullopt;
}

const Facet& LatticePolytope::facet(int f) const {
  if (f < 0 || f >= static_cast<int>(facets_->facets.size()))
    throw PreconditionError("facet index out of range");
  return facets_->facets[f];
}

bool LatticePolytope::same_vertex_set(const LatticePolytope& other) const {
  if (dim_ != other.dim_ || vertex_count() != other.vertex_count()) return false;
  std::set<std::vector<Int>> mine, theirs;
  for (Index i = 0; i < vertex_count(); ++i) {
    mine.insert({vertices_.row(i).begin(), vertices_.row(i).end()});
    theirs.insert({other.vertices_.row(i).begin(), other.vertices_.row(i).end()});
  }
  return mine == theirs;
}

bool contains(const LatticePolytope& p, const IVec& x) {
  for (const Facet& f : p.facets().facets)
    if (level_of(f, x) > f.rhs) return false;
  return true;
}

bool on_boundary(const LatticePolytope& p, const IVec& x) {
  bool tight = false;
  for (const Facet& f : p.facets().facets) {
    Int lv = level_of(f, x);
    if (lv > f.rhs) return false;
    if (lv == f.rhs) tight = true;
  }
  return tight;
}

bool contains_origin_interior(const LatticePolytope& p) {
  for (const Facet& f : p.facets().facets)
    if (f.rhs <= 0) return false;
  return true;
}

bool is_simplicial(const LatticePolytope& p) { return p.facets().simplicial; }

bool is_reflexive(const LatticePolytope& p) {
  if (!contains_origin_interior(p))
    throw PreconditionError("is_reflexive: origin is not an interior point");
  for (const Facet& f : p.facets().facets)
    if (f.rhs != 1) return false;
  return true;
}

std::vector<IVec> lattice_points(const LatticePolytope& p) {
  const Index d = p.dim();
  IVec lo(d), hi(d);
  for (Index j = 0; j < d; ++j) {
    lo(j) = p.vertices().col(j).minCoeff();
    hi(j) = p.vertices().col(j).maxCoeff();
  }
  std::vector<IVec> out;
  IVec x = lo;
  while (true) {
    if (contains(p, x)) out.push_back(x);
    Index j = d;
    while (j-- > 0) {
      if (x(j) < hi(j)) {
        ++x(j);
        for (Index k = j + 1; k < d; ++k) x(k) = lo(k);
        break;
      }
      if (j == 0) return out;
    }
  }
}

bool is_terminal(const LatticePolytope& p) {
  if (!contains_origin_interior(p))
    throw PreconditionError("is_terminal: origin is not an interior point");
  const auto pts = lattice_points(p);
  if (static_cast<Index>(pts.size()) != p.vertex_count() + 1) return false;
  for (const IVec& x : pts) {
    if (x.isZero()) continue;
    if (!p.find_vertex(x)) return false;
  }
  return true;
}

bool is_canonical(const LatticePolytope& p) {
  if (!contains_origin_interior(p))
    throw PreconditionError("is_canonical: origin is not an interior point");
  for (const IVec& x : lattice_points(p)) {
    if (x.isZero()) continue;
    bool interior = true;
    for (const Facet& f : p.facets().facets)
      if (level_of(f, x) == f.rhs) {
        interior = false;
        break;
      }
    if (interior) return false;
  }
  return true;
}

IMat facet_vertex_matrix(const LatticePolytope& p, int f) {
  const Facet& facet = p.facet(f);
  if (static_cast<Index>(facet.vertex_indices.size()) != p.dim())
    throw PreconditionError("facet_vertex_matrix: facet is not a simplex");
  IMat m(p.dim(), p.dim());
  for (Index k = 0; k < p.dim(); ++k)
    m.row(k) = p.vertices().row(facet.vertex_indices[k]);
  return m;
}

bool is_smooth_fano(const LatticePolytope& p) {
  if (!contains_origin_interior(p)) return false;
  if (!is_simplicial(p)) return false;
  for (int f = 0; f < static_cast<int>(p.facets().facets.size()); ++f) {
    Int det = determinant<Int>(facet_vertex_matrix(p, f));
    if (det != 1 && det != -1) return false;
  }
  // Smoothness forces reflexivity and terminality.
  if (!is_reflexive(p) || !is_terminal(p))
    throw InconsistencyError("is_smooth_fano: facet bases are unimodular but the "
                             "polytope is not terminal reflexive");
  return true;
}

bool is_pseudo_symmetric(const LatticePolytope& p) {
  for (const Facet& f : p.facets().facets) {
    bool negated_is_facet = false;
    for (const Facet& g : p.facets().facets) {
      if (g.vertex_indices.size() != f.vertex_indices.size()) continue;
      bool all = true;
      for (Index vi : f.vertex_indices) {
        IVec neg = -p.vertex(vi);
        bool found = false;
        for (Index wi : g.vertex_indices)
          if (p.vertex(wi) == neg) {
            found = true;
            break;
          }
        if (!found) {
          all = false;
          break;
        }
      }
      if (all) {
        negated_is_facet = true;
        break;
      }
    }
    if (negated_is_facet) return true;
  }
  return false;
}

bool is_centrally_symmetric(const LatticePolytope& p) {
  for (Index i = 0; i < p.vertex_count(); ++i)
    if (!p.find_vertex(IVec(-p.vertex(i)))) return false;
  return true;
}

LatticePolytope polar_dual(const LatticePolytope& p) {
  if (!is_reflexive(p))
    throw PreconditionError("polar_dual: polytope is not reflexive, polar has "
                            "non-integral vertices");
  const auto& primal = p.facets().facets;
  const Index m = static_cast<Index>(primal.size());
  IMat dual_vertices(m, p.dim());
  for (Index i = 0; i < m; ++i) dual_vertices.row(i) = primal[i].normal.transpose();
  // Facets of the dual correspond to vertices of p: the facet normal is the
  // vertex itself and the incident dual vertices are the facets of p through
  // that vertex.
  FacetStructure fs;
  for (Index v = 0; v < p.vertex_count(); ++v) {
    Facet f;
    f.normal = p.vertex(v);
    f.rhs = 1;
    for (Index i = 0; i < m; ++i)
      if (primal[i].normal.dot(p.vertex(v)) == 1) f.vertex_indices.push_back(i);
    fs.facets.push_back(std::move(f));
  }
  finalize_structure(fs, p.dim());
  return LatticePolytope(p.dim(), std::move(dual_vertices), std::move(fs));
}

}  // namespace fano
