#pragma once

#include <cstdint>
#include <vector>

#include "fano/types.hpp"

namespace fano {

template <typename Scalar>
Scalar vector_gcd(const VectorX<Scalar>& v) {
  Scalar g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    using boost::multiprecision::gcd;
    Scalar e = v(i) < 0 ? Scalar(-v(i)) : v(i);
    g = g == 0 ? e : gcd(g, e);
  }
  return g;
}

// v divided by the gcd of its entries; the result is the shortest lattice
// vector in the ray spanned by v.
template <typename Scalar>
VectorX<Scalar> primitive_part(const VectorX<Scalar>& v) {
  Scalar g = vector_gcd(v);
  if (g == 0) throw PreconditionError("primitive_part: zero vector has no primitive part");
  VectorX<Scalar> w = v;
  for (Index i = 0; i < w.size(); ++i) w(i) /= g;
  return w;
}

// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar determinant(MatrixX<Scalar> m) {
  if (m.rows() != m.cols())
    throw PreconditionError("determinant: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Scalar t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = t / prev;  // divides exactly
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Rank over the rationals, by integer row elimination.
template <typename Scalar>
Index rank(MatrixX<Scalar> m) {
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.row(r).swap(m.row(p));
    for (Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Scalar a = m(r, c), b = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) = m(i, j) * a - m(r, j) * b;
    }
    ++r;
  }
  return r;
}

QVec solve_exact(const IMat& m, const IVec& b);
QMat inverse_exact(const IMat& m);

// Inverse of a matrix with determinant +-1; entries stay integral.
IMat unimodular_inverse(const IMat& m);

// A GL(d, Z) transformation. Translations never occur here: every polytope in
// scope has the origin as its unique interior lattice point, so a lattice
// equivalence must fix the origin.
class UnimodularMap {
 public:
  explicit UnimodularMap(IMat m);
  const IMat& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }
  UnimodularMap inverse() const;
  IVec apply(const IVec& v) const { return matrix_ * v; }
  // Applies the map to every row of a vertex matrix.
  IMat apply_rows(const IMat& rows) const { return rows * matrix_.transpose(); }

 private:
  IMat matrix_;
};

// Deterministic for a fixed seed; built from elementary shears, swaps and
// sign flips, with every intermediate entry capped at `magnitude_cap`.
UnimodularMap random_unimodular(Index d, std::uint64_t seed, long magnitude_cap = 10);

}  // namespace fano
