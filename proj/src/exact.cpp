#include "fano/exact.hpp"

#include <random>

namespace fano {

namespace {

// Signed cofactor of m at (row, col).
Int cofactor(const IMat& m, Index row, Index col) {
  const Index n = m.rows();
  IMat sub(n - 1, n - 1);
  for (Index i = 0, si = 0; i < n; ++i) {
    if (i == row) continue;
    for (Index j = 0, sj = 0; j < n; ++j) {
      if (j == col) continue;
      sub(si, sj) = m(i, j);
      ++sj;
    }
    ++si;
  }
  Int d = determinant(sub);
  return ((row + col) % 2 == 0) ? d : Int(-d);
}

}  // namespace

QVec solve_exact(const IMat& m, const IVec& b) {
  if (m.rows() != m.cols())
    throw PreconditionError("solve_exact: matrix is not square");
  if (m.rows() != b.size())
    throw PreconditionError("solve_exact: dimension mismatch");
  Int det = determinant<Int>(m);
  if (det == 0) throw PreconditionError("solve_exact: singular matrix");
  // Cramer's rule; every determinant is exact.
  const Index n = m.rows();
  QVec x(n);
  for (Index j = 0; j < n; ++j) {
    IMat mj = m;
    mj.col(j) = b;
    x(j) = Rat(determinant<Int>(mj), det);
  }
  return x;
}

QMat inverse_exact(const IMat& m) {
  if (m.rows() != m.cols())
    throw PreconditionError("inverse_exact: matrix is not square");
  Int det = determinant<Int>(m);
  if (det == 0) throw PreconditionError("inverse_exact: singular matrix");
  const Index n = m.rows();
  QMat inv(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) inv(i, j) = Rat(cofactor(m, j, i), det);
  return inv;
}

IMat unimodular_inverse(const IMat& m) {
  if (m.rows() != m.cols())
    throw PreconditionError("unimodular_inverse: matrix is not square");
  Int det = determinant<Int>(m);
  if (det != 1 && det != -1)
    throw PreconditionError("unimodular_inverse: determinant is not +-1");
  const Index n = m.rows();
  IMat inv(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) inv(i, j) = cofactor(m, j, i) * det;
  return inv;
}

UnimodularMap::UnimodularMap(IMat m) : matrix_(std::move(m)) {
  Int det = determinant<Int>(matrix_);
  if (det != 1 && det != -1)
    throw PreconditionError("UnimodularMap: determinant is not +-1");
}

UnimodularMap UnimodularMap::inverse() const {
  return UnimodularMap(unimodular_inverse(matrix_));
}

UnimodularMap random_unimodular(Index d, std::uint64_t seed, long magnitude_cap) {
  if (d < 1) throw PreconditionError("random_unimodular: dimension must be >= 1");
  std::mt19937_64 rng(seed);
  IMat m = IMat::Identity(d, d);
  const Int cap = magnitude_cap;
  const int steps = 8 + 4 * static_cast<int>(d);
  for (int s = 0; s < steps; ++s) {
    const std::uint64_t r = rng();
    const Index i = static_cast<Index>(r % d);
    const Index j = static_cast<Index>((r >> 16) % d);
    switch ((r >> 32) % 4) {
      case 0:
      case 1: {  // shear: row_i += +-row_j
        if (i == j) break;
        const Int sgn = ((r >> 48) & 1) ? 1 : -1;
        IVec candidate = m.row(i).transpose() + sgn * m.row(j).transpose();
        bool within = true;
        for (Index k = 0; k < d; ++k) {
          Int a = candidate(k) < 0 ? Int(-candidate(k)) : candidate(k);
          if (a > cap) within = false;
        }
        if (within) m.row(i) = candidate.transpose();
        break;
      }
      case 2:  // swap
        if (i != j) m.row(i).swap(m.row(j));
        break;
      case 3:  // sign flip
        m.row(i) = -m.row(i);
        break;
    }
  }
  return UnimodularMap(std::move(m));
}

}  // namespace fano
