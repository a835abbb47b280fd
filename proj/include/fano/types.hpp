#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fano {

// Every quantity in this library is an exact integer or an exact rational.
// Nothing is ever rounded.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using Index = Eigen::Index;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IVec = VectorX<Int>;
using IMat = MatrixX<Int>;
using QVec = VectorX<Rat>;
using QMat = MatrixX<Rat>;

// Input violates a documented precondition of the called operation.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A property that is guaranteed by theory failed to hold. Either the library
// has a defect or the catalog disagrees with the classification it encodes.
struct InconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// Malformed input text; positions are 1-based.
struct ParseError : std::runtime_error {
  ParseError(long line, long column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", token " +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  long line;
  long column;
};

inline IVec ivec(std::initializer_list<long> entries) {
  IVec v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = e;
  return v;
}

inline IMat imat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IMat m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c)
      throw PreconditionError("imat: ragged row list");
    Index j = 0;
    for (long e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

inline IVec unit_vector(Index d, Index k) {
  IVec v = IVec::Zero(d);
  v(k) = 1;
  return v;
}

// Lexicographic comparison, entry by entry.
inline int compare_lex(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i) ? -1 : 1;
  }
  return 0;
}

// Row-major lexicographic comparison of whole matrices, shape first.
inline int compare_lex(const IMat& a, const IMat& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j) ? -1 : 1;
  return 0;
}

struct IVecLess {
  bool operator()(const IVec& a, const IVec& b) const {
    return compare_lex(a, b) < 0;
  }
};

inline std::string show(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v(i);
  }
  os << ")";
  return os.str();
}

}  // namespace fano
