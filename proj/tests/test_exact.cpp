#include <random>

#include "doctest.h"
#include "fano/exact.hpp"

using namespace fano;

TEST_CASE("primitive_part divides by the gcd") {
  CHECK(primitive_part(ivec({2, 4, 6})) == ivec({1, 2, 3}));
  CHECK(primitive_part(ivec({1, 0, 0})) == ivec({1, 0, 0}));
  CHECK(primitive_part(ivec({-2, 4})) == ivec({-1, 2}));
  CHECK_THROWS_AS(primitive_part(ivec({0, 0})), PreconditionError);
}

TEST_CASE("primitive_part is idempotent") {
  std::mt19937_64 rng(20240817);
  for (int t = 0; t < 200; ++t) {
    IVec v(3);
    bool zero = true;
    for (Index i = 0; i < 3; ++i) {
      v(i) = static_cast<long>(rng() % 21) - 10;
      if (v(i) != 0) zero = false;
    }
    if (zero) continue;
    IVec p = primitive_part(v);
    CHECK(primitive_part(p) == p);
    CHECK(vector_gcd(p) == 1);
    // a positive multiple of v
    CHECK(p * vector_gcd(v) == v);
  }
}

TEST_CASE("determinant on small fixed matrices") {
  CHECK(determinant<Int>(IMat::Identity(3, 3)) == 1);
  // standard basis edge of P6
  CHECK(determinant<Int>(imat({{1, 0}, {0, 1}})) == 1);
  // facet conv{e2, -e1+e2} of P6; cofactor expansion by hand: 0*1 - 1*(-1) = 1
  CHECK(determinant<Int>(imat({{0, 1}, {-1, 1}})) == 1);
  CHECK(determinant<Int>(imat({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant<Int>(imat({{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(determinant<Int>(IMat::Zero(2, 3)), PreconditionError);
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    IMat m(4, 4);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) m(i, j) = static_cast<long>(rng() % 9) - 4;
    // expansion along the first row
    Int expected = 0;
    for (Index j = 0; j < 4; ++j) {
      IMat sub(3, 3);
      for (Index r = 1; r < 4; ++r)
        for (Index c = 0, sc = 0; c < 4; ++c) {
          if (c == j) continue;
          sub(r - 1, sc++) = m(r, c);
        }
      Int term = m(0, j) * determinant<Int>(sub);
      expected += (j % 2 == 0) ? term : Int(-term);
    }
    CHECK(determinant<Int>(m) == expected);
  }
}

TEST_CASE("solve_exact on pinned systems") {
  QVec x = solve_exact(IMat::Identity(2, 2), ivec({3, 5}));
  CHECK(x(0) == 3);
  CHECK(x(1) == 5);

  // vertices of the facet conv{e1,e2,e3} as columns, right-hand side e1+e2:
  // barycentric coordinates of the vertex sum of the skew bipyramid over P5.
  IMat f = IMat::Identity(3, 3);
  QVec lambda = solve_exact(f, ivec({1, 1, 0}));
  CHECK(lambda(0) == 1);
  CHECK(lambda(1) == 1);
  CHECK(lambda(2) == 0);

  // columns (1,0) and (1,1); inverse is [[1,-1],[0,1]] so x = (-1,1)
  QVec y = solve_exact(imat({{1, 1}, {0, 1}}), ivec({0, 1}));
  CHECK(y(0) == -1);
  CHECK(y(1) == 1);

  CHECK_THROWS_AS(solve_exact(imat({{1, 2}, {2, 4}}), ivec({1, 1})), PreconditionError);
}

TEST_CASE("solve_exact reproduces the right-hand side") {
  std::mt19937_64 rng(99);
  int done = 0;
  while (done < 100) {
    IMat m(3, 3);
    IVec b(3);
    for (Index i = 0; i < 3; ++i) {
      b(i) = static_cast<long>(rng() % 15) - 7;
      for (Index j = 0; j < 3; ++j) m(i, j) = static_cast<long>(rng() % 9) - 4;
    }
    if (determinant<Int>(m) == 0) continue;
    QVec x = solve_exact(m, b);
    for (Index i = 0; i < 3; ++i) {
      Rat acc = 0;
      for (Index j = 0; j < 3; ++j) acc += Rat(m(i, j)) * x(j);
      CHECK(acc == Rat(b(i)));
    }
    ++done;
  }
}

TEST_CASE("inverse_exact and unimodular_inverse") {
  IMat m = imat({{1, 0}, {1, 1}});
  QMat inv = inverse_exact(m);
  CHECK(inv(0, 0) == 1);
  CHECK(inv(1, 0) == -1);
  IMat ui = unimodular_inverse(m);
  CHECK(ui * m == IMat::Identity(2, 2));
  CHECK_THROWS_AS(unimodular_inverse(imat({{2, 0}, {0, 1}})), PreconditionError);
}

TEST_CASE("random_unimodular is deterministic with determinant +-1") {
  for (Index d = 1; d <= 5; ++d) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      UnimodularMap u = random_unimodular(d, seed);
      Int det = determinant<Int>(u.matrix());
      CHECK((det == 1 || det == -1));
      CHECK(u.matrix() == random_unimodular(d, seed).matrix());
      CHECK(u.matrix().cwiseAbs().maxCoeff() <= 10);
      IMat round_trip = u.inverse().matrix() * u.matrix();
      CHECK(round_trip == IMat::Identity(d, d));
    }
  }
  UnimodularMap u = random_unimodular(3, 7);
  IVec v = ivec({2, -1, 5});
  CHECK(u.inverse().apply(u.apply(v)) == v);
}
