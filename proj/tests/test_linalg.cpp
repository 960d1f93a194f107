#include <random>

#include "dgx/linalg.hpp"
#include "doctest.h"

using namespace dgx;

TEST_CASE("field construction") {
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::prime(7));
  CHECK_THROWS_AS(Field::prime(4), PreconditionError);
  CHECK_THROWS_AS(Field::prime(1), PreconditionError);
  Field f2 = Field::prime(2);
  CHECK(f2.add(f2.one(), f2.one()) == f2.zero());
  Field q = Field::rationals();
  Scalar half = q.div(q.one(), q.from_long(2));
  CHECK(q.add(half, half) == q.one());
}

TEST_CASE("rref identity and zero") {
  Field q = Field::rationals();
  Matrix id3 = Matrix::identity(q, 3);
  auto rr = rref(id3);
  CHECK(rr.rank() == 3);
  CHECK(kernel_basis(id3).empty());

  Matrix z(q, 2, 4);
  CHECK(rank(z) == 0);
  CHECK(kernel_basis(z).size() == 4);
}

TEST_CASE("rref over F2, hand Gaussian elimination oracle") {
  // [[1,1,0],[0,1,1]] over F2: rank 2, kernel {(1,1,1)}
  Field f2 = Field::prime(2);
  Matrix m = Matrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}});
  CHECK(rank(m) == 2);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == f2.one());
  CHECK(k[0][1] == f2.one());
  CHECK(k[0][2] == f2.one());
}

TEST_CASE("solve") {
  Field q = Field::rationals();
  Matrix id2 = Matrix::identity(q, 2);
  Vec b(q, 2);
  b[0] = q.from_long(3);
  b[1] = q.from_long(-5);
  auto x = solve(id2, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  Matrix z(q, 2, 2);
  CHECK_FALSE(solve(z, b).has_value());

  // [[1,1],[0,1]] over F2, b=(0,1) -> x=(1,1); oracle: 2x2 enumeration
  Field f2 = Field::prime(2);
  Matrix m = Matrix::from_rows(f2, {{1, 1}, {0, 1}});
  Vec b2(f2, 2);
  b2[1] = f2.one();
  {
    bool found = false;
    for (long a = 0; a < 2 && !found; ++a)
      for (long c = 0; c < 2 && !found; ++c) {
        Vec cand(f2, 2);
        cand[0] = f2.from_long(a);
        cand[1] = f2.from_long(c);
        if (m.apply(cand) == b2) {
          found = true;
          CHECK(cand[0] == f2.one());
          CHECK(cand[1] == f2.one());
        }
      }
    CHECK(found);
  }
  auto x2 = solve(m, b2);
  REQUIRE(x2.has_value());
  CHECK((*x2)[0] == f2.one());
  CHECK((*x2)[1] == f2.one());

  CHECK_THROWS_AS(solve(m, Vec(f2, 3)), DimensionError);
}

TEST_CASE("field mismatch is an error") {
  Field q = Field::rationals();
  Field f2 = Field::prime(2);
  Matrix a = Matrix::identity(q, 2);
  Matrix b = Matrix::identity(f2, 2);
  CHECK_THROWS_AS(a.mul(b), FieldMismatchError);
  CHECK_THROWS_AS(a.add(b), FieldMismatchError);
}

TEST_CASE("random F2 matrices: rank/nullity and kernel membership") {
  Field f2 = Field::prime(2);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    Matrix m(f2, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.set(i, j, f2.from_long(static_cast<long>(rng() % 2)));
    int r = rank(m);
    CHECK(r == rank(m.transpose()));
    auto k = kernel_basis(m);
    CHECK(r + static_cast<int>(k.size()) == cols);
    for (const auto& v : k) CHECK(m.apply(v).is_zero());
    auto im = image_basis(m);
    CHECK(static_cast<int>(im.size()) == r);
    // solve returns an exact solution whenever it returns
    Vec b(f2, rows);
    for (int i = 0; i < rows; ++i) b[i] = f2.from_long(static_cast<long>(rng() % 2));
    auto x = solve(m, b);
    if (x) CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("subspace reduce and membership") {
  Field f2 = Field::prime(2);
  std::vector<Vec> gens;
  Vec g1(f2, 3);
  g1[0] = f2.one();
  g1[1] = f2.one();
  gens.push_back(g1);
  Subspace s = Subspace::span(f2, 3, gens);
  CHECK(s.dim() == 1);
  CHECK(s.contains(g1));
  Vec v(f2, 3);
  v[2] = f2.one();
  CHECK_FALSE(s.contains(v));
}
