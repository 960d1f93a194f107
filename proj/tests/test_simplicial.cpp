#include <random>

#include "dgx/simplicial.hpp"
#include "doctest.h"

using namespace dgx;

namespace {
Complex random_connective_f2(std::mt19937_64& rng, int lo, int maxdim, DegreeWindow w) {
  Field f2 = Field::prime(2);
  Complex c(f2, w);
  for (int n = lo; n <= 0; ++n) c.set_dim(n, static_cast<int>(rng() % (static_cast<unsigned>(maxdim) + 1)));
  for (int attempt = 0; attempt < 300; ++attempt) {
    Complex t = c;
    for (int n = lo; n < 0; ++n) {
      Matrix d(f2, t.dim(n + 1), t.dim(n));
      for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) d.set(i, j, f2.from_long(static_cast<long>(rng() % 2)));
      t.set_diff(n, d);
    }
    bool ok = true;
    for (int n = lo; n + 1 < 0; ++n)
      if (!t.diff(n + 1).mul(t.diff(n)).is_zero()) ok = false;
    if (ok) return t;
  }
  return c;
}
}  // namespace

TEST_CASE("DK of zero complex") {
  Field q = Field::rationals();
  Complex z = Complex::zero(q, DegreeWindow(-4, 1));
  SimplicialModule s = dold_kan_DK(z, 3);
  for (int n = 0; n <= 3; ++n) CHECK(s.dim(n) == 0);
}

TEST_CASE("DK of k in degree -1") {
  // level-0 dim 0, level-1 dim 1, d_0 = d_1 = 0 on it
  Field q = Field::rationals();
  Complex c = Complex::stalk(q, DegreeWindow(-4, 1), -1, 1);
  SimplicialModule s = dold_kan_DK(c, 3);
  CHECK(s.dim(0) == 0);
  CHECK(s.dim(1) == 1);
  CHECK(s.face(1, 0).is_zero());
  CHECK(s.face(1, 1).is_zero());
}

TEST_CASE("DK level 1 is V^{-1} ⊕ V^0 with d0 = (d, +id-part), d1 = projection") {
  // d_0(h, k) = d(h) + k and d_1(h, k) = k on V^{-1} ⊕ V^0
  Field q = Field::rationals();
  Complex c(q, DegreeWindow(-4, 1));
  c.set_dim(-1, 2);
  c.set_dim(0, 2);
  Matrix d = Matrix::from_rows(q, {{1, 2}, {0, 1}});
  c.set_diff(-1, d);
  SimplicialModule s = dold_kan_DK(c, 2);
  CHECK(s.dim(0) == 2);
  CHECK(s.dim(1) == 4);
  // summand order: surjections of [1] sorted lexicographically: (0,0) carries
  // V^0, (0,1) carries V^{-1}
  Matrix d0 = s.face(1, 0), d1 = s.face(1, 1);
  // d1 = [id | 0]: kills V^{-1}, keeps V^0
  CHECK(d1.submatrix(0, 0, 2, 2) == Matrix::identity(q, 2));
  CHECK(d1.submatrix(0, 2, 2, 2).is_zero());
  // d0 = [id | d]
  CHECK(d0.submatrix(0, 0, 2, 2) == Matrix::identity(q, 2));
  CHECK(d0.submatrix(0, 2, 2, 2) == d);
}

TEST_CASE("N(DK(v)) recovers v (independent levelwise kernel computation)") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Complex v = random_connective_f2(rng, -3, 2, DegreeWindow(-6, 1));
    int m = 4;
    SimplicialModule s = dold_kan_DK(v, m);
    Complex n = dold_kan_N(s);
    for (int k = -m; k <= 0; ++k) CHECK(n.dim(k) == v.dim(k));
    // the canonical copy of V^{-k} inside DK(V)_k lies in N^{-k} and d_0
    // restricts to the original differential: compare cohomology dims too
    for (int k = -m + 1; k <= -1; ++k) {
      CHECK(n.cohomology(k).dim == v.cohomology(k).dim);
    }
  }
}

TEST_CASE("DK rejects non-connective input") {
  Field q = Field::rationals();
  Complex c = Complex::stalk(q, DegreeWindow(-2, 2), 1, 1);
  CHECK_THROWS_AS(dold_kan_DK(c, 2), PreconditionError);
}
