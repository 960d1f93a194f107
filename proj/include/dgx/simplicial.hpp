#pragma once

#include "dgx/complex.hpp"

namespace dgx {

// Simplicial k-module truncated at level `levels`.
class SimplicialModule {
 public:
  SimplicialModule(Field f, int levels);

  const Field& field() const { return f_; }
  int levels() const { return levels_; }
  int dim(int n) const;
  void set_dim(int n, int d);

  // face d_i : X_n -> X_{n-1}, 0 <= i <= n
  void set_face(int n, int i, Matrix m);
  Matrix face(int n, int i) const;
  // degeneracy s_j : X_n -> X_{n+1}, 0 <= j <= n
  void set_degeneracy(int n, int j, Matrix m);
  Matrix degeneracy(int n, int j) const;

  void verify_simplicial_identities() const;

 private:
  Field f_;
  int levels_;
  std::vector<int> dim_;
  std::map<std::pair<int, int>, Matrix> face_, degen_;
};

// Dold-Kan construction through simplicial level m; input concentrated in
// degrees <= 0 (PreconditionError otherwise).
SimplicialModule dold_kan_DK(const Complex& v, int m);

// Normalized cochain complex N^{-n} = ∩_{1<=i<=n} ker d_i with differential
// induced by Σ (−1)^i d_i (= d_0 on N). Window [-m, 0].
Complex dold_kan_N(const SimplicialModule& s);

}  // namespace dgx
