#pragma once

#include "dgx/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgx {

// Finite-dimensional path algebra of an ordinary quiver with admissible
// relations. Paths are written in application order (first arrow first);
// printed composition is right-to-left.
class QuiverAlgebra {
 public:
  struct Arrow {
    std::string name;
    int src, tgt;
  };
  struct APath {
    int src;
    std::vector<int> arrows;
    bool operator==(const APath& o) const { return src == o.src && arrows == o.arrows; }
  };
  struct ATerm {
    Scalar coeff;
    APath path;
  };
  using AExpr = std::vector<ATerm>;

  QuiverAlgebra(std::string name, Field f, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                std::vector<AExpr> relations, int len_cap = 24);

  const std::string& name() const { return name_; }
  const Field& field() const { return f_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[static_cast<size_t>(v)]; }
  int vertex_index(const std::string& s) const;
  int arrow_index(const std::string& s) const;
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int path_target(const APath& p) const;

  // A(x,y): basis of paths x -> y modulo the relation ideal
  int dim(int x, int y) const;
  std::string basis_label(int x, int y, int i) const;
  // coordinates of an arbitrary path product in the chosen basis
  Vec reduce_path(const APath& p) const;
  Vec reduce_expr(const AExpr& e, int x, int y) const;
  // product of basis elements: (y->z basis gi) ∘ (x->y basis fi) in A(x,z)
  Vec mult_basis(int x, int y, int z, int gi, int fi) const;
  Vec unit(int x) const;  // e_x in A(x,x)

  int total_dim() const;
  int detected_length_bound() const { return nilpotence_len_; }

 private:
  void construct(int len_cap);

  std::string name_;
  Field f_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<AExpr> relations_;

  struct Space {
    std::vector<APath> paths;        // descending length order (for elimination)
    std::map<std::vector<int>, int> index;  // arrows -> position
    Subspace ideal;
    std::vector<int> basis;  // non-pivot positions, sorted ascending by (length, lex)
    Space(Field f) : ideal(f, 0) {}
  };
  const Space& space(int x, int y) const;
  std::map<std::pair<int, int>, Space> spaces_;
  int nilpotence_len_ = 0;  // paths of this length all lie in the ideal
};

}  // namespace dgx
