#pragma once

#include "dgx/category.hpp"

namespace dgx {

struct GradedArrow {
  std::string name;
  int src, tgt, deg;
};

// arrows listed in application order: arrows[0] is applied first
struct Path {
  int src;
  std::vector<int> arrows;
  bool operator==(const Path& o) const { return src == o.src && arrows == o.arrows; }
  bool operator<(const Path& o) const;  // by length, then lexicographic arrow ids, then src
};

struct PathTerm {
  Scalar coeff;
  Path path;
};
using PathExpr = std::vector<PathTerm>;

struct DgQuiverPresentation {
  std::string name;
  std::vector<std::string> objects;
  std::vector<GradedArrow> arrows;
  std::map<int, PathExpr> differentials;  // arrow id -> d(arrow)
  std::vector<PathExpr> relations;

  int object_index(const std::string& s) const;
  int arrow_index(const std::string& s) const;
  int path_target(const Path& p) const;
  int path_degree(const Path& p) const;
  void validate(const Field& f) const;  // endpoints, homogeneity
};

// Λ(Δ^n): one arrow per chain {i < p_1 < ... < p_l < j} of cohomological
// degree −l, with the alternating-sum differential.
DgQuiverPresentation lambda_simplex(int n);

class PathDgCategory : public DgCategory {
 public:
  enum class Mode { Exact, Truncated };

  static std::shared_ptr<PathDgCategory> build(const DgQuiverPresentation& pres, Field f, DegreeWindow w,
                                               Mode mode, int len_bound = 8);

  const Field& field() const override { return field_; }
  int num_objects() const override { return static_cast<int>(pres_.objects.size()); }
  std::string object_name(int x) const override { return pres_.objects[static_cast<size_t>(x)]; }
  DegreeWindow hom_window(int, int) const override { return win_; }
  int hom_dim(int x, int y, int n) const override;
  Matrix hom_diff(int x, int y, int n) const override;
  Vec identity_coeffs(int x) const override;
  Vec compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const override;
  std::string basis_label(int x, int y, int n, int i) const override;

  Mode mode() const { return mode_; }
  int len_bound() const { return len_bound_; }
  const DgQuiverPresentation& presentation() const { return pres_; }
  // truncated mode: dimensions agree at len_bound and len_bound+1
  bool dims_stable() const;

  // named arrow as a morphism of this category
  Morphism arrow_morphism(const std::string& name) const;
  // evaluate a path expression into quotient coordinates
  Morphism eval_expr(const PathExpr& e, int src, int tgt, int deg) const;

 private:
  PathDgCategory(DgQuiverPresentation pres, Field f, DegreeWindow w, Mode mode, int len_bound)
      : pres_(std::move(pres)), field_(f), win_(w), mode_(mode), len_bound_(len_bound) {}
  void construct();
  void enumerate_paths(int len_cap, std::map<std::tuple<int, int, int>, std::vector<Path>>& out) const;
  PathExpr d_of_path(const Path& p) const;

  struct HomSpace {
    std::vector<Path> paths;            // all enumerated paths, deterministic order
    Subspace ideal;                     // ideal span in path coordinates
    std::vector<int> basis_paths;       // indices of non-pivot paths
    std::map<Path, int> path_index;
    HomSpace(Field f) : ideal(f, 0) {}
  };
  const HomSpace& space(int x, int y, int n) const;
  Vec expr_to_quotient(const PathExpr& e, int x, int y, int n) const;

  DgQuiverPresentation pres_;
  Field field_;
  DegreeWindow win_;
  Mode mode_;
  int len_bound_;
  std::map<std::tuple<int, int, int>, HomSpace> spaces_;
  mutable std::optional<bool> stable_;
};

}  // namespace dgx
