#pragma once

#include "dgx/category.hpp"

namespace dgx {

// H^0 of a dg category: Hom spaces with chosen cocycle representative bases
// and an induced composition table.
class H0Category {
 public:
  explicit H0Category(CatPtr base);

  const CatPtr& base() const { return base_; }
  int dim(int x, int y) const;
  // representative morphism of the i-th basis class
  Morphism rep(int x, int y, int i) const;
  // class coordinates of a closed degree-0 morphism
  Vec class_of(const Morphism& f) const;
  bool is_zero_class(const Morphism& f) const { return class_of(f).is_zero(); }
  // H^0-composition on class coordinates
  Vec compose_classes(int x, int y, int z, const Vec& g, const Vec& f) const;
  Vec identity_class(int x) const;
  // morphism with prescribed class coordinates (the representative combination)
  Morphism from_class(int x, int y, const Vec& cls) const;

  bool is_zero_object(int x) const;

 private:
  struct Pair {
    std::vector<Vec> reps;   // cocycle coefficient vectors in hom^0
    Subspace boundaries;     // image of d^{-1}
    Subspace reduced_span;   // boundaries + reps, for membership
    Pair(Field f) : boundaries(f, 0), reduced_span(f, 0) {}
  };
  const Pair& pair(int x, int y) const;
  CatPtr base_;
  mutable std::map<std::pair<int, int>, Pair> cache_;
  mutable std::mutex mutex_;
};

// [g][f] = [id] and [f][g'] = [id] by two linear solvability checks.
bool is_homotopy_equivalence(const Morphism& f);
// f ~ g in H^0 (difference is a coboundary); degree-0 f, g closed
bool h0_equal(const Morphism& f, const Morphism& g);
// some g with [g][f] = [id_src], if any
std::optional<Morphism> h0_left_inverse(const Morphism& f);
std::optional<Morphism> h0_right_inverse(const Morphism& f);
// homotopy inverse (two-sided in H^0), if f is a homotopy equivalence
std::optional<Morphism> homotopy_inverse(const Morphism& f);

struct IndecomposabilityFlag {
  int object;
  bool indecomposable;
};
// exhaustive idempotent search in End_{H^0}(x) over F_p; refuses when
// p^dim exceeds the budget
std::vector<IndecomposabilityFlag> decompose_h0_objects(const H0Category& h0, long budget = 1 << 20);
bool is_indecomposable_h0(const H0Category& h0, int x, long budget = 1 << 20);

// iterate all vectors of F_p^n (budget-guarded)
bool next_fp_vector(const Field& f, Vec& v);

}  // namespace dgx
