#pragma once

#include "dgx/category.hpp"

namespace dgx {

// Opposite dg category: hom(x,y) = base hom(y,x), composition with the
// Koszul sign (−1)^{pq}, differentials unchanged.
class OppositeCategory : public DgCategory {
 public:
  explicit OppositeCategory(CatPtr base) : base_(std::move(base)) {}
  const Field& field() const override { return base_->field(); }
  int num_objects() const override { return base_->num_objects(); }
  std::string object_name(int x) const override { return base_->object_name(x); }
  DegreeWindow hom_window(int x, int y) const override { return base_->hom_window(y, x); }
  int hom_dim(int x, int y, int n) const override { return base_->hom_dim(y, x, n); }
  Matrix hom_diff(int x, int y, int n) const override { return base_->hom_diff(y, x, n); }
  Vec identity_coeffs(int x) const override { return base_->identity_coeffs(x); }
  Vec compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const override;
  std::string basis_label(int x, int y, int n, int i) const override { return base_->basis_label(y, x, n, i); }
  const CatPtr& base() const { return base_; }

  // transport of morphisms
  Morphism op_of(const Morphism& f) const;

 private:
  CatPtr base_;
};

std::shared_ptr<const OppositeCategory> opposite(CatPtr base);

// τ≤0: degreewise truncation of every hom complex; degree 0 becomes Z^0.
class TauLeq0Category : public DgCategory {
 public:
  explicit TauLeq0Category(CatPtr base);
  const Field& field() const override { return base_->field(); }
  int num_objects() const override { return base_->num_objects(); }
  std::string object_name(int x) const override { return base_->object_name(x); }
  DegreeWindow hom_window(int x, int y) const override;
  int hom_dim(int x, int y, int n) const override;
  Matrix hom_diff(int x, int y, int n) const override;
  Vec identity_coeffs(int x) const override;
  Vec compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const override;
  const CatPtr& base() const { return base_; }

  // base coordinates of a truncated morphism / truncation of a closed one
  Vec embed(int x, int y, int n, const Vec& v) const;
  Vec restrict_z0(int x, int y, const Vec& base_coeffs) const;

 private:
  const std::vector<Vec>& z0(int x, int y) const;
  CatPtr base_;
  mutable std::map<std::pair<int, int>, std::vector<Vec>> z0_cache_;
  mutable std::mutex mutex_;
};

std::shared_ptr<const TauLeq0Category> tau_leq0(CatPtr base);

// Additive closure: objects are multisets of base objects (including the
// empty sum = zero object), morphisms are block matrices.
class AdditiveClosureCategory : public DgCategory {
 public:
  AdditiveClosureCategory(CatPtr base, int max_summands);
  const Field& field() const override { return base_->field(); }
  int num_objects() const override { return static_cast<int>(objects_.size()); }
  std::string object_name(int x) const override;
  DegreeWindow hom_window(int x, int y) const override;
  int hom_dim(int x, int y, int n) const override;
  Matrix hom_diff(int x, int y, int n) const override;
  Vec identity_coeffs(int x) const override;
  Vec compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const override;
  std::string basis_label(int x, int y, int n, int i) const override;
  const CatPtr& base() const { return base_; }

  const std::vector<int>& cells(int x) const { return objects_[static_cast<size_t>(x)]; }
  int zero_object() const { return 0; }
  int object_of_base(int b) const;                      // singleton sum
  int object_of_cells(std::vector<int> base_ids) const;  // sorted lookup (must exist)
  int max_summands() const { return max_summands_; }

  // block structure of hom(x,y)^n: offset of block (xi-th cell, yi-th cell)
  int block_offset(int x, int y, int n, int xi, int yi) const;
  Morphism inject(const Morphism& f, int X, int xi, int Y, int yi) const;  // place f in one block
  Matrix block_of(const Morphism& f, int xi, int yi) const;               // extract coefficients

 private:
  CatPtr base_;
  int max_summands_;
  std::vector<std::vector<int>> objects_;  // sorted base-id multisets
  std::map<std::vector<int>, int> index_;
};

std::shared_ptr<const AdditiveClosureCategory> additive_closure(CatPtr base, int max_summands);

// Mor(𝒜): objects are closed degree-0 morphisms; hom = upper-triangular
// 2x2 matrices (j, h, l) with the twisted differential.
class MorCategory : public DgCategory {
 public:
  MorCategory(CatPtr base, std::vector<Morphism> objects);
  const Field& field() const override { return base_->field(); }
  int num_objects() const override { return static_cast<int>(objs_.size()); }
  std::string object_name(int x) const override;
  DegreeWindow hom_window(int x, int y) const override;
  int hom_dim(int x, int y, int n) const override;
  Matrix hom_diff(int x, int y, int n) const override;
  Vec identity_coeffs(int x) const override;
  Vec compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const override;
  const Morphism& object_morphism(int x) const { return objs_[static_cast<size_t>(x)]; }

  // components of a mor-category morphism: (j, h, l)
  struct Parts {
    Morphism j, h, l;
  };
  Parts parts(const Morphism& m) const;
  Morphism assemble(int x, int y, const Morphism& j, const Morphism& h, const Morphism& l) const;

 private:
  CatPtr base_;
  std::vector<Morphism> objs_;
};

}  // namespace dgx
