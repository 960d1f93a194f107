#pragma once

#include "dgx/category.hpp"

namespace dgx {

struct TwEntry {
  int obj;
  int shift;
};

// One-sided twisted complex over a base dg category: formal sum
// ⊕ A_i[r_i] with strictly upper-triangular q, q_{ij} ∈ Hom^{r_i−r_j+1}(A_j,A_i),
// satisfying (−1)^{r_i} d(q_{ij}) + Σ_k q_{ik} q_{kj} = 0.
struct TwistedComplex {
  std::string name;
  std::vector<TwEntry> entries;
  std::map<std::pair<int, int>, Morphism> q;  // keys (i,j) with i < j only

  int size() const { return static_cast<int>(entries.size()); }
};

// Maurer-Cartan check; throws PreconditionError on failure.
void verify_mc(const DgCategory& base, const TwistedComplex& x);

TwistedComplex tw_single(const CatPtr& base, int obj, int shift = 0, const std::string& name = "");
TwistedComplex tw_shifted(const DgCategory& base, const TwistedComplex& x, int k);

// Σ²A₀ ⊕ ΣA₁ ⊕ A₂ with q = [[0,0,0],[−f,0,0],[h,−j,0]] for a 3-term
// h-complex (f, j, h) with d(h) = −jf.
TwistedComplex tw_totalize_3term(const Morphism& f, const Morphism& j, const Morphism& h);

// Full subcategory of pretr(base) on a finite list of twisted complexes.
class PretrCategory : public DgCategory {
 public:
  static std::shared_ptr<PretrCategory> build(CatPtr base, std::vector<TwistedComplex> objs);

  const Field& field() const override { return base_->field(); }
  int num_objects() const override { return static_cast<int>(objs_.size()); }
  std::string object_name(int x) const override;
  DegreeWindow hom_window(int x, int y) const override;
  int hom_dim(int x, int y, int n) const override;
  Matrix hom_diff(int x, int y, int n) const override;
  Vec identity_coeffs(int x) const override;
  Vec compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const override;
  std::string basis_label(int x, int y, int n, int i) const override;

  const CatPtr& base() const { return base_; }
  const TwistedComplex& object(int x) const { return objs_[static_cast<size_t>(x)]; }

  // (i,j) block of a pretr morphism as a base morphism A_j -> B_i
  Morphism component(const Morphism& m, int i, int j) const;
  // assemble from blocks (missing blocks are zero)
  Morphism from_components(int x, int y, int deg, const std::map<std::pair<int, int>, Morphism>& comps) const;

  // cone of a closed degree-0 morphism: entries = ΣX ++ Y,
  // q = [[−q_X, 0],[f, q_Y]]
  TwistedComplex cone_object(const Morphism& f, const std::string& name = "") const;

 private:
  PretrCategory(CatPtr base, std::vector<TwistedComplex> objs) : base_(std::move(base)), objs_(std::move(objs)) {}
  int block_offset(int x, int y, int n, int i, int j) const;
  CatPtr base_;
  std::vector<TwistedComplex> objs_;
};

}  // namespace dgx
