#pragma once

#include "dgx/category.hpp"
#include "dgx/quiver_algebra.hpp"

namespace dgx {

// Bounded complex of finite direct sums of indecomposable projectives over a
// quiver algebra, within a fixed degree range. Differential entries are
// algebra elements acting by left multiplication.
struct ProjComplex {
  std::string name;
  int lo, hi;                           // degree range of the slots
  std::vector<std::vector<int>> slots;  // per degree d in [lo,hi]: projective vertices
  // (degree d, target slot i in degree d+1, source slot j in degree d):
  // coefficients in A(vertex_j, vertex_i)
  std::map<std::tuple<int, int, int>, Vec> diff;

  int slot_count(int d) const;
  int slot_vertex(int d, int i) const;
  Vec diff_entry(const QuiverAlgebra& alg, int d, int i, int j) const;
};

// The dg category of such complexes: hom complexes of graded maps with
// differential δ(f) = d∘f − (−1)^{|f|} f∘d, composition of graded maps.
class ComplexesCategory : public DgCategory {
 public:
  static std::shared_ptr<ComplexesCategory> build(std::shared_ptr<const QuiverAlgebra> alg, int deg_lo, int deg_hi,
                                                  std::vector<ProjComplex> objects, DegreeWindow window);

  const Field& field() const override { return alg_->field(); }
  int num_objects() const override { return static_cast<int>(objects_.size()); }
  std::string object_name(int x) const override { return objects_[static_cast<size_t>(x)].name; }
  DegreeWindow hom_window(int, int) const override { return win_; }
  int hom_dim(int x, int y, int n) const override;
  Matrix hom_diff(int x, int y, int n) const override;
  Vec identity_coeffs(int x) const override;
  Vec compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const override;
  std::string basis_label(int x, int y, int n, int i) const override;

  const QuiverAlgebra& algebra() const { return *alg_; }
  const ProjComplex& object(int x) const { return objects_[static_cast<size_t>(x)]; }

  // basis element enumeration of hom(x,y)^n: (slot degree m, source slot j,
  // target slot i, algebra basis index b)
  struct BasisElt {
    int m, j, i, b;
  };
  const std::vector<BasisElt>& basis(int x, int y, int n) const;

 private:
  ComplexesCategory(std::shared_ptr<const QuiverAlgebra> alg, int deg_lo, int deg_hi, std::vector<ProjComplex> objs,
                    DegreeWindow w)
      : alg_(std::move(alg)), deg_lo_(deg_lo), deg_hi_(deg_hi), objects_(std::move(objs)), win_(w) {}
  void validate_objects() const;

  std::shared_ptr<const QuiverAlgebra> alg_;
  int deg_lo_, deg_hi_;
  std::vector<ProjComplex> objects_;
  DegreeWindow win_;
  mutable std::map<std::tuple<int, int, int>, std::vector<BasisElt>> basis_cache_;
  mutable std::mutex mutex_;
};

}  // namespace dgx
