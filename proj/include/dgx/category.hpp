#pragma once

#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "dgx/complex.hpp"

namespace dgx {

class DgCategory;
using CatPtr = std::shared_ptr<const DgCategory>;

// Homogeneous morphism, as a coefficient vector in the basis of
// hom(src,tgt)^deg.
struct Morphism {
  CatPtr cat;
  int src, tgt, deg;
  Vec coeffs;

  Morphism(CatPtr c, int s, int t, int d, Vec v);
  bool is_zero() const { return coeffs.is_zero(); }
  Morphism add(const Morphism& o) const;
  Morphism sub(const Morphism& o) const;
  Morphism neg() const;
  Morphism scale(const Scalar& c) const;
  bool operator==(const Morphism& o) const;
};

struct CheckOptions {
  // exhaustive basis check when the total work estimate stays below this,
  // otherwise `samples` random probes with the given seed
  long exhaustive_limit = 200000;
  int samples = 60;
  unsigned long seed = 17;
};

// A finite dg category presented through hom complexes with chosen bases and
// a bilinear composition. Hom data is exact inside the per-pair window.
class DgCategory : public std::enable_shared_from_this<DgCategory> {
 public:
  virtual ~DgCategory() = default;

  virtual const Field& field() const = 0;
  virtual int num_objects() const = 0;
  virtual std::string object_name(int x) const = 0;
  virtual DegreeWindow hom_window(int x, int y) const = 0;
  virtual int hom_dim(int x, int y, int n) const = 0;
  virtual Matrix hom_diff(int x, int y, int n) const = 0;  // hom^n -> hom^{n+1}
  virtual Vec identity_coeffs(int x) const = 0;
  // g = basis element gi of hom(y,z)^p, f = basis element fi of hom(x,y)^q;
  // coefficients of g∘f in hom(x,z)^{p+q}
  virtual Vec compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const = 0;
  virtual std::string basis_label(int x, int y, int n, int i) const;

  Complex hom_complex(int x, int y) const;
  Morphism zero_morphism(int x, int y, int deg) const;
  Morphism identity(int x) const;
  Morphism basis_morphism(int x, int y, int deg, int i) const;
  Morphism morphism(int x, int y, int deg, Vec coeffs) const;

  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism diff(const Morphism& f) const;
  bool is_closed(const Morphism& f) const { return diff(f).is_zero(); }

  // matrix of (f ∘ −) : hom(a,src)^q -> hom(a,tgt)^{q+|f|}
  Matrix postcompose_matrix(const Morphism& f, int a, int q) const;
  // matrix of (− ∘ f) : hom(tgt,a)^q -> hom(src,a)^{q+|f|}
  Matrix precompose_matrix(const Morphism& f, int a, int q) const;

  // associativity, unit laws and graded Leibniz, basis-exhaustive within the
  // window when affordable, seeded sampling otherwise
  void check_laws(const CheckOptions& opt = CheckOptions()) const;

  // composition tensor for (x --q--> y --p--> z), columns indexed gi*dimQ+fi
  const Matrix& compose_tensor(int x, int y, int z, int p, int q) const;

 private:
  mutable std::mutex cache_mutex_;
  mutable std::map<std::tuple<int, int, int, int, int>, Matrix> compose_cache_;
};

std::string format_morphism(const Morphism& f);

}  // namespace dgx
