#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dgx/linalg.hpp"

namespace dgx {

struct DegreeWindow {
  int lo, hi;
  DegreeWindow(int l, int h) : lo(l), hi(h) {
    if (l > h) throw WindowError("empty degree window");
  }
  bool contains(int n) const { return lo <= n && n <= hi; }
  bool contains(const DegreeWindow& w) const { return lo <= w.lo && w.hi <= hi; }
  DegreeWindow intersect(const DegreeWindow& w) const;
  DegreeWindow shifted(int k) const { return DegreeWindow(lo + k, hi + k); }
};

// Cochain complex of finite-dimensional vector spaces. Data is exact inside
// the window; queries outside raise WindowError, never a silent zero.
class Complex {
 public:
  Complex(Field f, DegreeWindow w) : f_(f), win_(w) {}

  static Complex zero(Field f, DegreeWindow w) { return Complex(f, w); }
  static Complex stalk(Field f, DegreeWindow w, int degree, int dim);

  const Field& field() const { return f_; }
  const DegreeWindow& window() const { return win_; }

  void set_dim(int n, int d);
  void set_diff(int n, Matrix m);  // d^n : X^n -> X^{n+1}

  int dim(int n) const;          // WindowError outside window
  Matrix diff(int n) const;      // valid for n in [lo, hi-1]
  bool dims_all_zero() const;
  int support_min() const;       // smallest n in window with dim>0 (hi+1 if none)
  int support_max() const;

  void validate() const;  // shapes and d^2 = 0 on the representable range

  Complex shifted(int k) const;                   // (Σ^k X)^n = X^{n+k}, d -> (−1)^k d
  Complex direct_sum(const Complex& o) const;     // window = intersection
  Complex truncate_leq0() const;                  // τ≤0
  // basis of Z^0 = ker d^0 inside X^0 (needed by τ≤0 and Z^0-categories)
  std::vector<Vec> z0_basis() const;

  struct Cohomology {
    int dim;
    std::vector<Vec> representatives;  // cocycles in X^n coordinates
  };
  Cohomology cohomology(int n) const;  // requires [n-1, n+1] ⊆ window

  bool operator==(const Complex& o) const;

 private:
  Field f_;
  DegreeWindow win_;
  std::map<int, int> dim_;
  std::map<int, Matrix> d_;
};

// Degree-k graded map between complexes: component^n : X^n -> Y^{n+k}.
// A ChainMap is the k = 0, commuting case.
class GradedMap {
 public:
  GradedMap(const Complex& src, const Complex& tgt, int deg);

  const Complex& src() const { return src_; }
  const Complex& tgt() const { return tgt_; }
  int degree() const { return deg_; }
  DegreeWindow domain_window() const;  // degrees n where component is defined

  void set_component(int n, Matrix m);
  Matrix component(int n) const;  // zero matrix of right shape if unset

  // d_Y ∘ f − (−1)^{deg} f ∘ d_X, one degree narrower domain
  GradedMap differential() const;
  bool is_chain_map() const;  // deg arbitrary, differential() == 0 on its domain
  GradedMap add(const GradedMap& o) const;
  GradedMap scale(const Scalar& c) const;
  GradedMap compose(const GradedMap& inner) const;  // this ∘ inner

 private:
  Complex src_, tgt_;
  int deg_;
  std::map<int, Matrix> comp_;
};

struct ChainMap {
  GradedMap map;
  explicit ChainMap(GradedMap m);  // validates degree 0 and chain property
  const Complex& src() const { return map.src(); }
  const Complex& tgt() const { return map.tgt(); }
  Matrix component(int n) const { return map.component(n); }
};

ChainMap identity_chain_map(const Complex& x);

struct ConeResult {
  Complex cone;          // Cone(f)^n = X^{n+1} ⊕ Y^n, d = [[−d_X, 0], [f, d_Y]]
  ChainMap inclusion;    // Y -> Cone(f)
  ChainMap projection;   // Cone(f) -> Σ X
};
ConeResult cone(const ChainMap& f);

ChainMap shift_chain_map(const ChainMap& f, int k);

// H^n(f) is an isomorphism for all n in w; src/tgt windows must contain
// [w.lo−1, w.hi+1], else WindowError.
bool is_quasi_iso(const ChainMap& f, DegreeWindow w);

// Strictly commuting-up-to-homotopy square of complexes
//      P00 --F--> P01
//       |G         |J        d(H) = J∘F − K∘G as graded maps (H of degree −1)
//      P10 --K--> P11
// Cartesian test: u = (F, G, −H) : P00 -> Σ^{-1}Cone([−J, K]) is a
// quasi-isomorphism in degrees [w.lo, min(w.hi, 0)].
struct ComplexSquare {
  ChainMap F, G, J, K;
  GradedMap H;
  ComplexSquare(ChainMap f, ChainMap g, ChainMap j, ChainMap k, GradedMap h);
};
bool square_is_cartesian(const ComplexSquare& s, DegreeWindow w);

// Connective homotopy pullback criterion for strictly commuting squares of
// connective complexes (jf = kg): X00 -> τ≤0 Σ^{-1}Cone(X10 ⊕ X01 -> X11).
bool is_connective_homotopy_pullback(const ChainMap& f, const ChainMap& g, const ChainMap& j,
                                     const ChainMap& k, DegreeWindow w);

}  // namespace dgx
