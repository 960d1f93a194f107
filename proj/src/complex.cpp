#include "dgx/complex.hpp"

#include <algorithm>

namespace dgx {

DegreeWindow DegreeWindow::intersect(const DegreeWindow& w) const {
  int l = std::max(lo, w.lo), h = std::min(hi, w.hi);
  if (l > h) throw WindowError("window intersection is empty");
  return DegreeWindow(l, h);
}

Complex Complex::stalk(Field f, DegreeWindow w, int degree, int dim) {
  Complex c(f, w);
  if (dim != 0) c.set_dim(degree, dim);
  return c;
}

void Complex::set_dim(int n, int d) {
  if (!win_.contains(n)) throw WindowError("set_dim outside window");
  if (d < 0) throw DimensionError("negative dimension");
  if (d == 0)
    dim_.erase(n);
  else
    dim_[n] = d;
}

void Complex::set_diff(int n, Matrix m) {
  if (n < win_.lo || n + 1 > win_.hi) throw WindowError("set_diff outside window");
  if (m.rows() != dim(n + 1) || m.cols() != dim(n)) throw DimensionError("differential shape mismatch");
  if (m.field() != f_) throw FieldMismatchError("differential field mismatch");
  if (m.is_zero())
    d_.erase(n);
  else
    d_.insert_or_assign(n, std::move(m));
}

int Complex::dim(int n) const {
  if (!win_.contains(n)) throw WindowError("degree " + std::to_string(n) + " outside window");
  auto it = dim_.find(n);
  return it == dim_.end() ? 0 : it->second;
}

Matrix Complex::diff(int n) const {
  if (n < win_.lo || n + 1 > win_.hi) throw WindowError("differential outside window");
  auto it = d_.find(n);
  if (it != d_.end()) return it->second;
  return Matrix(f_, dim(n + 1), dim(n));
}

bool Complex::dims_all_zero() const { return dim_.empty(); }

int Complex::support_min() const {
  for (int n = win_.lo; n <= win_.hi; ++n)
    if (dim(n) > 0) return n;
  return win_.hi + 1;
}

int Complex::support_max() const {
  for (int n = win_.hi; n >= win_.lo; --n)
    if (dim(n) > 0) return n;
  return win_.lo - 1;
}

void Complex::validate() const {
  for (const auto& [n, m] : d_) {
    if (m.rows() != dim(n + 1) || m.cols() != dim(n)) throw DimensionError("differential shape mismatch");
  }
  for (int n = win_.lo; n + 2 <= win_.hi; ++n) {
    if (!diff(n + 1).mul(diff(n)).is_zero())
      throw PreconditionError("d^2 != 0 at degree " + std::to_string(n));
  }
}

Complex Complex::shifted(int k) const {
  Complex r(f_, DegreeWindow(win_.lo - k, win_.hi - k));
  for (const auto& [n, d] : dim_) r.set_dim(n - k, d);
  Scalar sign = (k % 2 == 0) ? f_.one() : f_.neg(f_.one());
  for (const auto& [n, m] : d_) r.set_diff(n - k, m.scale(sign));
  return r;
}

Complex Complex::direct_sum(const Complex& o) const {
  if (f_ != o.f_) throw FieldMismatchError("direct sum: field mismatch");
  DegreeWindow w = win_.intersect(o.win_);
  Complex r(f_, w);
  for (int n = w.lo; n <= w.hi; ++n) r.set_dim(n, dim(n) + o.dim(n));
  for (int n = w.lo; n < w.hi; ++n) {
    Matrix a = diff(n), b = o.diff(n);
    Matrix m(f_, a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    r.set_diff(n, m);
  }
  return r;
}

std::vector<Vec> Complex::z0_basis() const {
  if (win_.hi < 1) throw WindowError("Z^0 needs degree 1 inside the window");
  return kernel_basis(diff(0));
}

Complex Complex::truncate_leq0() const {
  if (win_.hi < 1) throw WindowError("truncate_leq0 needs degree 1 inside the window");
  Complex r(f_, win_);
  for (int n = win_.lo; n <= std::min(-1, win_.hi); ++n) r.set_dim(n, dim(n));
  std::vector<Vec> z0 = z0_basis();
  r.set_dim(0, static_cast<int>(z0.size()));
  for (int n = win_.lo; n + 1 <= std::min(-1, win_.hi); ++n) r.set_diff(n, diff(n));
  if (win_.lo <= -1) {
    // d^{-1} lands in Z^0 by d^2 = 0; re-express in the Z^0 basis
    Matrix zmat = Matrix::from_columns(f_, z0, dim(0));
    Matrix dold = diff(-1);
    Matrix dnew(f_, static_cast<int>(z0.size()), dim(-1));
    for (int j = 0; j < dold.cols(); ++j) {
      auto x = solve(zmat, dold.column(j));
      if (!x) throw PreconditionError("d^{-1} does not land in Z^0 (d^2 != 0?)");
      for (int i = 0; i < dnew.rows(); ++i) dnew.set(i, j, (*x)[i]);
    }
    r.set_diff(-1, dnew);
  }
  return r;
}

Complex::Cohomology Complex::cohomology(int n) const {
  if (!win_.contains(n - 1) || !win_.contains(n + 1))
    throw WindowError("cohomology at " + std::to_string(n) + " needs degrees n-1..n+1 inside the window");
  std::vector<Vec> zn = kernel_basis(diff(n));
  std::vector<Vec> bn = image_basis(diff(n - 1));
  Subspace boundaries = Subspace::span(f_, dim(n), bn);
  std::vector<Vec> reps;
  std::vector<Vec> accum = bn;
  Subspace acc = boundaries;
  for (const Vec& z : zn) {
    if (!acc.contains(z)) {
      reps.push_back(z);
      accum.push_back(z);
      acc = Subspace::span(f_, dim(n), accum);
    }
  }
  return Cohomology{static_cast<int>(reps.size()), reps};
}

bool Complex::operator==(const Complex& o) const {
  if (f_ != o.f_ || win_.lo != o.win_.lo || win_.hi != o.win_.hi) return false;
  for (int n = win_.lo; n <= win_.hi; ++n) {
    if (dim(n) != o.dim(n)) return false;
    if (n < win_.hi && !(diff(n) == o.diff(n))) return false;
  }
  return true;
}

GradedMap::GradedMap(const Complex& src, const Complex& tgt, int deg) : src_(src), tgt_(tgt), deg_(deg) {
  if (src.field() != tgt.field()) throw FieldMismatchError("graded map: field mismatch");
}

DegreeWindow GradedMap::domain_window() const {
  int lo = std::max(src_.window().lo, tgt_.window().lo - deg_);
  int hi = std::min(src_.window().hi, tgt_.window().hi - deg_);
  if (lo > hi) throw WindowError("graded map has empty domain");
  return DegreeWindow(lo, hi);
}

void GradedMap::set_component(int n, Matrix m) {
  DegreeWindow dom = domain_window();
  if (!dom.contains(n)) throw WindowError("graded map component outside domain");
  if (m.rows() != tgt_.dim(n + deg_) || m.cols() != src_.dim(n)) throw DimensionError("component shape mismatch");
  if (m.is_zero())
    comp_.erase(n);
  else
    comp_.insert_or_assign(n, std::move(m));
}

Matrix GradedMap::component(int n) const {
  DegreeWindow dom = domain_window();
  if (!dom.contains(n)) throw WindowError("graded map component outside domain");
  auto it = comp_.find(n);
  if (it != comp_.end()) return it->second;
  return Matrix(src_.field(), tgt_.dim(n + deg_), src_.dim(n));
}

GradedMap GradedMap::differential() const {
  const Field& f = src_.field();
  GradedMap r(src_, tgt_, deg_ + 1);
  DegreeWindow dom = domain_window();
  Scalar sign = (deg_ % 2 == 0) ? f.one() : f.neg(f.one());
  for (int n = dom.lo; n + 1 <= dom.hi; ++n) {
    if (n + deg_ + 1 > tgt_.window().hi || n + deg_ < tgt_.window().lo) continue;
    Matrix a = tgt_.diff(n + deg_).mul(component(n));
    Matrix b = component(n + 1).mul(src_.diff(n)).scale(sign);
    r.set_component(n, a.sub(b));
  }
  return r;
}

bool GradedMap::is_chain_map() const {
  GradedMap d = differential();
  DegreeWindow dom = domain_window();
  for (int n = dom.lo; n + 1 <= dom.hi; ++n) {
    if (n + deg_ + 1 > tgt_.window().hi || n + deg_ < tgt_.window().lo) continue;
    if (!d.component(n).is_zero()) return false;
  }
  return true;
}

GradedMap GradedMap::add(const GradedMap& o) const {
  if (deg_ != o.deg_) throw DimensionError("graded map add: degree mismatch");
  GradedMap r(src_, tgt_, deg_);
  DegreeWindow dom = domain_window();
  for (int n = dom.lo; n <= dom.hi; ++n) r.set_component(n, component(n).add(o.component(n)));
  return r;
}

GradedMap GradedMap::scale(const Scalar& c) const {
  GradedMap r(src_, tgt_, deg_);
  DegreeWindow dom = domain_window();
  for (int n = dom.lo; n <= dom.hi; ++n) r.set_component(n, component(n).scale(c));
  return r;
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
  GradedMap r(inner.src_, tgt_, deg_ + inner.deg_);
  DegreeWindow dri = inner.domain_window();
  DegreeWindow dro = domain_window();
  DegreeWindow dr = r.domain_window();
  for (int n = dr.lo; n <= dr.hi; ++n) {
    if (!dri.contains(n) || !dro.contains(n + inner.deg_)) throw WindowError("compose: component outside domain");
    r.set_component(n, component(n + inner.deg_).mul(inner.component(n)));
  }
  return r;
}

ChainMap::ChainMap(GradedMap m) : map(std::move(m)) {
  if (map.degree() != 0) throw PreconditionError("chain map must have degree 0");
  if (!map.is_chain_map()) throw PreconditionError("not a chain map: d f != f d");
}

ChainMap identity_chain_map(const Complex& x) {
  GradedMap g(x, x, 0);
  DegreeWindow w = x.window();
  for (int n = w.lo; n <= w.hi; ++n) g.set_component(n, Matrix::identity(x.field(), x.dim(n)));
  return ChainMap(std::move(g));
}

ConeResult cone(const ChainMap& f) {
  const Complex& x = f.src();
  const Complex& y = f.tgt();
  const Field& fld = x.field();
  DegreeWindow w(std::max(x.window().lo - 1, y.window().lo), std::min(x.window().hi - 1, y.window().hi));
  Complex c(fld, w);
  for (int n = w.lo; n <= w.hi; ++n) c.set_dim(n, x.dim(n + 1) + y.dim(n));
  for (int n = w.lo; n + 1 <= w.hi; ++n) {
    Matrix m(fld, c.dim(n + 1), c.dim(n));
    m.set_block(0, 0, x.diff(n + 1).neg());
    m.set_block(x.dim(n + 2), 0, f.component(n + 1));
    m.set_block(x.dim(n + 2), x.dim(n + 1), y.diff(n));
    c.set_diff(n, m);
  }
  c.validate();

  GradedMap incl(y, c, 0);
  for (int n = w.lo; n <= w.hi; ++n) {
    Matrix m(fld, c.dim(n), y.dim(n));
    m.set_block(x.dim(n + 1), 0, Matrix::identity(fld, y.dim(n)));
    incl.set_component(n, m);
  }
  Complex sx = x.shifted(1);
  GradedMap proj(c, sx, 0);
  DegreeWindow pw = proj.domain_window();
  for (int n = pw.lo; n <= pw.hi; ++n) {
    Matrix m(fld, x.dim(n + 1), c.dim(n));
    m.set_block(0, 0, Matrix::identity(fld, x.dim(n + 1)));
    proj.set_component(n, m);
  }
  return ConeResult{c, ChainMap(std::move(incl)), ChainMap(std::move(proj))};
}

ChainMap shift_chain_map(const ChainMap& f, int k) {
  Complex sx = f.src().shifted(k), sy = f.tgt().shifted(k);
  GradedMap g(sx, sy, 0);
  DegreeWindow w = g.domain_window();
  for (int n = w.lo; n <= w.hi; ++n) g.set_component(n, f.component(n + k));
  return ChainMap(std::move(g));
}

bool is_quasi_iso(const ChainMap& f, DegreeWindow w) {
  const Complex& x = f.src();
  const Complex& y = f.tgt();
  DegreeWindow need(w.lo - 1, w.hi + 1);
  if (!x.window().contains(need) || !y.window().contains(need))
    throw WindowError("is_quasi_iso: window too small relative to requested range");
  for (int n = w.lo; n <= w.hi; ++n) {
    auto hx = x.cohomology(n);
    auto hy = y.cohomology(n);
    if (hx.dim != hy.dim) return false;
    if (hx.dim == 0) continue;
    Subspace by = Subspace::span(y.field(), y.dim(n), image_basis(y.diff(n - 1)));
    std::vector<Vec> imgs;
    for (const Vec& z : hx.representatives) imgs.push_back(by.reduce(f.component(n).apply(z)));
    Matrix m = Matrix::from_columns(y.field(), imgs, y.dim(n));
    if (rank(m) != hx.dim) return false;
  }
  return true;
}

ComplexSquare::ComplexSquare(ChainMap f, ChainMap g, ChainMap j, ChainMap k, GradedMap h)
    : F(std::move(f)), G(std::move(g)), J(std::move(j)), K(std::move(k)), H(std::move(h)) {
  if (H.degree() != -1) throw PreconditionError("square homotopy must have degree -1");
  // d(H) = J F − K G
  GradedMap want = GradedMap(J.map.compose(F.map)).add(K.map.compose(G.map).scale(F.src().field().neg(F.src().field().one())));
  GradedMap dh = H.differential();
  DegreeWindow dom = dh.domain_window().intersect(want.domain_window());
  for (int n = dom.lo; n <= dom.hi; ++n)
    if (!(dh.component(n) == want.component(n)))
      throw PreconditionError("square homotopy identity d(h) = jf - kg fails");
}

bool square_is_cartesian(const ComplexSquare& s, DegreeWindow w) {
  const Field& f = s.F.src().field();
  Complex m = s.F.tgt().direct_sum(s.G.tgt());  // P01 ⊕ P10
  const Complex& z = s.J.tgt();
  GradedMap psi(m, z, 0);
  DegreeWindow pw = psi.domain_window();
  for (int n = pw.lo; n <= pw.hi; ++n) {
    Matrix a = s.J.component(n).neg().hstack(s.K.component(n));
    psi.set_component(n, a);
  }
  ConeResult c = cone(ChainMap(std::move(psi)));
  Complex t = c.cone.shifted(-1);  // T^n = M^n ⊕ Z^{n-1}

  GradedMap u(s.F.src(), t, 0);
  DegreeWindow uw = u.domain_window();
  for (int n = uw.lo; n <= uw.hi; ++n) {
    Matrix mm(f, t.dim(n), s.F.src().dim(n));
    mm.set_block(0, 0, s.F.component(n));
    mm.set_block(s.F.tgt().dim(n), 0, s.G.component(n));
    mm.set_block(m.dim(n), 0, s.H.component(n).neg());
    u.set_component(n, mm);
  }
  if (!u.is_chain_map())
    throw PreconditionError("internal sign error: comparison map into the shifted cone is not a chain map");
  DegreeWindow check(w.lo, std::min(w.hi, 0));
  return is_quasi_iso(ChainMap(std::move(u)), check);
}

bool is_connective_homotopy_pullback(const ChainMap& f, const ChainMap& g, const ChainMap& j,
                                     const ChainMap& k, DegreeWindow w) {
  for (const Complex* c : {&f.src(), &f.tgt(), &g.tgt(), &j.tgt()})
    if (c->support_max() > 0) throw PreconditionError("connective pullback criterion requires connective complexes");
  GradedMap lhs = j.map.compose(f.map);
  GradedMap rhs = k.map.compose(g.map);
  DegreeWindow dom = lhs.domain_window().intersect(rhs.domain_window());
  for (int n = dom.lo; n <= dom.hi; ++n)
    if (!(lhs.component(n) == rhs.component(n))) throw PreconditionError("square does not commute");
  GradedMap h(f.src(), j.tgt(), -1);  // zero homotopy
  ComplexSquare s(f, g, j, k, std::move(h));
  return square_is_cartesian(s, w);
}

}  // namespace dgx
