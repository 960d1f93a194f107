#include "dgx/transforms.hpp"

#include <algorithm>
#include <sstream>

namespace dgx {

Vec OppositeCategory::compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const {
  // (g ∘_op f) = (−1)^{pq} f ∘_base g, viewed in base hom(z,x)
  Morphism g = base_->basis_morphism(z, y, p, gi);
  Morphism f = base_->basis_morphism(y, x, q, fi);
  Morphism r = base_->compose(f, g);
  if ((p % 2 != 0) && (q % 2 != 0)) r = r.neg();
  return r.coeffs;
}

Morphism OppositeCategory::op_of(const Morphism& f) const {
  if (f.cat.get() != base_.get()) throw PreconditionError("op_of: morphism not from the base category");
  return Morphism(shared_from_this(), f.tgt, f.src, f.deg, f.coeffs);
}

std::shared_ptr<const OppositeCategory> opposite(CatPtr base) {
  return std::make_shared<OppositeCategory>(std::move(base));
}

TauLeq0Category::TauLeq0Category(CatPtr base) : base_(std::move(base)) {}

std::shared_ptr<const TauLeq0Category> tau_leq0(CatPtr base) {
  return std::make_shared<TauLeq0Category>(std::move(base));
}

DegreeWindow TauLeq0Category::hom_window(int x, int y) const {
  DegreeWindow bw = base_->hom_window(x, y);
  if (bw.hi < 1) throw WindowError("tau_leq0 needs degree 1 inside the base window");
  return DegreeWindow(bw.lo, bw.hi);  // degrees > 0 are exactly zero
}

const std::vector<Vec>& TauLeq0Category::z0(int x, int y) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = z0_cache_.find({x, y});
  if (it != z0_cache_.end()) return it->second;
  auto [pos, ok] = z0_cache_.emplace(std::make_pair(x, y), kernel_basis(base_->hom_diff(x, y, 0)));
  (void)ok;
  return pos->second;
}

int TauLeq0Category::hom_dim(int x, int y, int n) const {
  DegreeWindow w = hom_window(x, y);
  if (!w.contains(n)) throw WindowError("hom degree outside window");
  if (n > 0) return 0;
  if (n < 0) return base_->hom_dim(x, y, n);
  return static_cast<int>(z0(x, y).size());
}

Vec TauLeq0Category::embed(int x, int y, int n, const Vec& v) const {
  if (n < 0) return v;
  if (n > 0) return Vec(field(), base_->hom_dim(x, y, n));
  const auto& zb = z0(x, y);
  Vec out(field(), base_->hom_dim(x, y, 0));
  for (size_t i = 0; i < zb.size(); ++i) out = out.add(zb[i].scale(v[static_cast<int>(i)]));
  return out;
}

Vec TauLeq0Category::restrict_z0(int x, int y, const Vec& base_coeffs) const {
  const auto& zb = z0(x, y);
  Matrix zmat = Matrix::from_columns(field(), zb, base_->hom_dim(x, y, 0));
  auto sol = solve(zmat, base_coeffs);
  if (!sol) throw PreconditionError("restrict_z0: morphism is not a cycle");
  return *sol;
}

Matrix TauLeq0Category::hom_diff(int x, int y, int n) const {
  const Field& f = field();
  if (n >= 0) return Matrix(f, hom_dim(x, y, n + 1), hom_dim(x, y, n));
  if (n < -1) return base_->hom_diff(x, y, n);
  // n == -1: base d^{-1} lands in Z^0
  Matrix d = base_->hom_diff(x, y, -1);
  Matrix out(f, hom_dim(x, y, 0), d.cols());
  for (int c = 0; c < d.cols(); ++c) {
    Vec col = restrict_z0(x, y, d.column(c));
    for (int r = 0; r < out.rows(); ++r) out.set(r, c, col[r]);
  }
  return out;
}

Vec TauLeq0Category::identity_coeffs(int x) const { return restrict_z0(x, x, base_->identity_coeffs(x)); }

Vec TauLeq0Category::compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const {
  Morphism g = base_->morphism(y, z, p, embed(y, z, p, Vec::unit(field(), hom_dim(y, z, p), gi)));
  Morphism f = base_->morphism(x, y, q, embed(x, y, q, Vec::unit(field(), hom_dim(x, y, q), fi)));
  Morphism r = base_->compose(g, f);
  if (p + q < 0) return r.coeffs;
  if (p + q > 0) return Vec(field(), 0);
  return restrict_z0(x, z, r.coeffs);
}

AdditiveClosureCategory::AdditiveClosureCategory(CatPtr base, int max_summands)
    : base_(std::move(base)), max_summands_(max_summands) {
  int nb = base_->num_objects();
  // all sorted multisets of size <= max_summands, by (size, lex)
  std::vector<std::vector<int>> cur{{}};
  objects_.push_back({});
  for (int s = 1; s <= max_summands_; ++s) {
    std::vector<std::vector<int>> next;
    for (const auto& c : cur)
      for (int b = c.empty() ? 0 : c.back(); b < nb; ++b) {
        auto n2 = c;
        n2.push_back(b);
        next.push_back(n2);
      }
    for (const auto& n2 : next) objects_.push_back(n2);
    cur = std::move(next);
  }
  for (size_t i = 0; i < objects_.size(); ++i) index_[objects_[i]] = static_cast<int>(i);
}

std::shared_ptr<const AdditiveClosureCategory> additive_closure(CatPtr base, int max_summands) {
  return std::make_shared<AdditiveClosureCategory>(std::move(base), max_summands);
}

std::string AdditiveClosureCategory::object_name(int x) const {
  const auto& c = cells(x);
  if (c.empty()) return "0";
  std::string s;
  for (int b : c) {
    if (!s.empty()) s += "+";
    s += base_->object_name(b);
  }
  return s;
}

int AdditiveClosureCategory::object_of_base(int b) const { return object_of_cells({b}); }

int AdditiveClosureCategory::object_of_cells(std::vector<int> base_ids) const {
  std::sort(base_ids.begin(), base_ids.end());
  auto it = index_.find(base_ids);
  if (it == index_.end()) throw PreconditionError("sum object exceeds the additive-closure bound");
  return it->second;
}

DegreeWindow AdditiveClosureCategory::hom_window(int x, int y) const {
  // intersection over the cells; empty sums impose nothing
  bool have = false;
  int lo = 0, hi = 0;
  for (int a : cells(x))
    for (int b : cells(y)) {
      DegreeWindow w = base_->hom_window(a, b);
      if (!have) {
        lo = w.lo;
        hi = w.hi;
        have = true;
      } else {
        lo = std::max(lo, w.lo);
        hi = std::min(hi, w.hi);
      }
    }
  if (!have) {
    // zero object involved: adopt a generous default from object 0 if present
    if (base_->num_objects() > 0) return base_->hom_window(0, 0);
    return DegreeWindow(-8, 8);
  }
  return DegreeWindow(lo, hi);
}

int AdditiveClosureCategory::hom_dim(int x, int y, int n) const {
  if (!hom_window(x, y).contains(n)) throw WindowError("hom degree outside window");
  int d = 0;
  for (int b : cells(y))
    for (int a : cells(x)) d += base_->hom_dim(a, b, n);
  return d;
}

int AdditiveClosureCategory::block_offset(int x, int y, int n, int xi, int yi) const {
  const auto& cx = cells(x);
  const auto& cy = cells(y);
  int off = 0;
  for (int bi = 0; bi < static_cast<int>(cy.size()); ++bi)
    for (int ai = 0; ai < static_cast<int>(cx.size()); ++ai) {
      if (bi == yi && ai == xi) return off;
      off += base_->hom_dim(cx[static_cast<size_t>(ai)], cy[static_cast<size_t>(bi)], n);
    }
  throw DimensionError("block index out of range");
}

Matrix AdditiveClosureCategory::hom_diff(int x, int y, int n) const {
  const Field& f = field();
  Matrix out(f, hom_dim(x, y, n + 1), hom_dim(x, y, n));
  const auto& cx = cells(x);
  const auto& cy = cells(y);
  for (int bi = 0; bi < static_cast<int>(cy.size()); ++bi)
    for (int ai = 0; ai < static_cast<int>(cx.size()); ++ai) {
      Matrix d = base_->hom_diff(cx[static_cast<size_t>(ai)], cy[static_cast<size_t>(bi)], n);
      out.set_block(block_offset(x, y, n + 1, ai, bi), block_offset(x, y, n, ai, bi), d);
    }
  return out;
}

Vec AdditiveClosureCategory::identity_coeffs(int x) const {
  const Field& f = field();
  Vec v(f, hom_dim(x, x, 0));
  const auto& cx = cells(x);
  for (int ai = 0; ai < static_cast<int>(cx.size()); ++ai) {
    Vec idb = base_->identity_coeffs(cx[static_cast<size_t>(ai)]);
    int off = block_offset(x, x, 0, ai, ai);
    for (int i = 0; i < idb.size(); ++i) v[off + i] = idb[i];
  }
  return v;
}

Vec AdditiveClosureCategory::compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const {
  const Field& f = field();
  const auto& cx = cells(x);
  const auto& cy = cells(y);
  const auto& cz = cells(z);
  // locate the blocks of the two basis elements
  auto locate = [&](int X, int Y, int n, int idx, int& ai, int& bi, int& b) {
    const auto& cX = cells(X);
    const auto& cY = cells(Y);
    int off = 0;
    for (int yi = 0; yi < static_cast<int>(cY.size()); ++yi)
      for (int xi = 0; xi < static_cast<int>(cX.size()); ++xi) {
        int d = base_->hom_dim(cX[static_cast<size_t>(xi)], cY[static_cast<size_t>(yi)], n);
        if (idx < off + d) {
          ai = xi;
          bi = yi;
          b = idx - off;
          return;
        }
        off += d;
      }
    throw DimensionError("basis index out of range");
  };
  int fai, fbi, fb, gai, gbi, gb;
  locate(x, y, q, fi, fai, fbi, fb);
  locate(y, z, p, gi, gai, gbi, gb);
  Vec out(f, hom_dim(x, z, p + q));
  if (fbi != gai) return out;  // middle cells differ
  Vec comp = base_->compose_basis(cx[static_cast<size_t>(fai)], cy[static_cast<size_t>(fbi)],
                                  cz[static_cast<size_t>(gbi)], p, q, gb, fb);
  int off = block_offset(x, z, p + q, fai, gbi);
  for (int i = 0; i < comp.size(); ++i) out[off + i] = comp[i];
  return out;
}

std::string AdditiveClosureCategory::basis_label(int x, int y, int n, int i) const {
  const auto& cx = cells(x);
  const auto& cy = cells(y);
  int off = 0;
  for (int yi = 0; yi < static_cast<int>(cy.size()); ++yi)
    for (int xi = 0; xi < static_cast<int>(cx.size()); ++xi) {
      int d = base_->hom_dim(cx[static_cast<size_t>(xi)], cy[static_cast<size_t>(yi)], n);
      if (i < off + d) {
        std::ostringstream os;
        os << "(" << yi << "," << xi << ":" << base_->basis_label(cx[static_cast<size_t>(xi)], cy[static_cast<size_t>(yi)], n, i - off)
           << ")";
        return os.str();
      }
      off += d;
    }
  return "?";
}

Morphism AdditiveClosureCategory::inject(const Morphism& f, int X, int xi, int Y, int yi) const {
  if (f.cat.get() != base_.get()) throw PreconditionError("inject: morphism not from the base category");
  Vec v(field(), hom_dim(X, Y, f.deg));
  int off = block_offset(X, Y, f.deg, xi, yi);
  for (int i = 0; i < f.coeffs.size(); ++i) v[off + i] = f.coeffs[i];
  return Morphism(shared_from_this(), X, Y, f.deg, std::move(v));
}

Matrix AdditiveClosureCategory::block_of(const Morphism& f, int xi, int yi) const {
  // single block as a column vector shaped matrix (coefficients of the base hom)
  const auto& cx = cells(f.src);
  const auto& cy = cells(f.tgt);
  int d = base_->hom_dim(cx[static_cast<size_t>(xi)], cy[static_cast<size_t>(yi)], f.deg);
  Matrix m(field(), d, 1);
  int off = block_offset(f.src, f.tgt, f.deg, xi, yi);
  for (int i = 0; i < d; ++i) m.set(i, 0, f.coeffs[off + i]);
  return m;
}

MorCategory::MorCategory(CatPtr base, std::vector<Morphism> objects) : base_(std::move(base)), objs_(std::move(objects)) {
  for (const auto& f : objs_) {
    if (f.cat.get() != base_.get()) throw PreconditionError("Mor object not from the base category");
    if (f.deg != 0) throw PreconditionError("Mor objects must have degree 0");
    if (!base_->diff(f).is_zero()) throw PreconditionError("Mor objects must be closed");
  }
}

std::string MorCategory::object_name(int x) const {
  const Morphism& f = objs_[static_cast<size_t>(x)];
  return "(" + base_->object_name(f.src) + "->" + base_->object_name(f.tgt) + ")#" + std::to_string(x);
}

DegreeWindow MorCategory::hom_window(int x, int y) const {
  const Morphism& f = objs_[static_cast<size_t>(x)];
  const Morphism& g = objs_[static_cast<size_t>(y)];
  DegreeWindow wj = base_->hom_window(f.src, g.src);
  DegreeWindow wl = base_->hom_window(f.tgt, g.tgt);
  DegreeWindow wh = base_->hom_window(f.src, g.tgt);
  int lo = std::max({wj.lo, wl.lo, wh.lo + 1});
  int hi = std::min({wj.hi, wl.hi, wh.hi + 1});
  return DegreeWindow(lo, hi);
}

int MorCategory::hom_dim(int x, int y, int n) const {
  if (!hom_window(x, y).contains(n)) throw WindowError("hom degree outside window");
  const Morphism& f = objs_[static_cast<size_t>(x)];
  const Morphism& g = objs_[static_cast<size_t>(y)];
  return base_->hom_dim(f.src, g.src, n) + base_->hom_dim(f.src, g.tgt, n - 1) + base_->hom_dim(f.tgt, g.tgt, n);
}

MorCategory::Parts MorCategory::parts(const Morphism& m) const {
  const Morphism& f = objs_[static_cast<size_t>(m.src)];
  const Morphism& g = objs_[static_cast<size_t>(m.tgt)];
  int dj = base_->hom_dim(f.src, g.src, m.deg);
  int dh = base_->hom_dim(f.src, g.tgt, m.deg - 1);
  int dl = base_->hom_dim(f.tgt, g.tgt, m.deg);
  return Parts{base_->morphism(f.src, g.src, m.deg, m.coeffs.slice(0, dj)),
               base_->morphism(f.src, g.tgt, m.deg - 1, m.coeffs.slice(dj, dh)),
               base_->morphism(f.tgt, g.tgt, m.deg, m.coeffs.slice(dj + dh, dl))};
}

Morphism MorCategory::assemble(int x, int y, const Morphism& j, const Morphism& h, const Morphism& l) const {
  Vec v = j.coeffs.concat(h.coeffs).concat(l.coeffs);
  return Morphism(shared_from_this(), x, y, j.deg, std::move(v));
}

Matrix MorCategory::hom_diff(int x, int y, int n) const {
  const Field& fl = field();
  const Morphism& f = objs_[static_cast<size_t>(x)];
  const Morphism& g = objs_[static_cast<size_t>(y)];
  int dj = base_->hom_dim(f.src, g.src, n);
  int dh = base_->hom_dim(f.src, g.tgt, n - 1);
  int dl = base_->hom_dim(f.tgt, g.tgt, n);
  int ej = base_->hom_dim(f.src, g.src, n + 1);
  int eh = base_->hom_dim(f.src, g.tgt, n);
  int el = base_->hom_dim(f.tgt, g.tgt, n + 1);
  Matrix out(fl, ej + eh + el, dj + dh + dl);
  // j-part: -d(j)
  out.set_block(0, 0, base_->hom_diff(f.src, g.src, n).neg());
  // h-part of the middle row: d(h) + f' j − (−1)^n l f
  out.set_block(ej, dj, base_->hom_diff(f.src, g.tgt, n - 1));
  out.set_block(ej, 0, base_->postcompose_matrix(g, f.src, n));  // f' ∘ j
  Scalar sgn = (n % 2 == 0) ? fl.neg(fl.one()) : fl.one();
  out.set_block(ej, dj + dh, base_->precompose_matrix(f, g.tgt, n).scale(sgn));  // −(−1)^n l ∘ f
  // l-part: d(l)
  out.set_block(ej + eh, dj + dh, base_->hom_diff(f.tgt, g.tgt, n));
  return out;
}

Vec MorCategory::identity_coeffs(int x) const {
  const Morphism& f = objs_[static_cast<size_t>(x)];
  Vec j = base_->identity_coeffs(f.src);
  Vec h(field(), base_->hom_dim(f.src, f.tgt, -1));
  Vec l = base_->identity_coeffs(f.tgt);
  return j.concat(h).concat(l);
}

Vec MorCategory::compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const {
  Morphism mf = basis_morphism(x, y, q, fi);
  Morphism mg = basis_morphism(y, z, p, gi);
  Parts pf = parts(mf);
  Parts pg = parts(mg);
  Morphism j = base_->compose(pg.j, pf.j);
  Morphism h = base_->compose(pg.h, pf.j).add(base_->compose(pg.l, pf.h));
  Morphism l = base_->compose(pg.l, pf.l);
  return j.coeffs.concat(h.coeffs).concat(l.coeffs);
}

}  // namespace dgx
