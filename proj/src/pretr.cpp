#include "dgx/pretr.hpp"

#include <algorithm>
#include <sstream>

namespace dgx {

void verify_mc(const DgCategory& base, const TwistedComplex& x) {
  const Field& f = base.field();
  // convention matching the printed totalization: q_{ij} != 0 only for i > j,
  // q_{ij} : entry_j -> entry_i of degree r_i - r_j + 1
  for (const auto& [key, m] : x.q) {
    auto [i, j] = key;
    if (i <= j) throw PreconditionError("twisted complex: q not strictly triangular");
    const TwEntry& ei = x.entries[static_cast<size_t>(i)];
    const TwEntry& ej = x.entries[static_cast<size_t>(j)];
    if (m.src != ej.obj || m.tgt != ei.obj || m.deg != ei.shift - ej.shift + 1)
      throw PreconditionError("twisted complex: q entry has wrong endpoints or degree");
  }
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < i; ++j) {
      const TwEntry& ei = x.entries[static_cast<size_t>(i)];
      const TwEntry& ej = x.entries[static_cast<size_t>(j)];
      Morphism acc = base.zero_morphism(ej.obj, ei.obj, ei.shift - ej.shift + 2);
      auto it = x.q.find({i, j});
      if (it != x.q.end()) {
        Scalar sign = (ei.shift % 2 == 0) ? f.one() : f.neg(f.one());
        acc = acc.add(base.diff(it->second).scale(sign));
      }
      for (int k = j + 1; k < i; ++k) {
        auto a = x.q.find({i, k});
        auto b = x.q.find({k, j});
        if (a != x.q.end() && b != x.q.end()) acc = acc.add(base.compose(a->second, b->second));
      }
      if (!acc.is_zero()) throw PreconditionError("twisted complex: dq + q^2 != 0");
    }
}

TwistedComplex tw_single(const CatPtr& base, int obj, int shift, const std::string& name) {
  TwistedComplex t;
  t.name = name.empty() ? base->object_name(obj) + (shift == 0 ? "" : "[" + std::to_string(shift) + "]") : name;
  t.entries.push_back(TwEntry{obj, shift});
  return t;
}

TwistedComplex tw_shifted(const DgCategory& base, const TwistedComplex& x, int k) {
  const Field& f = base.field();
  TwistedComplex t;
  t.name = x.name + "[" + std::to_string(k) + "]";
  for (const auto& e : x.entries) t.entries.push_back(TwEntry{e.obj, e.shift + k});
  Scalar sign = (k % 2 == 0) ? f.one() : f.neg(f.one());
  for (const auto& [key, m] : x.q) t.q.emplace(key, m.scale(sign));
  verify_mc(base, t);
  return t;
}

TwistedComplex tw_totalize_3term(const Morphism& f, const Morphism& j, const Morphism& h) {
  const DgCategory& cat = *f.cat;
  const Field& fl = cat.field();
  if (f.deg != 0 || j.deg != 0 || h.deg != -1) throw PreconditionError("totalize_3term: wrong degrees");
  if (f.tgt != j.src || h.src != f.src || h.tgt != j.tgt) throw PreconditionError("totalize_3term: endpoint mismatch");
  if (!cat.diff(f).is_zero() || !cat.diff(j).is_zero()) throw PreconditionError("totalize_3term: f, j must be closed");
  if (!(cat.diff(h) == cat.compose(j, f).neg())) throw PreconditionError("totalize_3term: d(h) != -jf");
  TwistedComplex t;
  t.name = "Tot(" + cat.object_name(f.src) + "," + cat.object_name(f.tgt) + "," + cat.object_name(j.tgt) + ")";
  t.entries.push_back(TwEntry{f.src, 2});
  t.entries.push_back(TwEntry{f.tgt, 1});
  t.entries.push_back(TwEntry{j.tgt, 0});
  t.q.emplace(std::make_pair(1, 0), f.neg());
  t.q.emplace(std::make_pair(2, 0), h);
  t.q.emplace(std::make_pair(2, 1), j.neg());
  (void)fl;
  verify_mc(cat, t);
  return t;
}

std::shared_ptr<PretrCategory> PretrCategory::build(CatPtr base, std::vector<TwistedComplex> objs) {
  for (const auto& o : objs) verify_mc(*base, o);
  return std::shared_ptr<PretrCategory>(new PretrCategory(std::move(base), std::move(objs)));
}

std::string PretrCategory::object_name(int x) const {
  const TwistedComplex& t = objs_[static_cast<size_t>(x)];
  if (!t.name.empty()) return t.name;
  return "tw" + std::to_string(x);
}

DegreeWindow PretrCategory::hom_window(int x, int y) const {
  const TwistedComplex& X = objs_[static_cast<size_t>(x)];
  const TwistedComplex& Y = objs_[static_cast<size_t>(y)];
  bool have = false;
  int lo = -64, hi = 64;
  for (const auto& ex : X.entries)
    for (const auto& ey : Y.entries) {
      DegreeWindow bw = base_->hom_window(ex.obj, ey.obj);
      int delta = ey.shift - ex.shift;  // component degree = m + s_i − r_j, s_i = ey.shift? see below
      // component of degree m sits in Hom^{m + ey.shift − ex.shift}?? fixed in hom_dim; here invert
      int l = bw.lo - (ey.shift - ex.shift);
      int h = bw.hi - (ey.shift - ex.shift);
      (void)delta;
      if (!have) {
        lo = l;
        hi = h;
        have = true;
      } else {
        lo = std::max(lo, l);
        hi = std::min(hi, h);
      }
    }
  if (!have) return DegreeWindow(-64, 64);
  if (lo > hi) throw WindowError("pretr hom window is empty; enlarge the base window");
  return DegreeWindow(lo, hi);
}

int PretrCategory::block_offset(int x, int y, int n, int i, int j) const {
  const TwistedComplex& X = objs_[static_cast<size_t>(x)];
  const TwistedComplex& Y = objs_[static_cast<size_t>(y)];
  int off = 0;
  for (int ii = 0; ii < Y.size(); ++ii)
    for (int jj = 0; jj < X.size(); ++jj) {
      if (ii == i && jj == j) return off;
      off += base_->hom_dim(X.entries[static_cast<size_t>(jj)].obj, Y.entries[static_cast<size_t>(ii)].obj,
                            n + Y.entries[static_cast<size_t>(ii)].shift - X.entries[static_cast<size_t>(jj)].shift);
    }
  throw DimensionError("pretr block out of range");
}

int PretrCategory::hom_dim(int x, int y, int n) const {
  if (!hom_window(x, y).contains(n)) throw WindowError("pretr hom degree outside window");
  const TwistedComplex& X = objs_[static_cast<size_t>(x)];
  const TwistedComplex& Y = objs_[static_cast<size_t>(y)];
  int d = 0;
  for (const auto& ey : Y.entries)
    for (const auto& ex : X.entries) d += base_->hom_dim(ex.obj, ey.obj, n + ey.shift - ex.shift);
  return d;
}

Morphism PretrCategory::component(const Morphism& m, int i, int j) const {
  const TwistedComplex& X = objs_[static_cast<size_t>(m.src)];
  const TwistedComplex& Y = objs_[static_cast<size_t>(m.tgt)];
  const TwEntry& ex = X.entries[static_cast<size_t>(j)];
  const TwEntry& ey = Y.entries[static_cast<size_t>(i)];
  int deg = m.deg + ey.shift - ex.shift;
  int d = base_->hom_dim(ex.obj, ey.obj, deg);
  int off = block_offset(m.src, m.tgt, m.deg, i, j);
  return base_->morphism(ex.obj, ey.obj, deg, m.coeffs.slice(off, d));
}

Morphism PretrCategory::from_components(int x, int y, int deg, const std::map<std::pair<int, int>, Morphism>& comps) const {
  Vec v(field(), hom_dim(x, y, deg));
  for (const auto& [key, m] : comps) {
    auto [i, j] = key;
    int off = block_offset(x, y, deg, i, j);
    for (int t = 0; t < m.coeffs.size(); ++t) v[off + t] = m.coeffs[t];
  }
  return Morphism(shared_from_this(), x, y, deg, std::move(v));
}

Matrix PretrCategory::hom_diff(int x, int y, int n) const {
  const Field& f = field();
  const TwistedComplex& X = objs_[static_cast<size_t>(x)];
  const TwistedComplex& Y = objs_[static_cast<size_t>(y)];
  Matrix out(f, hom_dim(x, y, n + 1), hom_dim(x, y, n));
  Scalar msign = (n % 2 == 0) ? f.neg(f.one()) : f.one();  // −(−1)^n
  for (int i = 0; i < Y.size(); ++i)
    for (int j = 0; j < X.size(); ++j) {
      const TwEntry& ex = X.entries[static_cast<size_t>(j)];
      const TwEntry& ey = Y.entries[static_cast<size_t>(i)];
      int deg = n + ey.shift - ex.shift;
      int dsrc = base_->hom_dim(ex.obj, ey.obj, deg);
      if (dsrc == 0) continue;
      int coff = block_offset(x, y, n, i, j);
      // (−1)^{s_i} d(f_{ij}) stays in block (i,j)
      Scalar dsign = (ey.shift % 2 == 0) ? f.one() : f.neg(f.one());
      Matrix dmat = base_->hom_diff(ex.obj, ey.obj, deg).scale(dsign);
      out.set_block(block_offset(x, y, n + 1, i, j), coff, dmat);
      // Σ_k q^Y_{i2,i} f_{i,j} contributes to block (i2, j) for i2 > i
      for (int i2 = i + 1; i2 < Y.size(); ++i2) {
        auto qit = Y.q.find({i2, i});
        if (qit == Y.q.end()) continue;
        Matrix post = base_->postcompose_matrix(qit->second, ex.obj, deg);
        out.set_block(block_offset(x, y, n + 1, i2, j), coff, post);
      }
      // −(−1)^m f_{i,j} q^X_{j,j2} contributes to block (i, j2) for j2 < j
      for (int j2 = 0; j2 < j; ++j2) {
        auto qit = X.q.find({j, j2});
        if (qit == X.q.end()) continue;
        Matrix pre = base_->precompose_matrix(qit->second, ey.obj, deg).scale(msign);
        out.set_block(block_offset(x, y, n + 1, i, j2), coff, pre);
      }
    }
  return out;
}

Vec PretrCategory::identity_coeffs(int x) const {
  const TwistedComplex& X = objs_[static_cast<size_t>(x)];
  Vec v(field(), hom_dim(x, x, 0));
  for (int i = 0; i < X.size(); ++i) {
    Vec idb = base_->identity_coeffs(X.entries[static_cast<size_t>(i)].obj);
    int off = block_offset(x, x, 0, i, i);
    for (int t = 0; t < idb.size(); ++t) v[off + t] = idb[t];
  }
  return v;
}

Vec PretrCategory::compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const {
  const TwistedComplex& X = objs_[static_cast<size_t>(x)];
  const TwistedComplex& Y = objs_[static_cast<size_t>(y)];
  const TwistedComplex& Z = objs_[static_cast<size_t>(z)];
  const Field& f = field();
  // locate f-block (iy, jx) and g-block (iz, jy)
  auto locate = [&](const TwistedComplex& S, const TwistedComplex& T, int n, int idx, int& ti, int& sj, int& b) {
    int off = 0;
    for (int ii = 0; ii < T.size(); ++ii)
      for (int jj = 0; jj < S.size(); ++jj) {
        int d = base_->hom_dim(S.entries[static_cast<size_t>(jj)].obj, T.entries[static_cast<size_t>(ii)].obj,
                               n + T.entries[static_cast<size_t>(ii)].shift - S.entries[static_cast<size_t>(jj)].shift);
        if (idx < off + d) {
          ti = ii;
          sj = jj;
          b = idx - off;
          return;
        }
        off += d;
      }
    throw DimensionError("pretr basis index out of range");
  };
  int fyi, fxj, fb, gzi, gyj, gb;
  locate(X, Y, q, fi, fyi, fxj, fb);
  locate(Y, Z, p, gi, gzi, gyj, gb);
  Vec out(f, hom_dim(x, z, p + q));
  if (fyi != gyj) return out;
  const TwEntry& ex = X.entries[static_cast<size_t>(fxj)];
  const TwEntry& ey = Y.entries[static_cast<size_t>(fyi)];
  const TwEntry& ez = Z.entries[static_cast<size_t>(gzi)];
  Morphism mf = base_->basis_morphism(ex.obj, ey.obj, q + ey.shift - ex.shift, fb);
  Morphism mg = base_->basis_morphism(ey.obj, ez.obj, p + ez.shift - ey.shift, gb);
  Morphism r = base_->compose(mg, mf);
  int off = block_offset(x, z, p + q, gzi, fxj);
  for (int t = 0; t < r.coeffs.size(); ++t) out[off + t] = r.coeffs[t];
  return out;
}

std::string PretrCategory::basis_label(int x, int y, int n, int i) const {
  const TwistedComplex& X = objs_[static_cast<size_t>(x)];
  const TwistedComplex& Y = objs_[static_cast<size_t>(y)];
  int off = 0;
  for (int ii = 0; ii < Y.size(); ++ii)
    for (int jj = 0; jj < X.size(); ++jj) {
      int deg = n + Y.entries[static_cast<size_t>(ii)].shift - X.entries[static_cast<size_t>(jj)].shift;
      int d = base_->hom_dim(X.entries[static_cast<size_t>(jj)].obj, Y.entries[static_cast<size_t>(ii)].obj, deg);
      if (i < off + d) {
        std::ostringstream os;
        os << "{" << ii << "," << jj << ":"
           << base_->basis_label(X.entries[static_cast<size_t>(jj)].obj, Y.entries[static_cast<size_t>(ii)].obj, deg,
                                 i - off)
           << "}";
        return os.str();
      }
      off += d;
    }
  return "?";
}

TwistedComplex PretrCategory::cone_object(const Morphism& f, const std::string& name) const {
  if (f.deg != 0) throw PreconditionError("cone needs a degree-0 morphism");
  if (!diff(f).is_zero()) throw PreconditionError("cone needs a closed morphism");
  const TwistedComplex& X = objs_[static_cast<size_t>(f.src)];
  const TwistedComplex& Y = objs_[static_cast<size_t>(f.tgt)];
  const Field& fl = field();
  TwistedComplex t;
  t.name = name.empty() ? "Cone(" + object_name(f.src) + "->" + object_name(f.tgt) + ")" : name;
  for (const auto& e : X.entries) t.entries.push_back(TwEntry{e.obj, e.shift + 1});
  for (const auto& e : Y.entries) t.entries.push_back(TwEntry{e.obj, e.shift});
  int nx = X.size();
  for (const auto& [key, m] : X.q) t.q.emplace(key, m.scale(fl.neg(fl.one())));
  for (const auto& [key, m] : Y.q) t.q.emplace(std::make_pair(key.first + nx, key.second + nx), m);
  for (int i = 0; i < Y.size(); ++i)
    for (int j = 0; j < nx; ++j) {
      Morphism c = component(f, i, j);
      if (!c.is_zero()) t.q.emplace(std::make_pair(nx + i, j), c);
    }
  verify_mc(*base_, t);
  return t;
}

}  // namespace dgx
