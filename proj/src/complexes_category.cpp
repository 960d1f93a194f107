#include "dgx/complexes_category.hpp"

#include <sstream>

namespace dgx {

int ProjComplex::slot_count(int d) const {
  if (d < lo || d > hi) return 0;
  return static_cast<int>(slots[static_cast<size_t>(d - lo)].size());
}

int ProjComplex::slot_vertex(int d, int i) const { return slots[static_cast<size_t>(d - lo)][static_cast<size_t>(i)]; }

Vec ProjComplex::diff_entry(const QuiverAlgebra& alg, int d, int i, int j) const {
  auto it = diff.find({d, i, j});
  if (it != diff.end()) return it->second;
  return Vec(alg.field(), alg.dim(slot_vertex(d, j), slot_vertex(d + 1, i)));
}

std::shared_ptr<ComplexesCategory> ComplexesCategory::build(std::shared_ptr<const QuiverAlgebra> alg, int deg_lo,
                                                            int deg_hi, std::vector<ProjComplex> objects,
                                                            DegreeWindow window) {
  auto cat = std::shared_ptr<ComplexesCategory>(
      new ComplexesCategory(std::move(alg), deg_lo, deg_hi, std::move(objects), window));
  cat->validate_objects();
  return cat;
}

void ComplexesCategory::validate_objects() const {
  for (const auto& obj : objects_) {
    if (obj.lo < deg_lo_ || obj.hi > deg_hi_) throw PreconditionError("object '" + obj.name + "' outside degree range");
    if (static_cast<int>(obj.slots.size()) != obj.hi - obj.lo + 1)
      throw PreconditionError("object '" + obj.name + "' has inconsistent slot data");
    // d^2 = 0 over the algebra
    for (int d = obj.lo; d + 2 <= obj.hi; ++d)
      for (int i = 0; i < obj.slot_count(d + 2); ++i)
        for (int j = 0; j < obj.slot_count(d); ++j) {
          Vec acc(alg_->field(), alg_->dim(obj.slot_vertex(d, j), obj.slot_vertex(d + 2, i)));
          for (int k = 0; k < obj.slot_count(d + 1); ++k) {
            Vec a = obj.diff_entry(*alg_, d + 1, i, k);
            Vec b = obj.diff_entry(*alg_, d, k, j);
            // (a ∘ b): expand bilinearly over the algebra basis
            for (int ai = 0; ai < a.size(); ++ai) {
              if (alg_->field().is_zero(a[ai])) continue;
              for (int bi = 0; bi < b.size(); ++bi) {
                if (alg_->field().is_zero(b[bi])) continue;
                Vec prod = alg_->mult_basis(obj.slot_vertex(d, j), obj.slot_vertex(d + 1, k), obj.slot_vertex(d + 2, i),
                                            ai, bi);
                acc = acc.add(prod.scale(alg_->field().mul(a[ai], b[bi])));
              }
            }
          }
          if (!acc.is_zero()) throw PreconditionError("object '" + obj.name + "': d^2 != 0");
        }
  }
}

const std::vector<ComplexesCategory::BasisElt>& ComplexesCategory::basis(int x, int y, int n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_tuple(x, y, n);
  auto it = basis_cache_.find(key);
  if (it != basis_cache_.end()) return it->second;
  std::vector<BasisElt> out;
  const ProjComplex& X = objects_[static_cast<size_t>(x)];
  const ProjComplex& Y = objects_[static_cast<size_t>(y)];
  for (int m = X.lo; m <= X.hi; ++m) {
    if (m + n < Y.lo || m + n > Y.hi) continue;
    for (int j = 0; j < X.slot_count(m); ++j)
      for (int i = 0; i < Y.slot_count(m + n); ++i) {
        int d = alg_->dim(X.slot_vertex(m, j), Y.slot_vertex(m + n, i));
        for (int b = 0; b < d; ++b) out.push_back(BasisElt{m, j, i, b});
      }
  }
  auto [pos, ok] = basis_cache_.emplace(key, std::move(out));
  (void)ok;
  return pos->second;
}

int ComplexesCategory::hom_dim(int x, int y, int n) const {
  if (!win_.contains(n)) throw WindowError("hom degree outside window");
  return static_cast<int>(basis(x, y, n).size());
}

Matrix ComplexesCategory::hom_diff(int x, int y, int n) const {
  if (!win_.contains(n) || !win_.contains(n + 1)) throw WindowError("hom_diff outside window");
  const Field& f = alg_->field();
  const ProjComplex& X = objects_[static_cast<size_t>(x)];
  const ProjComplex& Y = objects_[static_cast<size_t>(y)];
  const auto& src = basis(x, y, n);
  const auto& tgt = basis(x, y, n + 1);
  auto tgt_index = [&](int m, int j, int i) {
    // return base offset of (m,j,i) block and algebra dim
    int off = 0;
    for (const auto& e : tgt) {
      if (e.m == m && e.j == j && e.i == i) return std::make_pair(off, alg_->dim(X.slot_vertex(m, j), Y.slot_vertex(m + n + 1, i)));
      ++off;
    }
    return std::make_pair(-1, 0);
  };
  Matrix out(f, static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  Scalar sign = (n % 2 == 0) ? f.neg(f.one()) : f.one();  // −(−1)^n
  for (size_t c = 0; c < src.size(); ++c) {
    const BasisElt& e = src[c];
    int xv = X.slot_vertex(e.m, e.j);
    int yv = Y.slot_vertex(e.m + n, e.i);
    // d_Y ∘ f: lands in block (m, j, i') at slot degree m+n+1
    if (e.m + n + 1 <= Y.hi) {
      for (int i2 = 0; i2 < Y.slot_count(e.m + n + 1); ++i2) {
        Vec dy = Y.diff_entry(*alg_, e.m + n, i2, e.i);
        for (int di = 0; di < dy.size(); ++di) {
          if (f.is_zero(dy[di])) continue;
          Vec prod = alg_->mult_basis(xv, yv, Y.slot_vertex(e.m + n + 1, i2), di, e.b);
          auto [off, len] = tgt_index(e.m, e.j, i2);
          if (off < 0) continue;
          for (int t = 0; t < len; ++t)
            out.set(off + t, static_cast<int>(c), f.add(out.at(off + t, static_cast<int>(c)), f.mul(dy[di], prod[t])));
        }
      }
    }
    // −(−1)^n f ∘ d_X: lands in block (m-1, j', i)
    if (e.m - 1 >= X.lo) {
      for (int j2 = 0; j2 < X.slot_count(e.m - 1); ++j2) {
        Vec dx = X.diff_entry(*alg_, e.m - 1, e.j, j2);
        for (int di = 0; di < dx.size(); ++di) {
          if (f.is_zero(dx[di])) continue;
          Vec prod = alg_->mult_basis(X.slot_vertex(e.m - 1, j2), xv, yv, e.b, di);
          auto [off, len] = tgt_index(e.m - 1, j2, e.i);
          if (off < 0) continue;
          for (int t = 0; t < len; ++t)
            out.set(off + t, static_cast<int>(c),
                    f.add(out.at(off + t, static_cast<int>(c)), f.mul(sign, f.mul(dx[di], prod[t]))));
        }
      }
    }
  }
  return out;
}

Vec ComplexesCategory::identity_coeffs(int x) const {
  const Field& f = alg_->field();
  const ProjComplex& X = objects_[static_cast<size_t>(x)];
  const auto& b0 = basis(x, x, 0);
  Vec v(f, static_cast<int>(b0.size()));
  for (size_t c = 0; c < b0.size(); ++c) {
    const BasisElt& e = b0[c];
    if (e.i != e.j) continue;
    Vec unit = alg_->unit(X.slot_vertex(e.m, e.j));
    v[static_cast<int>(c)] = unit[e.b];
  }
  return v;
}

Vec ComplexesCategory::compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const {
  const Field& f = alg_->field();
  const ProjComplex& X = objects_[static_cast<size_t>(x)];
  const ProjComplex& Y = objects_[static_cast<size_t>(y)];
  const ProjComplex& Z = objects_[static_cast<size_t>(z)];
  const auto& bf = basis(x, y, q);
  const auto& bg = basis(y, z, p);
  const auto& br = basis(x, z, p + q);
  const BasisElt& ef = bf[static_cast<size_t>(fi)];
  const BasisElt& eg = bg[static_cast<size_t>(gi)];
  Vec out(f, static_cast<int>(br.size()));
  // g^{m+q} ∘ f^m: need matching middle slot
  if (eg.m != ef.m + q || eg.j != ef.i) return out;
  Vec prod = alg_->mult_basis(X.slot_vertex(ef.m, ef.j), Y.slot_vertex(eg.m, eg.j), Z.slot_vertex(eg.m + p, eg.i),
                              eg.b, ef.b);
  int off = 0;
  for (const auto& e : br) {
    if (e.m == ef.m && e.j == ef.j && e.i == eg.i) break;
    ++off;
  }
  for (int t = 0; t < prod.size(); ++t) out[off + t] = prod[t];
  return out;
}

std::string ComplexesCategory::basis_label(int x, int y, int n, int i) const {
  const ProjComplex& X = objects_[static_cast<size_t>(x)];
  const ProjComplex& Y = objects_[static_cast<size_t>(y)];
  const BasisElt& e = basis(x, y, n)[static_cast<size_t>(i)];
  std::ostringstream os;
  os << "[" << e.m << ":" << alg_->basis_label(X.slot_vertex(e.m, e.j), Y.slot_vertex(e.m + n, e.i), e.b) << ":"
     << e.j << "->" << e.i << "]";
  return os.str();
}

}  // namespace dgx
