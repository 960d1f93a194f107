#include "dgx/category.hpp"

#include <sstream>

namespace dgx {

Morphism::Morphism(CatPtr c, int s, int t, int d, Vec v) : cat(std::move(c)), src(s), tgt(t), deg(d), coeffs(std::move(v)) {
  if (coeffs.size() != cat->hom_dim(src, tgt, deg)) throw DimensionError("morphism coefficient size mismatch");
}

Morphism Morphism::add(const Morphism& o) const {
  if (src != o.src || tgt != o.tgt || deg != o.deg || cat.get() != o.cat.get())
    throw DimensionError("morphism add: endpoint/degree mismatch");
  return Morphism(cat, src, tgt, deg, coeffs.add(o.coeffs));
}

Morphism Morphism::sub(const Morphism& o) const { return add(o.neg()); }

Morphism Morphism::neg() const { return Morphism(cat, src, tgt, deg, coeffs.neg()); }

Morphism Morphism::scale(const Scalar& c) const { return Morphism(cat, src, tgt, deg, coeffs.scale(c)); }

bool Morphism::operator==(const Morphism& o) const {
  return cat.get() == o.cat.get() && src == o.src && tgt == o.tgt && deg == o.deg && coeffs == o.coeffs;
}

std::string DgCategory::basis_label(int x, int y, int n, int i) const {
  std::ostringstream os;
  os << "e" << n << "_" << i;
  (void)x;
  (void)y;
  return os.str();
}

Complex DgCategory::hom_complex(int x, int y) const {
  DegreeWindow w = hom_window(x, y);
  Complex c(field(), w);
  for (int n = w.lo; n <= w.hi; ++n) c.set_dim(n, hom_dim(x, y, n));
  for (int n = w.lo; n < w.hi; ++n) c.set_diff(n, hom_diff(x, y, n));
  return c;
}

Morphism DgCategory::zero_morphism(int x, int y, int deg) const {
  return Morphism(shared_from_this(), x, y, deg, Vec(field(), hom_dim(x, y, deg)));
}

Morphism DgCategory::identity(int x) const {
  return Morphism(shared_from_this(), x, x, 0, identity_coeffs(x));
}

Morphism DgCategory::basis_morphism(int x, int y, int deg, int i) const {
  return Morphism(shared_from_this(), x, y, deg, Vec::unit(field(), hom_dim(x, y, deg), i));
}

Morphism DgCategory::morphism(int x, int y, int deg, Vec coeffs) const {
  return Morphism(shared_from_this(), x, y, deg, std::move(coeffs));
}

const Matrix& DgCategory::compose_tensor(int x, int y, int z, int p, int q) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto key = std::make_tuple(x, y, z, p, q);
  auto it = compose_cache_.find(key);
  if (it != compose_cache_.end()) return it->second;
  int dp = hom_dim(y, z, p), dq = hom_dim(x, y, q), dr = hom_dim(x, z, p + q);
  Matrix t(field(), dr, dp * dq);
  for (int gi = 0; gi < dp; ++gi)
    for (int fi = 0; fi < dq; ++fi) {
      Vec col = compose_basis(x, y, z, p, q, gi, fi);
      if (col.size() != dr) throw DimensionError("compose_basis size mismatch");
      for (int r = 0; r < dr; ++r) t.set(r, gi * dq + fi, col[r]);
    }
  auto [pos, ok] = compose_cache_.emplace(key, std::move(t));
  (void)ok;
  return pos->second;
}

Morphism DgCategory::compose(const Morphism& g, const Morphism& f) const {
  if (f.tgt != g.src) throw DimensionError("compose: endpoint mismatch");
  const Field& fl = field();
  const Matrix& t = compose_tensor(f.src, f.tgt, g.tgt, g.deg, f.deg);
  int dq = f.coeffs.size();
  Vec kron(fl, g.coeffs.size() * dq);
  for (int gi = 0; gi < g.coeffs.size(); ++gi)
    for (int fi = 0; fi < dq; ++fi) kron[gi * dq + fi] = fl.mul(g.coeffs[gi], f.coeffs[fi]);
  return Morphism(shared_from_this(), f.src, g.tgt, f.deg + g.deg, t.apply(kron));
}

Morphism DgCategory::diff(const Morphism& f) const {
  Matrix d = hom_diff(f.src, f.tgt, f.deg);
  return Morphism(shared_from_this(), f.src, f.tgt, f.deg + 1, d.apply(f.coeffs));
}

Matrix DgCategory::postcompose_matrix(const Morphism& f, int a, int q) const {
  const Matrix& t = compose_tensor(a, f.src, f.tgt, f.deg, q);
  int dq = hom_dim(a, f.src, q);
  Matrix r(field(), hom_dim(a, f.tgt, q + f.deg), dq);
  for (int fi = 0; fi < dq; ++fi) {
    Vec kron(field(), f.coeffs.size() * dq);
    for (int gi = 0; gi < f.coeffs.size(); ++gi) kron[gi * dq + fi] = f.coeffs[gi];
    Vec col = t.apply(kron);
    for (int i = 0; i < col.size(); ++i) r.set(i, fi, col[i]);
  }
  return r;
}

Matrix DgCategory::precompose_matrix(const Morphism& f, int a, int q) const {
  const Matrix& t = compose_tensor(f.src, f.tgt, a, q, f.deg);
  int dq = hom_dim(f.tgt, a, q);
  Matrix r(field(), hom_dim(f.src, a, q + f.deg), dq);
  for (int gi = 0; gi < dq; ++gi) {
    Vec kron(field(), dq * f.coeffs.size());
    for (int fi = 0; fi < f.coeffs.size(); ++fi) kron[gi * f.coeffs.size() + fi] = f.coeffs[fi];
    Vec col = t.apply(kron);
    for (int i = 0; i < col.size(); ++i) r.set(i, gi, col[i]);
  }
  return r;
}

void DgCategory::check_laws(const CheckOptions& opt) const {
  const Field& fl = field();
  int nobj = num_objects();
  std::mt19937_64 rng(opt.seed);
  auto random_vec = [&](int n) {
    Vec v(fl, n);
    for (int i = 0; i < n; ++i) {
      if (fl.is_prime_field())
        v[i] = fl.from_long(static_cast<long>(rng() % static_cast<unsigned long>(fl.order())));
      else
        v[i] = fl.from_long(static_cast<long>(rng() % 7) - 3);
    }
    return v;
  };

  // unit laws
  for (int x = 0; x < nobj; ++x)
    for (int y = 0; y < nobj; ++y) {
      DegreeWindow w = hom_window(x, y);
      for (int n = w.lo; n <= w.hi; ++n) {
        int d = hom_dim(x, y, n);
        for (int i = 0; i < d; ++i) {
          Morphism f = basis_morphism(x, y, n, i);
          if (!(compose(identity(y), f) == f)) throw PreconditionError("unit law fails (left)");
          if (!(compose(f, identity(x)) == f)) throw PreconditionError("unit law fails (right)");
        }
      }
    }

  // graded Leibniz: d(g f) = d(g) f + (−1)^{|g|} g d(f)
  long leibniz_work = 0;
  for (int x = 0; x < nobj && leibniz_work >= 0; ++x)
    for (int y = 0; y < nobj; ++y)
      for (int z = 0; z < nobj; ++z) {
        DegreeWindow wq = hom_window(x, y), wp = hom_window(y, z), wr = hom_window(x, z);
        for (int q = wq.lo; q < wq.hi; ++q)
          for (int p = wp.lo; p < wp.hi; ++p) {
            if (p + q < wr.lo || p + q + 1 > wr.hi) continue;
            leibniz_work += static_cast<long>(hom_dim(x, y, q)) * hom_dim(y, z, p);
          }
      }
  bool leibniz_exhaustive = leibniz_work <= opt.exhaustive_limit;

  auto check_leibniz = [&](const Morphism& g, const Morphism& f) {
    Morphism lhs = diff(compose(g, f));
    Scalar sign = (g.deg % 2 == 0) ? fl.one() : fl.neg(fl.one());
    Morphism rhs = compose(diff(g), f).add(compose(g, diff(f)).scale(sign));
    if (!(lhs == rhs)) throw PreconditionError("graded Leibniz rule fails");
  };

  for (int x = 0; x < nobj; ++x)
    for (int y = 0; y < nobj; ++y)
      for (int z = 0; z < nobj; ++z) {
        DegreeWindow wq = hom_window(x, y), wp = hom_window(y, z), wr = hom_window(x, z);
        for (int q = wq.lo; q < wq.hi; ++q)
          for (int p = wp.lo; p < wp.hi; ++p) {
            if (p + q < wr.lo || p + q + 1 > wr.hi) continue;
            int dq = hom_dim(x, y, q), dp = hom_dim(y, z, p);
            if (dq == 0 || dp == 0) continue;
            if (leibniz_exhaustive) {
              for (int gi = 0; gi < dp; ++gi)
                for (int fi = 0; fi < dq; ++fi)
                  check_leibniz(basis_morphism(y, z, p, gi), basis_morphism(x, y, q, fi));
            } else if (rng() % 101 < 12) {
              check_leibniz(morphism(y, z, p, random_vec(dp)), morphism(x, y, q, random_vec(dq)));
            }
          }
      }

  // associativity
  long assoc_work = 0;
  for (int x = 0; x < nobj; ++x)
    for (int y = 0; y < nobj; ++y)
      for (int z = 0; z < nobj; ++z)
        for (int u = 0; u < nobj; ++u) {
          DegreeWindow wq = hom_window(x, y), wp = hom_window(y, z), wo = hom_window(z, u);
          for (int q = wq.lo; q <= wq.hi; ++q)
            for (int p = wp.lo; p <= wp.hi; ++p)
              for (int o = wo.lo; o <= wo.hi; ++o) {
                if (!hom_window(x, z).contains(p + q) || !hom_window(y, u).contains(o + p) ||
                    !hom_window(x, u).contains(o + p + q))
                  continue;
                assoc_work += static_cast<long>(hom_dim(x, y, q)) * hom_dim(y, z, p) * hom_dim(z, u, o);
              }
        }
  bool assoc_exhaustive = assoc_work <= opt.exhaustive_limit;
  int sampled = 0;
  for (int x = 0; x < nobj; ++x)
    for (int y = 0; y < nobj; ++y)
      for (int z = 0; z < nobj; ++z)
        for (int u = 0; u < nobj; ++u) {
          DegreeWindow wq = hom_window(x, y), wp = hom_window(y, z), wo = hom_window(z, u);
          for (int q = wq.lo; q <= wq.hi; ++q)
            for (int p = wp.lo; p <= wp.hi; ++p)
              for (int o = wo.lo; o <= wo.hi; ++o) {
                if (!hom_window(x, z).contains(p + q) || !hom_window(y, u).contains(o + p) ||
                    !hom_window(x, u).contains(o + p + q))
                  continue;
                int dq = hom_dim(x, y, q), dp = hom_dim(y, z, p), dn = hom_dim(z, u, o);
                if (dq == 0 || dp == 0 || dn == 0) continue;
                if (assoc_exhaustive) {
                  for (int hi = 0; hi < dn; ++hi)
                    for (int gi = 0; gi < dp; ++gi)
                      for (int fi = 0; fi < dq; ++fi) {
                        Morphism h = basis_morphism(z, u, o, hi);
                        Morphism g = basis_morphism(y, z, p, gi);
                        Morphism f = basis_morphism(x, y, q, fi);
                        if (!(compose(h, compose(g, f)) == compose(compose(h, g), f)))
                          throw PreconditionError("associativity fails");
                      }
                } else if (sampled < opt.samples && rng() % 101 < 6) {
                  ++sampled;
                  Morphism h = morphism(z, u, o, random_vec(dn));
                  Morphism g = morphism(y, z, p, random_vec(dp));
                  Morphism f = morphism(x, y, q, random_vec(dq));
                  if (!(compose(h, compose(g, f)) == compose(compose(h, g), f)))
                    throw PreconditionError("associativity fails");
                }
              }
        }
}

std::string format_morphism(const Morphism& f) {
  std::ostringstream os;
  const Field& fl = f.cat->field();
  bool first = true;
  for (int i = 0; i < f.coeffs.size(); ++i) {
    if (fl.is_zero(f.coeffs[i])) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = fl.scalar_to_string(f.coeffs[i]);
    if (c != "1") os << c << "*";
    os << f.cat->basis_label(f.src, f.tgt, f.deg, i);
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace dgx
