#include "dgx/h0.hpp"

#include <cmath>

namespace dgx {

H0Category::H0Category(CatPtr base) : base_(std::move(base)) {}

const H0Category::Pair& H0Category::pair(int x, int y) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find({x, y});
  if (it != cache_.end()) return it->second;
  const Field& f = base_->field();
  DegreeWindow w = base_->hom_window(x, y);
  if (w.lo > -1 || w.hi < 1) throw WindowError("H^0 needs degrees [-1, 1] inside the window");
  Complex hc = base_->hom_complex(x, y);
  auto coh = hc.cohomology(0);
  Pair p(f);
  p.reps = coh.representatives;
  p.boundaries = Subspace::span(f, hc.dim(0), image_basis(hc.diff(-1)));
  std::vector<Vec> gens = image_basis(hc.diff(-1));
  for (const auto& r : p.reps) gens.push_back(r);
  p.reduced_span = Subspace::span(f, hc.dim(0), gens);
  auto [pos, ok] = cache_.emplace(std::make_pair(x, y), std::move(p));
  (void)ok;
  return pos->second;
}

int H0Category::dim(int x, int y) const { return static_cast<int>(pair(x, y).reps.size()); }

Morphism H0Category::rep(int x, int y, int i) const {
  return base_->morphism(x, y, 0, pair(x, y).reps[static_cast<size_t>(i)]);
}

Vec H0Category::class_of(const Morphism& f) const {
  if (f.deg != 0) throw PreconditionError("class_of: degree must be 0");
  if (!base_->diff(f).is_zero()) throw PreconditionError("class_of: morphism is not closed");
  const Pair& p = pair(f.src, f.tgt);
  const Field& fl = base_->field();
  // solve f = Σ c_i rep_i + boundary
  Matrix mat(fl, f.coeffs.size(), static_cast<int>(p.reps.size()) + p.boundaries.dim());
  for (int i = 0; i < static_cast<int>(p.reps.size()); ++i)
    for (int r = 0; r < f.coeffs.size(); ++r) mat.set(r, i, p.reps[static_cast<size_t>(i)][r]);
  for (int i = 0; i < p.boundaries.dim(); ++i)
    for (int r = 0; r < f.coeffs.size(); ++r) mat.set(r, static_cast<int>(p.reps.size()) + i, p.boundaries.basis_rows().at(i, r));
  auto sol = solve(mat, f.coeffs);
  if (!sol) throw PreconditionError("class_of: cocycle not in span (internal)");
  Vec out(fl, static_cast<int>(p.reps.size()));
  for (int i = 0; i < out.size(); ++i) out[i] = (*sol)[i];
  return out;
}

Vec H0Category::compose_classes(int x, int y, int z, const Vec& g, const Vec& f) const {
  Morphism gm = from_class(y, z, g);
  Morphism fm = from_class(x, y, f);
  return class_of(base_->compose(gm, fm));
}

Vec H0Category::identity_class(int x) const { return class_of(base_->identity(x)); }

Morphism H0Category::from_class(int x, int y, const Vec& cls) const {
  const Pair& p = pair(x, y);
  Vec v(base_->field(), base_->hom_dim(x, y, 0));
  for (size_t i = 0; i < p.reps.size(); ++i) v = v.add(p.reps[i].scale(cls[static_cast<int>(i)]));
  return base_->morphism(x, y, 0, v);
}

bool H0Category::is_zero_object(int x) const { return dim(x, x) == 0; }

namespace {

// solve: exists g (deg 0, closed) and r with g∘f − id = d(r)?
std::optional<Morphism> inverse_system(const Morphism& f, bool left) {
  const DgCategory& cat = *f.cat;
  const Field& fl = cat.field();
  int a = f.src, b = f.tgt;
  // unknowns: g in hom(b,a)^0, r in hom(s,s)^{-1} with s = a (left) or b (right)
  int s = left ? a : b;
  BlockSystem sys(fl);
  int gb = sys.add_block("g", cat.hom_dim(b, a, 0));
  int rb = sys.add_block("r", cat.hom_dim(s, s, -1));
  // closedness of g
  Matrix dg = cat.hom_diff(b, a, 0);
  sys.add_equation({{gb, dg}}, Vec(fl, dg.rows()));
  // g f − d(r) = id (left) ;  f g − d(r) = id (right)
  // left: (−∘f) : hom(b,a)^0 → hom(a,a)^0;  right: (f∘−) : hom(b,a)^0 → hom(b,b)^0
  Matrix action = left ? cat.precompose_matrix(f, a, 0) : cat.postcompose_matrix(f, b, 0);
  Matrix dr = cat.hom_diff(s, s, -1);
  Vec rhs = cat.identity_coeffs(s);
  sys.add_equation({{gb, action}, {rb, dr.neg()}}, rhs);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return cat.morphism(b, a, 0, (*sol)[0]);
}

}  // namespace

std::optional<Morphism> h0_left_inverse(const Morphism& f) {
  if (f.deg != 0) throw PreconditionError("inverse search needs degree 0");
  if (!f.cat->diff(f).is_zero()) throw PreconditionError("inverse search needs a closed morphism");
  return inverse_system(f, true);
}

std::optional<Morphism> h0_right_inverse(const Morphism& f) {
  if (f.deg != 0) throw PreconditionError("inverse search needs degree 0");
  if (!f.cat->diff(f).is_zero()) throw PreconditionError("inverse search needs a closed morphism");
  return inverse_system(f, false);
}

bool is_homotopy_equivalence(const Morphism& f) {
  return h0_left_inverse(f).has_value() && h0_right_inverse(f).has_value();
}

std::optional<Morphism> homotopy_inverse(const Morphism& f) {
  auto l = h0_left_inverse(f);
  auto r = h0_right_inverse(f);
  if (!l || !r) return std::nullopt;
  // [g][f] = 1 and [f][g'] = 1 imply [g] = [g][f][g'] = [g'] is two-sided
  return l;
}

bool h0_equal(const Morphism& f, const Morphism& g) {
  if (f.src != g.src || f.tgt != g.tgt || f.deg != 0 || g.deg != 0)
    throw PreconditionError("h0_equal: endpoint/degree mismatch");
  Morphism diffm = f.sub(g);
  Matrix d = f.cat->hom_diff(f.src, f.tgt, -1);
  return solve(d, diffm.coeffs).has_value();
}

bool next_fp_vector(const Field& f, Vec& v) {
  if (!f.is_prime_field()) throw PreconditionError("enumeration requires a prime field");
  long p = f.order();
  for (int i = 0; i < v.size(); ++i) {
    long cur = static_cast<long>(mpz_get_si(v[i].get_num().get_mpz_t()));
    if (cur + 1 < p) {
      v[i] = f.from_long(cur + 1);
      return true;
    }
    v[i] = f.zero();
  }
  return false;
}

bool is_indecomposable_h0(const H0Category& h0, int x, long budget) {
  const Field& f = h0.base()->field();
  if (!f.is_prime_field()) throw PreconditionError("indecomposability search requires a prime field");
  int d = h0.dim(x, x);
  if (d == 0) return false;  // the zero object is not indecomposable
  double total = std::pow(static_cast<double>(f.order()), d);
  if (total > static_cast<double>(budget))
    throw BudgetError("endomorphism ring too large for exhaustive idempotent search");
  Vec v(f, d);
  Vec id = h0.identity_class(x);
  do {
    if (v.is_zero()) continue;
    if (v == id) continue;
    Vec sq = h0.compose_classes(x, x, x, v, v);
    if (sq == v) return false;  // nontrivial idempotent
  } while (next_fp_vector(f, v));
  return true;
}

std::vector<IndecomposabilityFlag> decompose_h0_objects(const H0Category& h0, long budget) {
  std::vector<IndecomposabilityFlag> out;
  for (int x = 0; x < h0.base()->num_objects(); ++x)
    out.push_back(IndecomposabilityFlag{x, is_indecomposable_h0(h0, x, budget)});
  return out;
}

}  // namespace dgx
