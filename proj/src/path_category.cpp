#include "dgx/path_category.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace dgx {

bool Path::operator<(const Path& o) const {
  if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
  if (arrows != o.arrows) return arrows < o.arrows;
  return src < o.src;
}

int DgQuiverPresentation::object_index(const std::string& s) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == s) return static_cast<int>(i);
  throw PreconditionError("unknown object '" + s + "' in quiver " + name);
}

int DgQuiverPresentation::arrow_index(const std::string& s) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == s) return static_cast<int>(i);
  throw PreconditionError("unknown arrow '" + s + "' in quiver " + name);
}

int DgQuiverPresentation::path_target(const Path& p) const {
  int at = p.src;
  for (int a : p.arrows) {
    const GradedArrow& ar = arrows[static_cast<size_t>(a)];
    if (ar.src != at) throw PreconditionError("non-composable path");
    at = ar.tgt;
  }
  return at;
}

int DgQuiverPresentation::path_degree(const Path& p) const {
  int d = 0;
  for (int a : p.arrows) d += arrows[static_cast<size_t>(a)].deg;
  return d;
}

namespace {
void expr_endpoints(const DgQuiverPresentation& pres, const PathExpr& e, int& src, int& tgt, int& deg,
                    const char* what) {
  if (e.empty()) throw PreconditionError(std::string(what) + ": empty expression has no endpoints");
  src = e[0].path.src;
  tgt = pres.path_target(e[0].path);
  deg = pres.path_degree(e[0].path);
  for (const auto& t : e) {
    if (t.path.src != src || pres.path_target(t.path) != tgt)
      throw PreconditionError(std::string(what) + ": mixed endpoints");
    if (pres.path_degree(t.path) != deg) throw PreconditionError(std::string(what) + ": not homogeneous");
  }
}
}  // namespace

void DgQuiverPresentation::validate(const Field& f) const {
  (void)f;
  for (const auto& [aid, expr] : differentials) {
    const GradedArrow& a = arrows[static_cast<size_t>(aid)];
    if (expr.empty()) continue;
    int s, t, d;
    expr_endpoints(*this, expr, s, t, d, "differential");
    if (s != a.src || t != a.tgt) throw PreconditionError("d(" + a.name + ") has wrong endpoints");
    if (d != a.deg + 1) throw PreconditionError("d(" + a.name + ") is not homogeneous of degree |" + a.name + "|+1");
  }
  for (const auto& r : relations) {
    int s, t, d;
    expr_endpoints(*this, r, s, t, d, "relation");
  }
}

DgQuiverPresentation lambda_simplex(int n) {
  if (n < 0) throw PreconditionError("lambda_simplex needs n >= 0");
  DgQuiverPresentation p;
  p.name = "lambda" + std::to_string(n);
  for (int i = 0; i <= n; ++i) p.objects.push_back(std::to_string(i));

  auto chain_name = [](const std::vector<int>& c) {
    std::string s = "x";
    for (int v : c) s += std::to_string(v);
    return s;
  };

  // all chains i < p_1 < ... < p_l < j as sorted vertex lists
  std::vector<std::vector<int>> chains;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> mids;
      for (int v = i + 1; v < j; ++v) mids.push_back(v);
      int m = static_cast<int>(mids.size());
      for (long mask = 0; mask < (1L << m); ++mask) {
        std::vector<int> c{i};
        for (int b = 0; b < m; ++b)
          if ((mask >> b) & 1) c.push_back(mids[static_cast<size_t>(b)]);
        c.push_back(j);
        chains.push_back(c);
      }
    }
  std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& c : chains) {
    int l = static_cast<int>(c.size()) - 2;
    p.arrows.push_back(GradedArrow{chain_name(c), c.front(), c.back(), -l});
  }
  // d(I) = Σ_{1<=m<=l} (−1)^{l−m} ( I∖{p_m} − {p_m<...<j} ∘ {i<...<p_m} )
  for (const auto& c : chains) {
    int l = static_cast<int>(c.size()) - 2;
    if (l == 0) continue;
    PathExpr expr;
    for (int m = 1; m <= l; ++m) {
      long sign = ((l - m) % 2 == 0) ? 1 : -1;
      std::vector<int> omit;
      for (int t = 0; t < static_cast<int>(c.size()); ++t)
        if (t != m) omit.push_back(c[static_cast<size_t>(t)]);
      std::vector<int> first(c.begin(), c.begin() + m + 1);
      std::vector<int> second(c.begin() + m, c.end());
      expr.push_back(PathTerm{Scalar(sign), Path{c.front(), {p.arrow_index(chain_name(omit))}}});
      expr.push_back(PathTerm{Scalar(-sign),
                              Path{c.front(), {p.arrow_index(chain_name(first)), p.arrow_index(chain_name(second))}}});
    }
    p.differentials[p.arrow_index(chain_name(c))] = expr;
  }
  return p;
}

std::shared_ptr<PathDgCategory> PathDgCategory::build(const DgQuiverPresentation& pres, Field f, DegreeWindow w,
                                                      Mode mode, int len_bound) {
  pres.validate(f);
  auto cat = std::shared_ptr<PathDgCategory>(new PathDgCategory(pres, f, w, mode, len_bound));
  cat->construct();
  return cat;
}

void PathDgCategory::enumerate_paths(int len_cap, std::map<std::tuple<int, int, int>, std::vector<Path>>& out) const {
  int nobj = static_cast<int>(pres_.objects.size());
  std::vector<std::vector<int>> out_arrows(static_cast<size_t>(nobj));
  for (size_t a = 0; a < pres_.arrows.size(); ++a)
    out_arrows[static_cast<size_t>(pres_.arrows[a].src)].push_back(static_cast<int>(a));

  long total = 0;
  struct Item {
    Path p;
    int tgt, deg;
  };
  std::deque<Item> frontier;
  for (int x = 0; x < nobj; ++x) {
    Path idp{x, {}};
    if (win_.contains(0)) {
      out[{x, x, 0}].push_back(idp);
      ++total;
    }
    frontier.push_back(Item{idp, x, 0});
  }
  while (!frontier.empty()) {
    Item it = frontier.front();
    frontier.pop_front();
    if (len_cap >= 0 && static_cast<int>(it.p.arrows.size()) >= len_cap) continue;
    for (int a : out_arrows[static_cast<size_t>(it.tgt)]) {
      const GradedArrow& ar = pres_.arrows[static_cast<size_t>(a)];
      int ndeg = it.deg + ar.deg;
      if (mode_ == Mode::Exact && ndeg < win_.lo) continue;  // degrees only decrease
      Path np = it.p;
      np.arrows.push_back(a);
      if (ndeg >= win_.lo && ndeg <= win_.hi) {
        out[{np.src, ar.tgt, ndeg}].push_back(np);
        if (++total > 4000000) throw BudgetError("path enumeration exceeded hard budget");
      }
      frontier.push_back(Item{np, ar.tgt, ndeg});
      if (len_cap < 0 && static_cast<int>(frontier.size()) > 4000000)
        throw BudgetError("path frontier exceeded hard budget");
    }
  }
  for (auto& [k, v] : out) std::sort(v.begin(), v.end());
}

void PathDgCategory::construct() {
  // exact mode precondition: arrow degrees <= 0 and no degree-0 directed cycle
  if (mode_ == Mode::Exact) {
    for (const auto& a : pres_.arrows)
      if (a.deg > 0)
        throw PreconditionError("exact mode requires arrow degrees <= 0 (arrow '" + a.name + "')");
    int nobj = static_cast<int>(pres_.objects.size());
    // detect a directed cycle in the degree-0 subquiver (DFS colors)
    std::vector<std::vector<int>> adj(static_cast<size_t>(nobj));
    for (const auto& a : pres_.arrows)
      if (a.deg == 0) adj[static_cast<size_t>(a.src)].push_back(a.tgt);
    std::vector<int> color(static_cast<size_t>(nobj), 0);
    std::function<void(int)> dfs = [&](int v) {
      color[static_cast<size_t>(v)] = 1;
      for (int w2 : adj[static_cast<size_t>(v)]) {
        if (color[static_cast<size_t>(w2)] == 1)
          throw PreconditionError("degree-0 cycle in exact mode; use truncated mode with a length bound");
        if (color[static_cast<size_t>(w2)] == 0) dfs(w2);
      }
      color[static_cast<size_t>(v)] = 2;
    };
    for (int v = 0; v < nobj; ++v)
      if (color[static_cast<size_t>(v)] == 0) dfs(v);
  }

  std::map<std::tuple<int, int, int>, std::vector<Path>> paths;
  enumerate_paths(mode_ == Mode::Exact ? -1 : len_bound_, paths);

  int nobj = static_cast<int>(pres_.objects.size());
  for (int x = 0; x < nobj; ++x)
    for (int y = 0; y < nobj; ++y)
      for (int n = win_.lo; n <= win_.hi; ++n) {
        HomSpace hs(field_);
        auto it = paths.find({x, y, n});
        if (it != paths.end()) hs.paths = it->second;
        for (size_t i = 0; i < hs.paths.size(); ++i) hs.path_index[hs.paths[i]] = static_cast<int>(i);
        // ideal generators u · r · v within the enumerated set
        std::vector<Vec> gens;
        int dim = static_cast<int>(hs.paths.size());
        for (const auto& rel : pres_.relations) {
          int rs, rt, rd;
          expr_endpoints(pres_, rel, rs, rt, rd, "relation");
          // v : x -> rs, u : rt -> y with deg(v)+rd+deg(u) = n
          for (int dv = win_.lo; dv <= win_.hi; ++dv) {
            int du = n - rd - dv;
            if (du < win_.lo || du > win_.hi) continue;
            auto vit = paths.find({x, rs, dv});
            auto uit = paths.find({rt, y, du});
            if (vit == paths.end() || uit == paths.end()) continue;
            for (const Path& v : vit->second)
              for (const Path& u : uit->second) {
                Vec g(field_, dim);
                bool any = false;
                for (const auto& t : rel) {
                  Path full{x, {}};
                  full.arrows = v.arrows;
                  full.arrows.insert(full.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
                  full.arrows.insert(full.arrows.end(), u.arrows.begin(), u.arrows.end());
                  auto pit = hs.path_index.find(full);
                  if (pit == hs.path_index.end()) continue;  // truncated-mode drop
                  g[pit->second] = field_.add(g[pit->second], field_.reduce(t.coeff));
                  any = true;
                }
                if (any && !g.is_zero()) gens.push_back(g);
              }
          }
        }
        hs.ideal = Subspace::span(field_, dim, gens);
        std::vector<bool> is_pivot(static_cast<size_t>(dim), false);
        for (int c : hs.ideal.pivots()) is_pivot[static_cast<size_t>(c)] = true;
        for (int i = 0; i < dim; ++i)
          if (!is_pivot[static_cast<size_t>(i)]) hs.basis_paths.push_back(i);
        spaces_.emplace(std::make_tuple(x, y, n), std::move(hs));
      }

  // well-definedness checks: d(arrow) stays in the quiver data by
  // construction; d(relation) ∈ ideal and d(d(arrow)) ∈ ideal
  for (const auto& rel : pres_.relations) {
    int rs, rt, rd;
    expr_endpoints(pres_, rel, rs, rt, rd, "relation");
    if (rd + 1 > win_.hi) continue;
    PathExpr dr;
    for (const auto& t : rel) {
      PathExpr dp = d_of_path(t.path);
      for (auto& dt : dp) dr.push_back(PathTerm{field_.mul(t.coeff, dt.coeff), dt.path});
    }
    if (!expr_to_quotient(dr, rs, rt, rd + 1).is_zero())
      throw PreconditionError("d(relation) not in the relation ideal");
  }
  for (const auto& [aid, expr] : pres_.differentials) {
    const GradedArrow& a = pres_.arrows[static_cast<size_t>(aid)];
    if (a.deg + 2 > win_.hi || a.deg + 2 < win_.lo) continue;
    PathExpr dd;
    for (const auto& t : expr) {
      PathExpr dp = d_of_path(t.path);
      for (auto& dt : dp) dd.push_back(PathTerm{field_.mul(t.coeff, dt.coeff), dt.path});
    }
    if (!expr_to_quotient(dd, a.src, a.tgt, a.deg + 2).is_zero())
      throw PreconditionError("d^2(" + a.name + ") not in the relation ideal");
  }
}

PathExpr PathDgCategory::d_of_path(const Path& p) const {
  PathExpr out;
  int k = static_cast<int>(p.arrows.size());
  // sign: degree of the arrows applied after position i
  for (int i = 0; i < k; ++i) {
    int aid = p.arrows[static_cast<size_t>(i)];
    auto dit = pres_.differentials.find(aid);
    if (dit == pres_.differentials.end() || dit->second.empty()) continue;
    int sdeg = 0;
    for (int j = i + 1; j < k; ++j) sdeg += pres_.arrows[static_cast<size_t>(p.arrows[static_cast<size_t>(j)])].deg;
    Scalar sign = (sdeg % 2 == 0) ? field_.one() : field_.neg(field_.one());
    for (const auto& t : dit->second) {
      Path np{p.src, {}};
      np.arrows.insert(np.arrows.end(), p.arrows.begin(), p.arrows.begin() + i);
      np.arrows.insert(np.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
      np.arrows.insert(np.arrows.end(), p.arrows.begin() + i + 1, p.arrows.end());
      out.push_back(PathTerm{field_.mul(sign, t.coeff), np});
    }
  }
  return out;
}

const PathDgCategory::HomSpace& PathDgCategory::space(int x, int y, int n) const {
  if (!win_.contains(n)) throw WindowError("hom degree outside window");
  auto it = spaces_.find({x, y, n});
  if (it == spaces_.end()) throw WindowError("hom space outside window");
  return it->second;
}

Vec PathDgCategory::expr_to_quotient(const PathExpr& e, int x, int y, int n) const {
  const HomSpace& hs = space(x, y, n);
  Vec full(field_, static_cast<int>(hs.paths.size()));
  for (const auto& t : e) {
    auto pit = hs.path_index.find(t.path);
    if (pit == hs.path_index.end()) {
      if (mode_ == Mode::Exact) throw PreconditionError("path outside enumerated range in exact mode");
      continue;  // truncated drop
    }
    full[pit->second] = field_.add(full[pit->second], field_.reduce(t.coeff));
  }
  Vec red = hs.ideal.reduce(full);
  Vec out(field_, static_cast<int>(hs.basis_paths.size()));
  for (size_t i = 0; i < hs.basis_paths.size(); ++i) out[static_cast<int>(i)] = red[hs.basis_paths[i]];
  return out;
}

int PathDgCategory::hom_dim(int x, int y, int n) const { return static_cast<int>(space(x, y, n).basis_paths.size()); }

Matrix PathDgCategory::hom_diff(int x, int y, int n) const {
  if (n + 1 > win_.hi) throw WindowError("hom_diff outside window");
  const HomSpace& hs = space(x, y, n);
  Matrix m(field_, hom_dim(x, y, n + 1), hom_dim(x, y, n));
  for (size_t c = 0; c < hs.basis_paths.size(); ++c) {
    const Path& p = hs.paths[static_cast<size_t>(hs.basis_paths[c])];
    Vec col = expr_to_quotient(d_of_path(p), x, y, n + 1);
    for (int r = 0; r < col.size(); ++r) m.set(r, static_cast<int>(c), col[r]);
  }
  return m;
}

Vec PathDgCategory::identity_coeffs(int x) const {
  return expr_to_quotient({PathTerm{field_.one(), Path{x, {}}}}, x, x, 0);
}

Vec PathDgCategory::compose_basis(int x, int y, int z, int p, int q, int gi, int fi) const {
  const HomSpace& hq = space(x, y, q);
  const HomSpace& hp = space(y, z, p);
  const Path& f = hq.paths[static_cast<size_t>(hq.basis_paths[static_cast<size_t>(fi)])];
  const Path& g = hp.paths[static_cast<size_t>(hp.basis_paths[static_cast<size_t>(gi)])];
  Path r{x, {}};
  r.arrows = f.arrows;
  r.arrows.insert(r.arrows.end(), g.arrows.begin(), g.arrows.end());
  return expr_to_quotient({PathTerm{field_.one(), r}}, x, z, p + q);
}

std::string PathDgCategory::basis_label(int x, int y, int n, int i) const {
  const HomSpace& hs = space(x, y, n);
  const Path& p = hs.paths[static_cast<size_t>(hs.basis_paths[static_cast<size_t>(i)])];
  if (p.arrows.empty()) return "id_" + pres_.objects[static_cast<size_t>(p.src)];
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += pres_.arrows[static_cast<size_t>(*it)].name;
  }
  return s;
}

bool PathDgCategory::dims_stable() const {
  if (mode_ == Mode::Exact) return true;
  if (stable_) return *stable_;
  auto other = PathDgCategory::build(pres_, field_, win_, mode_, len_bound_ + 1);
  bool ok = true;
  for (int x = 0; x < num_objects() && ok; ++x)
    for (int y = 0; y < num_objects() && ok; ++y)
      for (int n = win_.lo; n <= win_.hi && ok; ++n)
        if (hom_dim(x, y, n) != other->hom_dim(x, y, n)) ok = false;
  stable_ = ok;
  return ok;
}

Morphism PathDgCategory::arrow_morphism(const std::string& name) const {
  int aid = pres_.arrow_index(name);
  const GradedArrow& a = pres_.arrows[static_cast<size_t>(aid)];
  Vec v = expr_to_quotient({PathTerm{field_.one(), Path{a.src, {aid}}}}, a.src, a.tgt, a.deg);
  return Morphism(shared_from_this(), a.src, a.tgt, a.deg, std::move(v));
}

Morphism PathDgCategory::eval_expr(const PathExpr& e, int src, int tgt, int deg) const {
  return Morphism(shared_from_this(), src, tgt, deg, expr_to_quotient(e, src, tgt, deg));
}

}  // namespace dgx
