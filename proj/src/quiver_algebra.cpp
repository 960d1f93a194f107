#include "dgx/quiver_algebra.hpp"

#include <algorithm>
#include <deque>

namespace dgx {

namespace {
// descending by length, then lexicographic: elimination prefers long paths
bool desc_order(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}
}  // namespace

QuiverAlgebra::QuiverAlgebra(std::string name, Field f, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                             std::vector<AExpr> relations, int len_cap)
    : name_(std::move(name)), f_(f), vertices_(std::move(vertices)), arrows_(std::move(arrows)),
      relations_(std::move(relations)) {
  construct(len_cap);
}

int QuiverAlgebra::vertex_index(const std::string& s) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == s) return static_cast<int>(i);
  throw PreconditionError("unknown vertex '" + s + "' in algebra " + name_);
}

int QuiverAlgebra::arrow_index(const std::string& s) const {
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == s) return static_cast<int>(i);
  throw PreconditionError("unknown arrow '" + s + "' in algebra " + name_);
}

int QuiverAlgebra::path_target(const APath& p) const {
  int at = p.src;
  for (int a : p.arrows) {
    const Arrow& ar = arrows_[static_cast<size_t>(a)];
    if (ar.src != at) throw PreconditionError("non-composable path in algebra " + name_);
    at = ar.tgt;
  }
  return at;
}

void QuiverAlgebra::construct(int len_cap) {
  int nv = static_cast<int>(vertices_.size());
  size_t max_rel_len = 2;
  for (const auto& r : relations_)
    for (const auto& t : r) max_rel_len = std::max(max_rel_len, t.path.arrows.size());

  for (int L = static_cast<int>(max_rel_len) + 1; L <= len_cap; ++L) {
    spaces_.clear();
    // enumerate paths of length <= L
    std::map<std::pair<int, int>, std::vector<APath>> paths;
    std::vector<std::vector<int>> out_arrows(static_cast<size_t>(nv));
    for (size_t a = 0; a < arrows_.size(); ++a) out_arrows[static_cast<size_t>(arrows_[a].src)].push_back(static_cast<int>(a));
    long total = 0;
    std::deque<std::pair<APath, int>> frontier;
    for (int x = 0; x < nv; ++x) {
      APath idp{x, {}};
      paths[{x, x}].push_back(idp);
      frontier.push_back({idp, x});
      ++total;
    }
    while (!frontier.empty()) {
      auto [p, tgt] = frontier.front();
      frontier.pop_front();
      if (static_cast<int>(p.arrows.size()) >= L) continue;
      for (int a : out_arrows[static_cast<size_t>(tgt)]) {
        APath np = p;
        np.arrows.push_back(a);
        paths[{np.src, arrows_[static_cast<size_t>(a)].tgt}].push_back(np);
        frontier.push_back({np, arrows_[static_cast<size_t>(a)].tgt});
        if (++total > 2000000) throw BudgetError("algebra path enumeration exceeded hard budget");
      }
    }

    bool certified = true;
    for (int x = 0; x < nv && certified; ++x)
      for (int y = 0; y < nv && certified; ++y) {
        Space sp(f_);
        auto it = paths.find({x, y});
        if (it != paths.end()) sp.paths = it->second;
        std::sort(sp.paths.begin(), sp.paths.end(),
                  [](const APath& a, const APath& b) { return desc_order(a.arrows, b.arrows); });
        for (size_t i = 0; i < sp.paths.size(); ++i) sp.index[sp.paths[i].arrows] = static_cast<int>(i);
        int dim = static_cast<int>(sp.paths.size());
        std::vector<Vec> gens;
        for (const auto& rel : relations_) {
          if (rel.empty()) continue;
          int rs = rel[0].path.src, rt = path_target(rel[0].path);
          auto vit = paths.find({x, rs});
          auto uit = paths.find({rt, y});
          if (vit == paths.end() || uit == paths.end()) continue;
          for (const APath& v : vit->second)
            for (const APath& u : uit->second) {
              Vec g(f_, dim);
              bool complete = true;
              for (const auto& t : rel) {
                std::vector<int> full = v.arrows;
                full.insert(full.end(), t.path.arrows.begin(), t.path.arrows.end());
                full.insert(full.end(), u.arrows.begin(), u.arrows.end());
                if (static_cast<int>(full.size()) > L) {
                  complete = false;
                  break;
                }
                auto pit = sp.index.find(full);
                if (pit == sp.index.end()) throw PreconditionError("internal: path lookup failed");
                g[pit->second] = f_.add(g[pit->second], f_.reduce(t.coeff));
              }
              if (complete && !g.is_zero()) gens.push_back(g);
            }
        }
        sp.ideal = Subspace::span(f_, dim, gens);
        std::vector<bool> is_pivot(static_cast<size_t>(dim), false);
        for (int c : sp.ideal.pivots()) is_pivot[static_cast<size_t>(c)] = true;
        for (int i = 0; i < dim; ++i)
          if (!is_pivot[static_cast<size_t>(i)]) {
            if (static_cast<int>(sp.paths[static_cast<size_t>(i)].arrows.size()) == L) certified = false;
            sp.basis.push_back(i);
          }
        // presentation order: ascending (length, lex)
        std::sort(sp.basis.begin(), sp.basis.end(), [&](int a, int b) {
          const auto& pa = sp.paths[static_cast<size_t>(a)].arrows;
          const auto& pb = sp.paths[static_cast<size_t>(b)].arrows;
          if (pa.size() != pb.size()) return pa.size() < pb.size();
          return pa < pb;
        });
        spaces_.emplace(std::make_pair(x, y), std::move(sp));
      }
    if (certified) {
      nilpotence_len_ = L;
      return;
    }
  }
  throw PreconditionError("algebra " + name_ + " not certified finite-dimensional within the length cap");
}

const QuiverAlgebra::Space& QuiverAlgebra::space(int x, int y) const {
  auto it = spaces_.find({x, y});
  if (it == spaces_.end()) throw PreconditionError("algebra space missing");
  return it->second;
}

int QuiverAlgebra::dim(int x, int y) const { return static_cast<int>(space(x, y).basis.size()); }

std::string QuiverAlgebra::basis_label(int x, int y, int i) const {
  const Space& sp = space(x, y);
  const APath& p = sp.paths[static_cast<size_t>(sp.basis[static_cast<size_t>(i)])];
  if (p.arrows.empty()) return "e_" + vertices_[static_cast<size_t>(p.src)];
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += arrows_[static_cast<size_t>(*it)].name;
  }
  return s;
}

Vec QuiverAlgebra::reduce_path(const APath& p) const {
  int x = p.src, y = path_target(p);
  const Space& sp = space(x, y);
  if (static_cast<int>(p.arrows.size()) <= nilpotence_len_) {
    auto it = sp.index.find(p.arrows);
    if (it == sp.index.end()) throw PreconditionError("internal: enumerated path missing");
    Vec full(f_, static_cast<int>(sp.paths.size()));
    full[it->second] = f_.one();
    Vec red = sp.ideal.reduce(full);
    Vec out(f_, static_cast<int>(sp.basis.size()));
    for (size_t i = 0; i < sp.basis.size(); ++i) out[static_cast<int>(i)] = red[sp.basis[i]];
    return out;
  }
  // long path: reduce the length-L prefix (all length-L paths are in the
  // ideal modulo shorter ones), then recurse on strictly shorter products
  int L = nilpotence_len_;
  APath prefix{p.src, std::vector<int>(p.arrows.begin(), p.arrows.begin() + L)};
  std::vector<int> rest(p.arrows.begin() + L, p.arrows.end());
  int mid = path_target(prefix);
  const Space& sp2 = space(p.src, mid);
  auto it = sp2.index.find(prefix.arrows);
  if (it == sp2.index.end()) throw PreconditionError("internal: prefix missing");
  Vec full(f_, static_cast<int>(sp2.paths.size()));
  full[it->second] = f_.one();
  Vec red = sp2.ideal.reduce(full);
  Vec out(f_, dim(x, y));
  for (size_t i = 0; i < sp2.paths.size(); ++i) {
    if (f_.is_zero(red[static_cast<int>(i)])) continue;
    APath joined{p.src, sp2.paths[i].arrows};
    joined.arrows.insert(joined.arrows.end(), rest.begin(), rest.end());
    if (joined.arrows.size() >= p.arrows.size()) throw PreconditionError("internal: reduction did not shorten");
    out = out.add(reduce_path(joined).scale(red[static_cast<int>(i)]));
  }
  return out;
}

Vec QuiverAlgebra::reduce_expr(const AExpr& e, int x, int y) const {
  Vec out(f_, dim(x, y));
  for (const auto& t : e) {
    if (t.path.src != x || path_target(t.path) != y) throw PreconditionError("expression endpoint mismatch");
    out = out.add(reduce_path(t.path).scale(f_.reduce(t.coeff)));
  }
  return out;
}

Vec QuiverAlgebra::mult_basis(int x, int y, int z, int gi, int fi) const {
  const Space& spf = space(x, y);
  const Space& spg = space(y, z);
  const APath& f = spf.paths[static_cast<size_t>(spf.basis[static_cast<size_t>(fi)])];
  const APath& g = spg.paths[static_cast<size_t>(spg.basis[static_cast<size_t>(gi)])];
  APath r{x, f.arrows};
  r.arrows.insert(r.arrows.end(), g.arrows.begin(), g.arrows.end());
  return reduce_path(r);
}

Vec QuiverAlgebra::unit(int x) const { return reduce_path(APath{x, {}}); }

int QuiverAlgebra::total_dim() const {
  int t = 0;
  for (int x = 0; x < num_vertices(); ++x)
    for (int y = 0; y < num_vertices(); ++y) t += dim(x, y);
  return t;
}

}  // namespace dgx
