#include "dgx/simplicial.hpp"

#include <algorithm>

namespace dgx {

SimplicialModule::SimplicialModule(Field f, int levels) : f_(f), levels_(levels) {
  if (levels < 0) throw PreconditionError("negative level bound");
  dim_.assign(static_cast<size_t>(levels) + 1, 0);
}

int SimplicialModule::dim(int n) const {
  if (n < 0 || n > levels_) throw WindowError("simplicial level outside range");
  return dim_[static_cast<size_t>(n)];
}

void SimplicialModule::set_dim(int n, int d) {
  if (n < 0 || n > levels_) throw WindowError("simplicial level outside range");
  dim_[static_cast<size_t>(n)] = d;
}

void SimplicialModule::set_face(int n, int i, Matrix m) {
  if (n < 1 || n > levels_ || i < 0 || i > n) throw DimensionError("face index out of range");
  if (m.rows() != dim(n - 1) || m.cols() != dim(n)) throw DimensionError("face shape mismatch");
  face_.insert_or_assign({n, i}, std::move(m));
}

Matrix SimplicialModule::face(int n, int i) const {
  if (n < 1 || n > levels_ || i < 0 || i > n) throw DimensionError("face index out of range");
  auto it = face_.find({n, i});
  if (it != face_.end()) return it->second;
  return Matrix(f_, dim(n - 1), dim(n));
}

void SimplicialModule::set_degeneracy(int n, int j, Matrix m) {
  if (n < 0 || n + 1 > levels_ || j < 0 || j > n) throw DimensionError("degeneracy index out of range");
  if (m.rows() != dim(n + 1) || m.cols() != dim(n)) throw DimensionError("degeneracy shape mismatch");
  degen_.insert_or_assign({n, j}, std::move(m));
}

Matrix SimplicialModule::degeneracy(int n, int j) const {
  if (n < 0 || n + 1 > levels_ || j < 0 || j > n) throw DimensionError("degeneracy index out of range");
  auto it = degen_.find({n, j});
  if (it != degen_.end()) return it->second;
  return Matrix(f_, dim(n + 1), dim(n));
}

void SimplicialModule::verify_simplicial_identities() const {
  for (int n = 2; n <= levels_; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!(face(n - 1, i).mul(face(n, j)) == face(n - 1, j - 1).mul(face(n, i))))
          throw PreconditionError("simplicial identity d_i d_j failed");
  for (int n = 0; n + 1 <= levels_; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        Matrix lhs = face(n + 1, i).mul(degeneracy(n, j));
        Matrix rhs(f_, dim(n), dim(n));
        if (i < j)
          rhs = degeneracy(n - 1, j - 1).mul(face(n, i));
        else if (i == j || i == j + 1)
          rhs = Matrix::identity(f_, dim(n));
        else
          rhs = degeneracy(n - 1, j).mul(face(n, i - 1));
        if (!(lhs == rhs)) throw PreconditionError("simplicial identity d_i s_j failed");
      }
  for (int n = 0; n + 2 <= levels_; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        if (!(degeneracy(n + 1, i).mul(degeneracy(n, j)) == degeneracy(n + 1, j + 1).mul(degeneracy(n, i))))
          throw PreconditionError("simplicial identity s_i s_j failed");
}

namespace {

// Monotone surjections [n] ->> [k], encoded as value lists of length n+1.
std::vector<std::vector<int>> surjections(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(n) + 1, 0);
  // cur[0] = 0; each step either repeats or increments
  int steps = n;
  for (long mask = 0; mask < (1L << steps); ++mask) {
    for (int i = 1; i <= n; ++i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)] + ((mask >> (i - 1)) & 1);
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// order-preserving map [m] -> [n] obtained by composing alpha: [n]->>[k]
// with beta: [m]->[n]; returns the composite value list.
std::vector<int> compose_maps(const std::vector<int>& alpha, const std::vector<int>& beta) {
  std::vector<int> r;
  r.reserve(beta.size());
  for (int b : beta) r.push_back(alpha[static_cast<size_t>(b)]);
  return r;
}

}  // namespace

SimplicialModule dold_kan_DK(const Complex& v, int m) {
  const Field& f = v.field();
  if (v.support_max() > 0) throw PreconditionError("dold_kan_DK requires a connective complex");
  if (v.window().lo > -m) throw WindowError("dold_kan_DK: window too small for requested level");
  SimplicialModule s(f, m);

  // level n: summands indexed by surjections [n] ->> [k], carrying V^{-k}
  std::vector<std::vector<std::vector<int>>> surj(static_cast<size_t>(m) + 1);
  std::vector<std::vector<int>> offset(static_cast<size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) {
    surj[static_cast<size_t>(n)] = surjections(n);
    int total = 0;
    for (const auto& a : surj[static_cast<size_t>(n)]) {
      offset[static_cast<size_t>(n)].push_back(total);
      int k = a.back();
      total += v.dim(-k);
    }
    s.set_dim(n, total);
  }

  // structure map for beta : [q] -> [p] (order-preserving): DK(V)_p -> DK(V)_q
  auto structure = [&](int p, int q, const std::vector<int>& beta) {
    Matrix mm(f, s.dim(q), s.dim(p));
    const auto& sp = surj[static_cast<size_t>(p)];
    const auto& sq = surj[static_cast<size_t>(q)];
    for (size_t ai = 0; ai < sp.size(); ++ai) {
      const auto& alpha = sp[ai];
      int k = alpha.back();
      int dk = v.dim(-k);
      if (dk == 0) continue;
      std::vector<int> comp = compose_maps(alpha, beta);
      int kp = comp.back() - comp.front();
      // normalize to start at 0 (epi-mono factorization through [kp])
      std::vector<int> epi;
      epi.reserve(comp.size());
      for (int c : comp) epi.push_back(c - comp.front());
      bool is_surj = true;
      for (size_t i = 1; i < epi.size(); ++i)
        if (epi[i] - epi[i - 1] > 1) {
          is_surj = false;
          break;
        }
      if (!is_surj) continue;  // image skips a value: component is zero
      auto it = std::lower_bound(sq.begin(), sq.end(), epi);
      if (it == sq.end() || *it != epi) throw PreconditionError("internal: epi factor not found");
      size_t bi = static_cast<size_t>(it - sq.begin());
      if (comp.front() == 0 && comp.back() == k) {
        // composite is surjective: identity onto the summand
        Matrix blk = Matrix::identity(f, dk);
        for (int r = 0; r < dk; ++r)
          for (int c = 0; c < dk; ++c)
            if (!f.is_zero(blk.at(r, c)))
              mm.set(offset[static_cast<size_t>(q)][bi] + r, offset[static_cast<size_t>(p)][ai] + c, blk.at(r, c));
      } else if (comp.front() == 1 && comp.back() == k) {
        // image is {1,...,k}: apply the differential V^{-k} -> V^{-k+1}
        Matrix blk = v.diff(-k);
        for (int r = 0; r < blk.rows(); ++r)
          for (int c = 0; c < blk.cols(); ++c)
            if (!f.is_zero(blk.at(r, c)))
              mm.set(offset[static_cast<size_t>(q)][bi] + r, offset[static_cast<size_t>(p)][ai] + c, blk.at(r, c));
      }
      // other images: zero
    }
    return mm;
  };

  for (int n = 1; n <= m; ++n)
    for (int i = 0; i <= n; ++i) {
      // delta^i : [n-1] -> [n] skipping i
      std::vector<int> beta;
      for (int v2 = 0; v2 <= n; ++v2)
        if (v2 != i) beta.push_back(v2);
      s.set_face(n, i, structure(n, n - 1, beta));
    }
  for (int n = 0; n + 1 <= m; ++n)
    for (int j = 0; j <= n; ++j) {
      // sigma^j : [n+1] -> [n] hitting j twice
      std::vector<int> beta;
      for (int v2 = 0; v2 <= n + 1; ++v2) beta.push_back(v2 <= j ? v2 : v2 - 1);
      s.set_degeneracy(n, j, structure(n, n + 1, beta));
    }
  s.verify_simplicial_identities();
  return s;
}

Complex dold_kan_N(const SimplicialModule& s) {
  const Field& f = s.field();
  int m = s.levels();
  Complex c(f, DegreeWindow(-m, 0));

  // N^{-n} basis as columns inside X_n
  std::vector<std::vector<Vec>> nbasis(static_cast<size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) {
    if (n == 0) {
      for (int i = 0; i < s.dim(0); ++i) nbasis[0].push_back(Vec::unit(f, s.dim(0), i));
    } else {
      Matrix stacked(f, 0, s.dim(n));
      for (int i = 1; i <= n; ++i) stacked = stacked.vstack(s.face(n, i));
      nbasis[static_cast<size_t>(n)] = kernel_basis(stacked);
    }
    c.set_dim(-n, static_cast<int>(nbasis[static_cast<size_t>(n)].size()));
  }
  for (int n = 1; n <= m; ++n) {
    // d^{-n} = d_0 restricted to N^{-n}, expressed in the N^{-n+1} basis
    const auto& src = nbasis[static_cast<size_t>(n)];
    const auto& tgt = nbasis[static_cast<size_t>(n - 1)];
    Matrix tgtmat = Matrix::from_columns(f, tgt, s.dim(n - 1));
    Matrix d(f, static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
      Vec img = s.face(n, 0).apply(src[j]);
      auto x = solve(tgtmat, img);
      if (!x) throw PreconditionError("d_0 does not preserve the normalized subcomplex");
      for (int i = 0; i < d.rows(); ++i) d.set(i, static_cast<int>(j), (*x)[i]);
    }
    c.set_diff(-n, d);
  }
  c.validate();
  return c;
}

}  // namespace dgx
