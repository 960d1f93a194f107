#include "dgx/linalg.hpp"

#include <algorithm>

namespace dgx {

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!f.is_zero(a.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) {
        Scalar tmp = a.at(r, j);
        a.set(r, j, a.at(piv, j));
        a.set(piv, j, tmp);
      }
    Scalar inv = f.inv(a.at(r, c));
    for (int j = c; j < a.cols(); ++j) a.set(r, j, f.mul(a.at(r, j), inv));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Scalar factor = a.at(i, c);
      if (f.is_zero(factor)) continue;
      for (int j = c; j < a.cols(); ++j) a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{a, pivots};
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    Vec v(f, m.cols());
    v[c] = f.one();
    for (int i = 0; i < rr.rank(); ++i) {
      int pc = rr.pivot_cols[static_cast<size_t>(i)];
      v[pc] = f.neg(rr.rref.at(i, c));
    }
    basis.push_back(v);
  }
  return basis;
}

std::vector<Vec> image_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<Vec> basis;
  for (int c : rr.pivot_cols) basis.push_back(m.column(c));
  return basis;
}

int rank(const Matrix& m) { return rref(m).rank(); }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  const Field& f = m.field();
  if (b.size() != m.rows()) throw DimensionError("solve: rhs size mismatch");
  Matrix aug = m.hstack(Matrix::from_columns(f, {b}, m.rows()));
  RrefResult rr = rref(aug);
  for (int c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;  // pivot in the rhs column
  Vec x(f, m.cols());
  for (int i = 0; i < rr.rank(); ++i) {
    int pc = rr.pivot_cols[static_cast<size_t>(i)];
    x[pc] = rr.rref.at(i, m.cols());
  }
  return x;
}

Subspace Subspace::span(Field f, int ambient_dim, const std::vector<Vec>& gens) {
  Matrix rows(f, static_cast<int>(gens.size()), ambient_dim);
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    if (gens[static_cast<size_t>(i)].size() != ambient_dim) throw DimensionError("subspace: generator size mismatch");
    for (int j = 0; j < ambient_dim; ++j) rows.set(i, j, gens[static_cast<size_t>(i)][j]);
  }
  RrefResult rr = rref(rows);
  Subspace s(f, ambient_dim);
  s.rows_ = rr.rref.submatrix(0, 0, rr.rank(), ambient_dim);
  s.pivots_ = rr.pivot_cols;
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != dim_) throw DimensionError("subspace reduce: size mismatch");
  Vec r = v;
  for (int i = 0; i < rows_.rows(); ++i) {
    int pc = pivots_[static_cast<size_t>(i)];
    Scalar c = r[pc];
    if (f_.is_zero(c)) continue;
    for (int j = 0; j < dim_; ++j) r[j] = f_.sub(r[j], f_.mul(c, rows_.at(i, j)));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

int BlockSystem::add_block(const std::string& name, int dim) {
  names_.push_back(name);
  dims_.push_back(dim);
  offsets_.push_back(total_);
  total_ += dim;
  return static_cast<int>(names_.size()) - 1;
}

void BlockSystem::add_equation(const std::vector<std::pair<int, Matrix>>& terms, const Vec& rhs) {
  for (const auto& [id, m] : terms) {
    if (m.cols() != dims_[static_cast<size_t>(id)]) throw DimensionError("BlockSystem: term width mismatch");
    if (m.rows() != rhs.size()) throw DimensionError("BlockSystem: term height mismatch");
  }
  eqs_.push_back(Eq{terms, rhs});
}

std::optional<std::vector<Vec>> BlockSystem::solve() const {
  int nrows = 0;
  for (const auto& e : eqs_) nrows += e.rhs.size();
  Matrix big(f_, nrows, total_);
  Vec rhs(f_, nrows);
  int at = 0;
  for (const auto& e : eqs_) {
    for (const auto& [id, m] : e.terms) {
      // accumulate: a block may appear twice in one equation
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          big.set(at + i, offsets_[static_cast<size_t>(id)] + j,
                  f_.add(big.at(at + i, offsets_[static_cast<size_t>(id)] + j), m.at(i, j)));
    }
    for (int i = 0; i < e.rhs.size(); ++i) rhs[at + i] = e.rhs[i];
    at += e.rhs.size();
  }
  auto x = dgx::solve(big, rhs);
  if (!x) return std::nullopt;
  std::vector<Vec> out;
  for (size_t b = 0; b < names_.size(); ++b) out.push_back(x->slice(offsets_[b], dims_[b]));
  return out;
}

}  // namespace dgx
