#include "dgx/matrix.hpp"

namespace dgx {

bool Vec::is_zero() const {
  for (const auto& x : v_)
    if (sgn(x) != 0) return false;
  return true;
}

Vec Vec::add(const Vec& o) const {
  if (f_ != o.f_) throw FieldMismatchError("vec add: field mismatch");
  if (size() != o.size()) throw DimensionError("vec add: size mismatch");
  Vec r(f_, size());
  for (int i = 0; i < size(); ++i) r[i] = f_.add(v_[i], o[i]);
  return r;
}

Vec Vec::sub(const Vec& o) const { return add(o.neg()); }

Vec Vec::neg() const {
  Vec r(f_, size());
  for (int i = 0; i < size(); ++i) r[i] = f_.neg(v_[i]);
  return r;
}

Vec Vec::scale(const Scalar& c) const {
  Vec r(f_, size());
  for (int i = 0; i < size(); ++i) r[i] = f_.mul(v_[i], c);
  return r;
}

Vec Vec::concat(const Vec& o) const {
  if (f_ != o.f_) throw FieldMismatchError("vec concat: field mismatch");
  std::vector<Scalar> e = v_;
  for (int i = 0; i < o.size(); ++i) e.push_back(o[i]);
  return Vec(f_, std::move(e));
}

Vec Vec::slice(int lo, int len) const {
  if (lo < 0 || len < 0 || lo + len > size()) throw DimensionError("vec slice out of range");
  std::vector<Scalar> e(v_.begin() + lo, v_.begin() + lo + len);
  return Vec(f_, std::move(e));
}

Vec Vec::unit(Field f, int n, int i) {
  Vec r(f, n);
  r[i] = f.one();
  return r;
}

Matrix Matrix::identity(Field f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<long>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc) throw DimensionError("ragged rows");
    for (int j = 0; j < nc; ++j) m.set(i, j, f.from_long(rows[i][j]));
  }
  return m;
}

Matrix Matrix::from_columns(Field f, const std::vector<Vec>& cols, int rows) {
  Matrix m(f, rows, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    if (cols[j].size() != rows) throw DimensionError("column size mismatch");
    for (int i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::add(const Matrix& o) const {
  if (f_ != o.f_) throw FieldMismatchError("matrix add: field mismatch");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add: shape mismatch");
  Matrix r(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::sub(const Matrix& o) const { return add(o.neg()); }

Matrix Matrix::neg() const {
  Matrix r(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.neg(a_[i]);
  return r;
}

Matrix Matrix::scale(const Scalar& c) const {
  Matrix r(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.mul(a_[i], c);
  return r;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (f_ != o.f_) throw FieldMismatchError("matrix mul: field mismatch");
  if (cols_ != o.rows_) throw DimensionError("matrix mul: shape mismatch");
  Matrix r(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (sgn(bkj) == 0) continue;
        r.a_[static_cast<size_t>(i) * r.cols_ + j] += aik * bkj;
      }
    }
  for (auto& x : r.a_) x = f_.reduce(x);
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (f_ != x.field()) throw FieldMismatchError("matrix apply: field mismatch");
  if (cols_ != x.size()) throw DimensionError("matrix apply: shape mismatch");
  Vec r(f_, rows_);
  for (int i = 0; i < rows_; ++i) {
    Scalar s = f_.zero();
    for (int j = 0; j < cols_; ++j) s += at(i, j) * x[j];
    r[i] = f_.reduce(s);
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (f_ != o.f_) throw FieldMismatchError("hstack: field mismatch");
  if (rows_ != o.rows_) throw DimensionError("hstack: row mismatch");
  Matrix r(f_, rows_, cols_ + o.cols_);
  r.set_block(0, 0, *this);
  r.set_block(0, cols_, o);
  return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (f_ != o.f_) throw FieldMismatchError("vstack: field mismatch");
  if (cols_ != o.cols_) throw DimensionError("vstack: col mismatch");
  Matrix r(f_, rows_ + o.rows_, cols_);
  r.set_block(0, 0, *this);
  r.set_block(rows_, 0, o);
  return r;
}

Matrix Matrix::submatrix(int r0, int c0, int nr, int nc) const {
  Matrix r(f_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r.set(i, j, at(r0 + i, c0 + j));
  return r;
}

Vec Matrix::column(int j) const {
  Vec r(f_, rows_);
  for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

Vec Matrix::row_vec(int i) const {
  Vec r(f_, cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

void Matrix::set_block(int r0, int c0, const Matrix& m) {
  if (f_ != m.f_) throw FieldMismatchError("set_block: field mismatch");
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) set(r0 + i, c0 + j, m.at(i, j));
}

}  // namespace dgx
