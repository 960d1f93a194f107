#pragma once

#include <vector>

#include "dgx/field.hpp"

namespace dgx {

class Matrix;

// Column vector with an explicit field.
class Vec {
 public:
  Vec(Field f, int n) : f_(f), v_(static_cast<size_t>(n), f.zero()) {}
  Vec(Field f, std::vector<Scalar> entries) : f_(f), v_(std::move(entries)) {}

  const Field& field() const { return f_; }
  int size() const { return static_cast<int>(v_.size()); }
  const Scalar& operator[](int i) const { return v_[static_cast<size_t>(i)]; }
  Scalar& operator[](int i) { return v_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  Vec add(const Vec& o) const;
  Vec sub(const Vec& o) const;
  Vec neg() const;
  Vec scale(const Scalar& c) const;
  Vec concat(const Vec& o) const;
  Vec slice(int lo, int len) const;

  bool operator==(const Vec& o) const { return f_ == o.f_ && v_ == o.v_; }

  static Vec unit(Field f, int n, int i);

 private:
  Field f_;
  std::vector<Scalar> v_;
};

class Matrix {
 public:
  Matrix(Field f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, f.zero()) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  }

  static Matrix identity(Field f, int n);
  static Matrix zero(Field f, int rows, int cols) { return Matrix(f, rows, cols); }
  static Matrix from_rows(Field f, const std::vector<std::vector<long>>& rows);
  static Matrix from_columns(Field f, const std::vector<Vec>& cols, int rows);

  const Field& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Scalar& at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, const Scalar& v) { a_[idx(i, j)] = f_.reduce(v); }

  bool is_zero() const;
  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  Matrix neg() const;
  Matrix scale(const Scalar& c) const;
  Matrix mul(const Matrix& o) const;
  Vec apply(const Vec& x) const;
  Matrix transpose() const;

  Matrix hstack(const Matrix& o) const;  // [this | o]
  Matrix vstack(const Matrix& o) const;  // [this ; o]
  Matrix submatrix(int r0, int c0, int nr, int nc) const;
  Vec column(int j) const;
  Vec row_vec(int i) const;
  void set_block(int r0, int c0, const Matrix& m);

  bool operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DimensionError("matrix index out of range");
    return static_cast<size_t>(i) * cols_ + j;
  }
  Field f_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

}  // namespace dgx
