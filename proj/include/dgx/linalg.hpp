#pragma once

#include <optional>
#include <vector>

#include "dgx/matrix.hpp"

namespace dgx {

struct RrefResult {
  Matrix rref;
  std::vector<int> pivot_cols;  // leftmost-pivot order, strictly increasing
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// Reduced row echelon form with deterministic leftmost-nonzero pivoting.
RrefResult rref(const Matrix& m);

// Basis of ker(m), one vector per free column (free variable set to 1,
// earlier-listed basis vectors correspond to earlier free columns).
std::vector<Vec> kernel_basis(const Matrix& m);

// Pivot columns of the original matrix; spans the column space.
std::vector<Vec> image_basis(const Matrix& m);

int rank(const Matrix& m);

// Some x with m x = b, free variables set to zero; nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Row-span of a list of vectors in canonical (RREF) form; supports membership
// tests, reduction mod the span, and equality of subspaces.
class Subspace {
 public:
  Subspace(Field f, int ambient_dim) : f_(f), dim_(ambient_dim), rows_(f, 0, ambient_dim) {}
  static Subspace span(Field f, int ambient_dim, const std::vector<Vec>& gens);

  const Field& field() const { return f_; }
  int ambient_dim() const { return dim_; }
  int dim() const { return rows_.rows(); }
  bool contains(const Vec& v) const;
  // v minus its projection onto the span along pivot coordinates
  Vec reduce(const Vec& v) const;
  bool operator==(const Subspace& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const Matrix& basis_rows() const { return rows_; }

 private:
  Field f_;
  int dim_;
  Matrix rows_;  // RREF rows, canonical
  std::vector<int> pivots_;
};

// Affine system in several vector-valued unknowns ("blocks"); equations are
// sums of matrix·block terms equated to a right-hand side. Used for the
// homotopy-solvability questions, which are all linear in the unknown
// components.
class BlockSystem {
 public:
  explicit BlockSystem(Field f) : f_(f) {}
  int add_block(const std::string& name, int dim);
  // Σ coef[i] · block[i] = rhs  (all matrices rows() == rhs.size())
  void add_equation(const std::vector<std::pair<int, Matrix>>& terms, const Vec& rhs);
  std::optional<std::vector<Vec>> solve() const;  // per-block solutions
  int block_dim(int id) const { return dims_[static_cast<size_t>(id)]; }

 private:
  Field f_;
  std::vector<std::string> names_;
  std::vector<int> dims_, offsets_;
  int total_ = 0;
  struct Eq {
    std::vector<std::pair<int, Matrix>> terms;
    Vec rhs;
  };
  std::vector<Eq> eqs_;
};

}  // namespace dgx
