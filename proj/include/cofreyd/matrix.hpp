#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cofreyd/field.hpp"

namespace cofreyd {

/// Dense row-major matrix over a runtime field. Entries are always canonical.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Convenience for tests and builders: integer entries reduced into the field.
  static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix column(Field field, const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores the canonical form of v.
  void set(std::size_t r, std::size_t c, const Scalar& v);
  /// Raw access for code that already produces canonical values.
  Scalar& mut(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Scalar& s) const;
  Vector apply(const Vector& v) const;

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzeros() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct AffineSolution {
  Vector particular;
  /// Rows span the null space of A; canonical (read off the rref).
  Matrix kernel_basis;
};

struct SolveResult {
  Matrix rref;
  std::vector<std::size_t> pivots;
  /// Present iff the system is consistent (always when no right-hand side is given).
  std::optional<AffineSolution> solution;

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form and, optionally, the affine solution set of A x = b.
SolveResult rref_solve(const Matrix& a, const std::optional<Vector>& b = std::nullopt);

/// Reduced row echelon form with zero rows dropped.
Matrix rref_rows(const Matrix& a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& a);
/// Rows form the canonical basis of {x : A x = 0}.
Matrix nullspace(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
Scalar determinant(const Matrix& a);

/// Solves X A = B for X (A: k x n, B: r x n); nullopt if inconsistent.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);
/// Solves A X = B for X; nullopt if inconsistent.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

// --- Sparse elimination -------------------------------------------------

using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Incremental row reduction. Dense storage below the threshold, sparse above;
/// both produce the same canonical rref and kernel basis.
class Eliminator {
 public:
  static constexpr std::size_t kDenseThreshold = 64;

  enum class Storage { Auto, Dense, Sparse };

  Eliminator(Field field, std::size_t ncols, Storage storage = Storage::Auto);

  /// Row must be sorted by column with canonical nonzero values. Returns true if it raised the rank.
  bool add_row(SparseRow row);
  bool add_row(const Vector& dense);

  std::size_t cols() const noexcept { return ncols_; }
  std::size_t rank() const noexcept { return pivot_cols_.size(); }
  bool sparse() const noexcept { return sparse_; }

  /// Reduced row echelon form (rank rows).
  Matrix rref() const;
  std::vector<std::size_t> pivots() const;
  /// Canonical null-space basis: one row per free column with a 1 there.
  Matrix kernel_basis() const;
  std::vector<std::size_t> free_columns() const;

 private:
  void reduce_fully(std::vector<SparseRow>& rows, std::vector<std::size_t>& order) const;

  Field field_;
  std::size_t ncols_;
  bool sparse_;
  std::vector<SparseRow> rows_;
  std::vector<std::int64_t> pivot_row_of_col_;
  std::vector<std::size_t> pivot_cols_;
};

SparseRow to_sparse(const Vector& v);

/// One equation sum_j row_j x_j = rhs.
struct SparseEquation {
  SparseRow row;
  Scalar rhs;
};

/// Particular solution (free unknowns set to zero) of a sparse system, or nullopt if
/// the system is inconsistent.
std::optional<Vector> sparse_solve(const Field& field, std::size_t ncols, const std::vector<SparseEquation>& eqs);

// --- Subspaces -------------------------------------------------------------

/// Subspace of F^n stored by its reduced row echelon basis (unique per subspace).
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient_dim);  // zero subspace
  static Subspace span(const Matrix& generators);
  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace full(Field field, std::size_t ambient_dim);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<std::size_t> complement_columns() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  /// Coordinates of v (assumed inside) in the echelon basis: entries at pivot columns.
  Vector coordinates(const Vector& v) const;
  /// Residue of v modulo the subspace, written on complement columns.
  Vector quotient_coordinates(const Vector& v) const;
  /// (ambient - dim) x ambient matrix of the quotient projection.
  Matrix quotient_map() const;
  /// ambient x (ambient - dim) section of the quotient map on complement columns.
  Matrix quotient_section() const;
  /// ambient x dim inclusion (columns are the basis vectors).
  Matrix inclusion() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  explicit Subspace(Matrix rref_basis, std::vector<std::size_t> pivots);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersection(const Subspace& u, const Subspace& v);
/// {w : <u, w> = 0 for all u in U}.
Subspace annihilator(const Subspace& u);
/// {x : A x in V}.
Subspace preimage(const Matrix& a, const Subspace& v);
Subspace image(const Matrix& a);
Subspace kernel(const Matrix& a);

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  /// dim U - dim(U cap V) = dim (U+V)/V; equals dim U/V when V is inside U.
  std::size_t quotient_dim;
  /// V inside U.
  bool contains;
};

SubspaceOps subspace_ops(const Subspace& u, const Subspace& v);

}  // namespace cofreyd
