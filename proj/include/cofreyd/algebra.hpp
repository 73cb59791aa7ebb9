#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cofreyd/matrix.hpp"

namespace cofreyd {

/// One nonzero term of a sparse bilinear table: coefficient on basis element `index`.
struct Term {
  std::uint32_t index;
  Scalar coef;

  friend bool operator==(const Term&, const Term&) = default;
};

using TermList = std::vector<Term>;

/// Structure constants b_i b_j = sum_k c_ij^k b_k of a finite-dimensional algebra,
/// stored sparsely per (i, j).
class MultTable {
 public:
  MultTable(Field field, std::size_t dim);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }

  /// Accumulates c into the coefficient of b_k in b_i b_j.
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  const TermList& product(std::size_t i, std::size_t j) const { return prod_[i * dim_ + j]; }

  void set_unit(Vector unit);
  const std::optional<Vector>& unit() const noexcept { return unit_; }

  Vector multiply(const Vector& a, const Vector& b) const;
  /// Matrix of x -> a x in the basis.
  Matrix left_multiplication(const Vector& a) const;
  /// tr(L_{b_l}) for every basis element.
  Vector left_traces() const;

  /// Triples (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k); empty when associative.
  std::vector<std::array<std::size_t, 3>> associativity_defects(std::size_t limit = 16) const;
  bool is_associative() const { return associativity_defects(1).empty(); }
  bool is_unital() const;

  MultTable opposite() const;
  /// Table of A / I on the complement coordinates of I (I must be a two-sided ideal).
  MultTable quotient(const Subspace& ideal) const;

  bool is_two_sided_ideal(const Subspace& s) const;
  /// Smallest k with I^k = 0, or nullopt if the powers stabilize away from zero.
  std::optional<std::size_t> nilpotency_index(const Subspace& ideal) const;

  friend bool operator==(const MultTable& a, const MultTable& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.prod_ == b.prod_ && a.unit_ == b.unit_;
  }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<TermList> prod_;
  std::optional<Vector> unit_;
};

/// Jacobson radical as the radical of the trace form of the left regular representation.
/// Requires characteristic 0 or p > dim and an associative unital table. Post-conditions
/// (two-sided ideal, nilpotent, semisimple quotient) are re-verified when `verify` is set.
Subspace trace_form_radical(const MultTable& table, bool verify = true);

/// Radical of an algebra of m x m matrices given by a spanning family (closed under
/// products), computed from the trace form tr(a b) of the defining representation.
/// Returns the radical in coordinates of `basis`. Requires char 0 or p > m.
Subspace matrix_algebra_radical(const std::vector<Matrix>& basis);

void require_radical_characteristic(const Field& field, std::size_t dim);

}  // namespace cofreyd
