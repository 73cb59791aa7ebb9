#pragma once

// Data-parallel kernels. Each has a serial reference path (Exec::Serial) that
// defines the semantics; the OpenMP path must agree with it exactly.

#include <cstdint>
#include <vector>

#include "cofreyd/algebra.hpp"

namespace cofreyd {

enum class Exec { Serial, Parallel };

/// Comultiplication table: delta[k] lists the terms c * b_i (x) b_j of Delta(b_k),
/// sorted by (i, j).
struct DeltaTerm {
  std::uint32_t i;
  std::uint32_t j;
  Scalar coef;

  friend bool operator==(const DeltaTerm&, const DeltaTerm&) = default;
};

using DeltaTable = std::vector<std::vector<DeltaTerm>>;

/// Bit 0: coassociativity fails at b_k; bit 1: left counit; bit 2: right counit.
std::vector<std::uint8_t> coalgebra_defect_flags(const DeltaTable& delta, const Vector& epsilon,
                                                 const Field& field, Exec exec = Exec::Parallel);

/// Sparse action matrices: actions[k] lists (row, col, value) of A_k.
struct ActionEntry {
  std::uint32_t row;
  std::uint32_t col;
  Scalar value;
};

using ActionList = std::vector<std::vector<ActionEntry>>;

/// For a right comodule with A_j A_k = sum_l c^{jk}_l A_l (left: c^{kj}_l) and the counit
/// identity sum_k eps(b_k) A_k = 1: flags per coalgebra index j (bit 0: multiplicativity
/// fails for some k, bit 1: counit fails; counit is reported on j = 0).
std::vector<std::uint8_t> comodule_defect_flags(const ActionList& actions, std::size_t module_dim,
                                                const DeltaTable& delta, const Vector& epsilon,
                                                bool left_side, const Field& field,
                                                Exec exec = Exec::Parallel);

/// Gram matrix T_ij = tr(L_{b_i b_j}) of the trace form of a multiplication table.
Matrix trace_gram(const MultTable& table, Exec exec = Exec::Parallel);

/// Gram matrix T_ab = tr(M_a M_b) for a family of square matrices.
Matrix matrix_trace_gram(const std::vector<Matrix>& family, Exec exec = Exec::Parallel);

}  // namespace cofreyd
