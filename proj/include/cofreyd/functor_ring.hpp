#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cofreyd/freyd.hpp"

namespace cofreyd {

/// Basis element of Hom(U_from, U_to), index into that hom basis.
struct RingBasisElement {
  std::size_t from;
  std::size_t to;
  std::size_t index;
};

/// Truncated functor ring of a finite family: ⊕ Hom(U_i, U_j), product by composition
/// (x y = x after y, zero when the blocks do not match). Unit sum of e_i = id_{U_i}.
struct FunctorRing {
  std::vector<ComodulePtr> family;
  /// homs[i * r + j] = Hom(U_i, U_j).
  std::vector<HomSpace> homs;
  std::vector<std::size_t> offsets;
  std::vector<RingBasisElement> basis;
  MultTable table;
  std::vector<Vector> idempotents;

  std::size_t size() const { return family.size(); }
  std::size_t dim() const { return basis.size(); }
  const Field& field() const { return table.field(); }
  const HomSpace& hom(std::size_t i, std::size_t j) const { return homs[i * size() + j]; }
  std::size_t offset(std::size_t i, std::size_t j) const { return offsets[i * size() + j]; }
  /// Ring element of a map f: U_i -> U_j.
  Vector element(std::size_t i, std::size_t j, const Matrix& f) const;
  /// Block (i, j) of a ring element as a matrix U_i -> U_j.
  Matrix component(const Vector& x, std::size_t i, std::size_t j) const;
};

/// Verifies associativity, orthogonality of the e_i and that their sum is the unit.
FunctorRing build_functor_ring(std::vector<ComodulePtr> family);

/// Finite-dimensional left module over a functor ring, one action matrix per basis element.
struct FpModule {
  std::size_t dim = 0;
  std::vector<Matrix> actions;
  /// dim e_i X for every family member.
  std::vector<std::size_t> support;
  std::optional<FreydObject> presentation;
};

/// Action respects the table and the unit acts as the identity. Empty when valid.
std::vector<std::string> module_violations(const FpModule& x, const FunctorRing& ring);

/// X = ⊕_i Hom(M, U_i) / (Hom(N, U_i) u), R acting by postcomposition.
FpModule fp_module_from_freyd(const FreydObject& o, const FunctorRing& ring);

/// Rows of the result are a basis of the R-linear maps X -> Y, flattened row-major.
Matrix module_hom_basis(const FpModule& x, const FpModule& y);
std::size_t module_hom_dim(const FpModule& x, const FpModule& y);
std::optional<Matrix> find_module_isomorphism(const FpModule& x, const FpModule& y, std::uint64_t seed = 1);
FpModule direct_sum(const FpModule& x, const FpModule& y);

/// Smallest invariant subspace containing v.
Subspace spin(const Field& field, const std::vector<Matrix>& actions, const Vector& v);

/// Irreducibility. Norton's test with a nullity-one element certifies simplicity over any
/// field; a spin to a proper subspace certifies reducibility; small prime fields fall back to
/// spinning every projective point. Throws when undecided.
bool is_simple_module(const FpModule& x, const FunctorRing& ring);

struct HomDualityCheck {
  std::size_t dim_module_hom = 0;
  std::size_t dim_freyd_hom = 0;
  bool equal = false;
};

/// dim Hom_R(X(o1), X(o2)) against dim Hom_B(o2, o1).
HomDualityCheck hom_fp_duality_check(const FreydObject& o1, const FreydObject& o2, const FunctorRing& ring);

struct OppositeDuality {
  bool iso = false;
  std::size_t dim_r = 0;
  std::size_t dim_l = 0;
  /// Dual family member matched to each U_i*.
  std::vector<std::size_t> matching;
  /// dim_l x dim_r matrix of f -> f* in the two ring bases.
  Matrix map{Field::rationals(), 0, 0};
  std::vector<std::string> messages;
};

/// R from the family, L from `dual_family`, compared through f -> theta_i f* theta_j^{-1}
/// where theta_i: U_i* -> V_{matching[i]} is an isomorphism found by search.
OppositeDuality opposite_duality_check(const std::vector<ComodulePtr>& family,
                                       const std::vector<ComodulePtr>& dual_family);
OppositeDuality opposite_duality_check(const std::vector<ComodulePtr>& family);

struct SimpleWitness {
  ComodulePtr injective;
  FreydObject object;  // M -> M / soc M
  FpModule module;
  bool simple = false;
};

/// One witness per indecomposable injective summand of C on the given side.
std::vector<SimpleWitness> simple_witnesses(const CoalgebraPtr& c, Side side, const FunctorRing& ring);

struct OracleResult {
  std::size_t radical_dim = 0;
  /// Simple modules of the ring, one per block of R/J.
  std::vector<FpModule> simples;
  /// dim End of each simple.
  std::vector<std::size_t> end_dims;
  std::vector<std::size_t> block_dims;
  /// Sum of dim(S)^2 / dim End(S) equals dim R/J.
  bool complete = false;
};

/// Brute-force simple modules of a finite-dimensional algebra over F_p, p > dim.
OracleResult enumerate_simples_oracle(const MultTable& table);
OracleResult enumerate_simples_oracle(const FunctorRing& ring);

// --- symmetry probe -------------------------------------------------------------

struct SideProbe {
  std::vector<std::size_t> summand_dims;
  std::vector<bool> summand_simple;
  std::size_t min_dim = 0;
  std::size_t witness_count = 0;
  bool complete = true;
};

struct ProbeRow {
  std::size_t order = 0;
  std::size_t coalgebra_dim = 0;
  SideProbe right;
  SideProbe left;
};

struct ProbeReport {
  std::string builder;
  std::string field;
  std::vector<ProbeRow> rows;
  /// Left minimum equals d + 1 and strictly increases (H only).
  bool left_min_unbounded = false;
  /// Right minimum equals 1 for every order (H only).
  bool right_min_constant = false;
  /// Every order has witnesses on both sides.
  bool both_sides_witnessed = false;
};

/// Builders: "incidence-chain", "dividedpower", "H".
CoalgebraPtr build_named_example(const std::string& name, std::size_t d, const Field& field);
ProbeReport symmetry_probe(const std::string& builder, const std::vector<std::size_t>& orders, const Field& field);

}  // namespace cofreyd
