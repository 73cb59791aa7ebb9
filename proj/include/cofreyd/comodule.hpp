#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cofreyd/coalgebra.hpp"

namespace cofreyd {

enum class Side { Left, Right };

const char* side_name(Side s);
Side side_from_name(const std::string& s);
inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// Finite-dimensional comodule on F^m. Entry (s, t, k, r) of the coaction means
/// rho(e_s) contains r e_t (x) b_k (right) or r b_k (x) e_t (left). The action matrix of
/// b_k is A_k[t, s] = r. Right comodules satisfy A_j A_k = sum_l c^{jk}_l A_l, left ones
/// A_j A_k = sum_l c^{kj}_l A_l; both satisfy sum_k eps(b_k) A_k = 1.
class Comodule {
 public:
  struct Entry {
    std::uint32_t s;
    std::uint32_t t;
    std::uint32_t k;
    Scalar value;
  };

  Comodule(CoalgebraPtr parent, Side side, std::vector<Matrix> actions, std::string name = {});
  static Comodule from_entries(CoalgebraPtr parent, Side side, std::size_t dim, const std::vector<Entry>& entries,
                               std::string name = {});
  static Comodule zero(CoalgebraPtr parent, Side side, std::string name = "0");

  const CoalgebraPtr& parent() const noexcept { return parent_; }
  const Coalgebra& coalgebra() const noexcept { return *parent_; }
  const Field& field() const noexcept { return parent_->field(); }
  Side side() const noexcept { return side_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const Matrix& action(std::size_t k) const { return actions_.at(k); }
  const std::vector<Matrix>& actions() const noexcept { return actions_; }
  /// Sorted by (s, t, k).
  std::vector<Entry> entries() const;
  ActionList sparse_actions() const;

  /// Matrix of the action of a functional f in C* (given on the dual basis).
  Matrix act(const Vector& functional) const;

 private:
  CoalgebraPtr parent_;
  Side side_;
  std::size_t dim_;
  std::vector<Matrix> actions_;
  std::string name_;
};

using ComodulePtr = std::shared_ptr<const Comodule>;

ComodulePtr make_comodule(Comodule m);

/// Multiplicativity and counit checks.
ValidationReport validate_comodule(const Comodule& m, Exec exec = Exec::Parallel);

struct ComoduleMap {
  ComodulePtr source;
  ComodulePtr target;
  /// target.dim x source.dim
  Matrix matrix;
};

bool intertwines(const Matrix& f, const Comodule& source, const Comodule& target);
/// Throws InvalidStructure if the matrix is not a comodule map.
ComoduleMap make_map(ComodulePtr source, ComodulePtr target, Matrix f);
ComoduleMap identity_map(const ComodulePtr& m);
ComoduleMap compose(const ComoduleMap& g, const ComoduleMap& f);  // g after f

/// C over itself through Delta.
ComodulePtr regular_comodule(const CoalgebraPtr& c, Side side);

struct HomSpace {
  ComodulePtr source;
  ComodulePtr target;
  /// Canonical basis: one element per free unknown of the intertwiner system.
  std::vector<Matrix> basis;
  /// Unknown index (row-major entry of the map matrix) carrying each basis coordinate.
  std::vector<std::size_t> free_entries;

  std::size_t dim() const { return basis.size(); }
  /// Coordinates of a map known to lie in the space.
  Vector coordinates(const Matrix& f) const;
  Matrix combination(const Vector& coords) const;
};

HomSpace hom_space(const ComodulePtr& m, const ComodulePtr& n);

/// Smallest subcomodule containing v.
Subspace subcomodule_generated(const Comodule& m, const Vector& v);
bool is_subcomodule(const Comodule& m, const Subspace& v);

struct SubcomoduleResult {
  ComodulePtr comodule;
  /// inclusion: sub -> ambient (for sub) or projection ambient -> quotient.
  ComoduleMap map;
};

/// Restriction to a stable subspace, in the echelon coordinates of the subspace.
SubcomoduleResult subcomodule(const ComodulePtr& m, const Subspace& v, std::string name = {});
/// Quotient on the complement coordinates of the echelon basis.
SubcomoduleResult quotient_comodule(const ComodulePtr& m, const Subspace& v, std::string name = {});
ComodulePtr direct_sum(const ComodulePtr& a, const ComodulePtr& b, std::string name = {});

Subspace socle(const Comodule& m);

enum class Tristate { Yes, No, Unknown };
const char* tristate_name(Tristate t);

struct IndecomposableResult {
  Tristate status = Tristate::Unknown;
  std::size_t end_dim = 0;
  std::size_t radical_dim = 0;
  /// Nontrivial idempotent endomorphism when status is No.
  std::optional<Matrix> idempotent;
};

struct InjectiveResult {
  bool injective = false;
  /// sigma_t : C -> M for every basis vector e_t, with sum_{t,k} A_k[t,s] sigma_t(b_k) = e_s.
  std::optional<std::vector<Matrix>> retraction;
};

struct StructureReport {
  Subspace socle;
  /// L_1 = soc M, L_{i+1} / L_i = soc(M / L_i), ending at M.
  std::vector<Subspace> loewy;
  bool injective = false;
  Tristate indecomposable = Tristate::Unknown;
  bool simple = false;
  bool uniserial = false;
};

std::vector<Subspace> loewy_series(const Comodule& m);
InjectiveResult is_injective(const ComodulePtr& m);
IndecomposableResult is_indecomposable(const ComodulePtr& m);
bool is_simple(const ComodulePtr& m);
/// Every Loewy layer simple.
bool is_uniserial(const ComodulePtr& m);
StructureReport structure_report(const ComodulePtr& m);

/// Enumerates all subcomodules (small prime fields, p^dim <= 2^16) and reports whether
/// they form a chain. Independent of the Loewy-layer criterion.
bool subcomodule_lattice_is_chain(const Comodule& m);

struct InjectiveDecomposition {
  /// Summands ordered by the smallest pivot of their subspace.
  std::vector<Subspace> spaces;
  std::vector<ComodulePtr> summands;
  /// Orthogonal idempotent endomorphisms of the regular comodule with images `spaces`.
  std::vector<Matrix> idempotents;
  /// False if some summand could not be certified indecomposable.
  bool complete = true;
};

/// Splits the regular comodule into indecomposable injectives by idempotent splitting in
/// End(C) (spanned by c -> f(c_1) c_2 for right, c -> c_1 f(c_2) for left). The summands
/// are verified to be indecomposable with simple socle and to add up to C.
InjectiveDecomposition decompose_injectives(const CoalgebraPtr& c, Side side);

/// Opposite side, A*_k = A_k^T.
ComodulePtr dual_comodule(const ComodulePtr& m);
/// f: M -> N gives f*: N* -> M* with matrix f^T.
ComoduleMap dual_map(const ComoduleMap& f, const ComodulePtr& source_dual, const ComodulePtr& target_dual);
ComoduleMap dual_map(const ComoduleMap& f);
/// Natural isomorphism M -> M** (identity on the evaluation basis).
ComoduleMap double_dual_iso(const ComodulePtr& m, const ComodulePtr& double_dual);

/// Invertible comodule map M -> N, searched among random combinations of a Hom basis.
std::optional<ComoduleMap> find_isomorphism(const ComodulePtr& m, const ComodulePtr& n, std::uint64_t seed = 1);

/// Loewy terms of the injective summands of C: all nonzero L_i of each summand, deduplicated
/// up to isomorphism. Each has simple socle, hence is indecomposable. For an incidence chain
/// these are all the interval modules.
std::vector<ComodulePtr> loewy_family(const CoalgebraPtr& c, Side side);

}  // namespace cofreyd
