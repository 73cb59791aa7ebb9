#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cofreyd/algebra.hpp"
#include "cofreyd/kernels.hpp"

namespace cofreyd {

/// A splitting of a coalgebra into subspaces that are one-sided subcomodules.
struct TaggedDecomposition {
  std::string side;  // "left" or "right"
  std::vector<std::string> names;
  std::vector<Subspace> parts;
};

/// Coalgebra given by structure constants: Delta(b_k) = sum c^{ij}_k b_i (x) b_j.
class Coalgebra {
 public:
  Coalgebra(Field field, std::vector<std::string> labels);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t k) const { return labels_.at(k); }
  /// Throws if the label is unknown.
  std::size_t index_of(const std::string& label) const;

  /// Accumulates c into the coefficient of b_i (x) b_j in Delta(b_k).
  void add_delta(std::size_t k, std::size_t i, std::size_t j, const Scalar& c);
  void set_epsilon(std::size_t k, const Scalar& v);

  const DeltaTable& delta() const noexcept { return delta_; }
  const Vector& epsilon() const noexcept { return epsilon_; }

  void add_decomposition(TaggedDecomposition d) { decompositions_.push_back(std::move(d)); }
  const std::vector<TaggedDecomposition>& decompositions() const noexcept { return decompositions_; }

  /// Coradical, computed once and cached (see coradical()).
  const Subspace& cached_coradical() const;

  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.field_ == b.field_ && a.labels_ == b.labels_ && a.delta_ == b.delta_ && a.epsilon_ == b.epsilon_;
  }

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  DeltaTable delta_;
  Vector epsilon_;
  std::vector<TaggedDecomposition> decompositions_;
  struct Cache {
    std::mutex mutex;
    std::optional<Subspace> coradical;
  };
  /// Replaced on every mutation, so copies never see a stale value.
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

struct ValidationReport {
  bool ok = true;
  /// Basis indices where an axiom fails.
  std::vector<std::size_t> defect_locations;
  std::vector<std::string> messages;
};

ValidationReport validate_coalgebra(const Coalgebra& c, Exec exec = Exec::Parallel);

struct Poset {
  std::size_t size = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<std::string> names;

  static Poset chain(std::size_t n);  // 0 < 1 < ... < n-1
  static Poset antichain(std::size_t n);
  bool less_equal(std::size_t x, std::size_t y) const { return leq[x][y]; }
  /// Empty when reflexive, antisymmetric and transitive.
  std::vector<std::string> violations() const;
};

/// C-D bicomodule on F^m: left[k] is the action matrix of c_k, right[l] that of d_l.
struct Bicomodule {
  CoalgebraPtr left_parent;
  CoalgebraPtr right_parent;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
};

/// Both coactions valid and commuting. Returns failure messages (empty if valid).
std::vector<std::string> bicomodule_violations(const Bicomodule& m);

/// Basis (x,y), x <= y, lexicographic; Delta((x,y)) = sum over x<=z<=y of (x,z) (x) (z,y).
Coalgebra incidence_coalgebra(const Poset& p, const Field& field = Field::rationals());
/// Incidence coalgebra of the chain 0 < 1 < ... < d.
Coalgebra incidence_chain(std::size_t d, const Field& field = Field::rationals());
std::size_t incidence_index(std::size_t d, std::size_t x, std::size_t y);

/// c_0..c_d with Delta(c_n) = sum_{i+j=n} c_i (x) c_j.
Coalgebra divided_power_truncated(std::size_t d, const Field& field = Field::rationals());

/// H = C + M + D with the triangular comultiplication; basis C block, M block, D block.
Coalgebra triangular_coalgebra(const Bicomodule& m);
/// C as a C-F bicomodule: left coaction Delta, right coaction through epsilon.
Bicomodule epsilon_bicomodule(const CoalgebraPtr& c, const std::string& prefix);
/// H_d: C = divided_power_truncated(d), D = F, M = C. Labels c_n, x_n, t.
Coalgebra h_coalgebra(std::size_t d, const Field& field = Field::rationals());

/// Upper triangular 2x2 matrix coalgebra over C; basis x[..], y[..], z[..].
Coalgebra matrix2_coalgebra(const Coalgebra& c);

/// One-dimensional grouplike coalgebra.
Coalgebra grouplike_coalgebra(const Field& field = Field::rationals(), const std::string& label = "g");

/// Convolution algebra: (b_i* b_j*)(b_k) = c^{ij}_k, unit epsilon. Verifies the axioms.
MultTable dual_algebra(const Coalgebra& c);

/// Table of upper triangular matrices [[a, b], [0, c]] with entries in a; basis
/// X-block, Y-block, Z-block, each indexed like a.
MultTable triangular_matrix_algebra(const MultTable& a);

/// True iff the table has the upper triangular block shape for blocks (p, q, r):
/// P P -> P, P Q -> Q, Q R -> Q, R R -> R and all other block products vanish.
bool has_triangular_shape(const MultTable& t, std::size_t p, std::size_t q, std::size_t r);

/// C_0 = annihilator of J(C*). Requires char 0 or p > dim C.
Subspace coradical(const Coalgebra& c);

/// C_0, C_1, ... with C_{i+1} = Delta^{-1}(C (x) C_i + C_0 (x) C), up to C. Each term
/// is checked to be a subcoalgebra.
std::vector<Subspace> coradical_filtration(const Coalgebra& c);

/// Delta(V) inside V (x) V.
bool is_subcoalgebra(const Coalgebra& c, const Subspace& v);

/// Labels of the basis vectors spanning V when V is a coordinate subspace; empty otherwise.
std::vector<std::string> coordinate_labels(const Coalgebra& c, const Subspace& v);

}  // namespace cofreyd
