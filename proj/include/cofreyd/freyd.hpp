#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cofreyd/comodule.hpp"

namespace cofreyd {

enum class Flavor { B, A };
const char* flavor_name(Flavor f);
inline Flavor flip(Flavor f) { return f == Flavor::B ? Flavor::A : Flavor::B; }

/// Object u: M -> N of the morphism category, read in B (quotient by maps factoring
/// through u on the source side) or A (through u on the target side).
struct FreydObject {
  Flavor flavor = Flavor::B;
  ComodulePtr m;
  ComodulePtr n;
  Matrix u;
};

/// Square (f, g): (M', u', N') -> (M, u, N) with u f = g u'.
struct FreydMap {
  FreydObject source;
  FreydObject target;
  Matrix f;
  Matrix g;
};

FreydObject make_freyd_object(ComodulePtr m, ComodulePtr n, Matrix u, Flavor flavor = Flavor::B);
/// Checks the square condition and that f, g are comodule maps.
FreydMap make_freyd_map(FreydObject source, FreydObject target, Matrix f, Matrix g);
FreydMap identity_freyd_map(const FreydObject& o);
/// a after b.
FreydMap compose_freyd(const FreydMap& a, const FreydMap& b);
FreydMap add_freyd(const FreydMap& a, const FreydMap& b);
FreydMap scale_freyd(const FreydMap& a, const Scalar& s);

struct ZeroMorphismResult {
  bool zero = false;
  /// B: alpha: N' -> M with alpha u' = f. A: beta: N' -> M with u beta = g.
  std::optional<Matrix> witness;
  /// B: (alpha u', u alpha) and (0, g - u alpha). A: (beta u', u beta) and (f - beta u', 0).
  std::optional<std::pair<FreydMap, FreydMap>> split;
};

/// The A flavor is decided on the dual square as a B-zero test.
ZeroMorphismResult is_zero_morphism(const FreydMap& m);

struct ZeroObjectResult {
  bool zero = false;
  /// Retraction r: N -> M with r u = 1.
  std::optional<Matrix> retraction;
};

/// [M, u, N] = 0 iff u is a split monomorphism.
ZeroObjectResult is_zero_object(const FreydObject& o);

/// M -> N -> P = Coker u -> 0.
struct ThreeTermComplex {
  ComodulePtr m;
  ComodulePtr n;
  ComodulePtr p;
  Matrix u;
  Matrix q;
  bool exact_at_n = false;
};

ThreeTermComplex complete_to_complex(const FreydObject& o);

struct ChainMap {
  ThreeTermComplex source;
  ThreeTermComplex target;
  Matrix f;
  Matrix g;
  /// Induced map on cokernels with h q' = q g.
  Matrix h;
};

ChainMap complete_map(const FreydMap& m);

struct NullHomotopyResult {
  bool null_homotopic = false;
  std::optional<Matrix> alpha;        // N' -> M, alpha u' = f
  std::optional<Matrix> alpha_prime;  // P' -> N, alpha' q' + u alpha = g
};

NullHomotopyResult null_homotopy(const ChainMap& ch);

/// Dual object (N*, u*, M*) on the opposite side with the other flavor.
FreydObject dual_freyd(const FreydObject& o);
/// (f, g): X' -> X gives (g*, f*): X* -> X'*.
FreydMap dual_freyd(const FreydMap& m);
FreydMap dual_freyd(const FreydMap& m, const FreydObject& source_dual, const FreydObject& target_dual);

/// All squares (f, g) from `from` to `to`, as pairs of matrices.
std::vector<std::pair<Matrix, Matrix>> square_basis(const FreydObject& from, const FreydObject& to);
/// dim of squares modulo the B-zero ones (or A-zero ones for flavor A).
std::size_t freyd_hom_dim(const FreydObject& from, const FreydObject& to);

// --- M^2_Delta(C) equivalence --------------------------------------------------

struct MatrixEquivalence {
  CoalgebraPtr matrix_coalgebra;
  /// Right comodule on M + N (M block first).
  ComodulePtr comodule;
};

/// T = M + N with rho(m) = u(m_0) (x) y[m_1] + m_0 (x) z[m_1], rho(n) = n_0 (x) x[n_1].
MatrixEquivalence matrix_comodule_equivalence(const FreydObject& o, const CoalgebraPtr& m2);
MatrixEquivalence matrix_comodule_equivalence(const FreydObject& o);

/// The coaction display taken literally: rho(m) = u(m_0) (x) y[m_1] and
/// rho(n) = n_0 (x) x[n_1] + n_0 (x) z[n_1]. Returned unvalidated.
ComodulePtr matrix_comodule_candidate(const FreydObject& o, const CoalgebraPtr& m2);

struct InverseEquivalence {
  FreydObject object;
  /// Projections P_E, P_F and the map P_N given by the matrix units of M_2(C*).
  Matrix e, f, n;
};

/// E.T -> F.T given by left multiplication by the off-diagonal unit. C is the base coalgebra.
InverseEquivalence matrix_comodule_inverse(const ComodulePtr& t, const CoalgebraPtr& c);

/// Isomorphism (a, b) in Mor between two objects: a: M -> M2, b: N -> N2 invertible with
/// u2 a = b u.
struct MorIso {
  Matrix a;
  Matrix b;
};

std::optional<MorIso> find_mor_isomorphism(const FreydObject& x, const FreydObject& y, std::uint64_t seed = 1);

// --- sampling -------------------------------------------------------------------

/// Seeded random scalars: small integers over Q, uniform residues over F_p.
Scalar random_scalar(std::mt19937_64& rng, const Field& f, long radius = 3);
Matrix random_combination(std::mt19937_64& rng, const std::vector<Matrix>& basis, std::size_t rows, std::size_t cols,
                           const Field& f);
/// Random object u: M -> N with M, N from the pool and u a random comodule map.
FreydObject random_freyd_object(std::mt19937_64& rng, const std::vector<ComodulePtr>& pool);
/// Random square between two objects; with probability 1/2 a B-zero one.
FreydMap random_freyd_map(std::mt19937_64& rng, const FreydObject& from, const FreydObject& to);

}  // namespace cofreyd
