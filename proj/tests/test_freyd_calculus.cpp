#include <random>

#include "cofreyd/freyd.hpp"
#include "cofreyd/spectral.hpp"
#include "doctest.h"

using namespace cofreyd;

namespace {

CoalgebraPtr chain(std::size_t d, const Field& f = Field::rationals()) {
  return std::make_shared<const Coalgebra>(incidence_chain(d, f));
}

/// Coefficients c with sum c_i basis_i = target, by a dense solve on flattened entries.
std::optional<Vector> dense_span_solve(const std::vector<Matrix>& basis, const Matrix& target) {
  const Field& f = target.field();
  const std::size_t n = target.rows() * target.cols();
  Matrix a(f, n, basis.size());
  Vector b(n);
  for (std::size_t r = 0; r < target.rows(); ++r)
    for (std::size_t c = 0; c < target.cols(); ++c) {
      const std::size_t i = r * target.cols() + c;
      b[i] = target(r, c);
      for (std::size_t k = 0; k < basis.size(); ++k) a.set(i, k, basis[k](r, c));
    }
  const auto sol = rref_solve(a, b);
  if (!sol.solution) return std::nullopt;
  return sol.solution->particular;
}

/// A-zero directly: g = u beta for a comodule map beta: N' -> M.
bool direct_a_zero(const FreydMap& m) {
  const HomSpace h = hom_space(m.source.n, m.target.m);
  std::vector<Matrix> images;
  for (const auto& b : h.basis) images.push_back(m.target.u * b);
  if (images.empty()) return m.g.is_zero();
  return dense_span_solve(images, m.g).has_value();
}

/// B-zero directly: f = alpha u' for a comodule map alpha: N' -> M.
bool direct_b_zero(const FreydMap& m) {
  const HomSpace h = hom_space(m.source.n, m.target.m);
  std::vector<Matrix> images;
  for (const auto& b : h.basis) images.push_back(b * m.source.u);
  if (images.empty()) return m.f.is_zero();
  return dense_span_solve(images, m.f).has_value();
}

FreydObject with_flavor(FreydObject o, Flavor f) {
  o.flavor = f;
  return o;
}

std::vector<ComodulePtr> pool(std::size_t d, Side side = Side::Right, const Field& f = Field::rationals()) {
  auto out = loewy_family(chain(d, f), side);
  const std::size_t n = out.size();
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(direct_sum(out[i], out[i + 1]));
  return out;
}

}  // namespace

TEST_CASE("zero morphisms agree with direct factorization in both flavors") {
  std::mt19937_64 rng(31);
  for (std::size_t d = 1; d <= 2; ++d) {
    const auto p = pool(d);
    std::size_t zeros = 0, nonzeros = 0;
    for (int t = 0; t < 60; ++t) {
      const FreydObject x = random_freyd_object(rng, p), y = random_freyd_object(rng, p);
      const FreydMap m = random_freyd_map(rng, x, y);
      const auto b = is_zero_morphism(m);
      CHECK(b.zero == direct_b_zero(m));
      (b.zero ? zeros : nonzeros)++;
      if (b.zero) {
        REQUIRE(b.witness.has_value());
        CHECK(*b.witness * m.source.u == m.f);
        CHECK(intertwines(*b.witness, *m.source.n, *m.target.m));
        REQUIRE(b.split.has_value());
        CHECK(b.split->first.f + b.split->second.f == m.f);
        CHECK(b.split->first.g + b.split->second.g == m.g);
      }
      const FreydMap ma{with_flavor(x, Flavor::A), with_flavor(y, Flavor::A), m.f, m.g};
      const auto a = is_zero_morphism(ma);
      CHECK(a.zero == direct_a_zero(ma));
      if (a.zero) {
        REQUIRE(a.witness.has_value());
        CHECK(y.u * *a.witness == m.g);
      }
    }
    CHECK(zeros > 0);
    CHECK(nonzeros > 0);
  }
}

TEST_CASE("identity, composition and the zero ideal") {
  std::mt19937_64 rng(37);
  const auto p = pool(1);
  for (int t = 0; t < 40; ++t) {
    const FreydObject x = random_freyd_object(rng, p), y = random_freyd_object(rng, p),
                      z = random_freyd_object(rng, p);
    const FreydMap m = random_freyd_map(rng, x, y);
    const FreydMap left = compose_freyd(identity_freyd_map(y), m);
    const FreydMap right = compose_freyd(m, identity_freyd_map(x));
    CHECK(left.f == m.f);
    CHECK(left.g == m.g);
    CHECK(right.f == m.f);
    CHECK(right.g == m.g);
    const FreydMap n = random_freyd_map(rng, y, z);
    const FreydMap nm = compose_freyd(n, m);
    if (is_zero_morphism(m).zero || is_zero_morphism(n).zero) CHECK(is_zero_morphism(nm).zero);
    const FreydMap m2 = random_freyd_map(rng, x, y);
    if (is_zero_morphism(m).zero && is_zero_morphism(m2).zero) CHECK(is_zero_morphism(add_freyd(m, m2)).zero);
    CHECK(is_zero_morphism(scale_freyd(m, Scalar(0))).zero);
  }
}

TEST_CASE("zero objects are split monomorphisms") {
  const auto c = chain(1);
  const auto fam = loewy_family(c, Side::Right);
  for (const auto& m : fam) {
    const auto id = make_freyd_object(m, m, Matrix::identity(c->field(), m->dim()));
    const auto r = is_zero_object(id);
    CHECK(r.zero);
    REQUIRE(r.retraction.has_value());
    CHECK((*r.retraction * id.u).is_identity());
    const auto zero = Comodule::zero(c, Side::Right);
    const auto from_zero = make_freyd_object(make_comodule(zero), m, Matrix(c->field(), m->dim(), 0));
    // 0 -> M is a split mono but not a split epi; M -> 0 the other way round.
    CHECK(is_zero_object(from_zero).zero);
    CHECK(!is_zero_object(with_flavor(from_zero, Flavor::A)).zero);
    const auto to_zero = make_freyd_object(m, make_comodule(zero), Matrix(c->field(), 0, m->dim()));
    CHECK(!is_zero_object(to_zero).zero);
    CHECK(is_zero_object(with_flavor(to_zero, Flavor::A)).zero);
  }
  // Socle inclusion into a non-split extension.
  for (const auto& e : fam) {
    if (e->dim() != 2) continue;
    const auto soc = subcomodule(e, socle(*e));
    const auto o = make_freyd_object(soc.comodule, e, soc.map.matrix);
    CHECK(!is_zero_object(o).zero);
    const auto sum = direct_sum(soc.comodule, e);
    Matrix incl(c->field(), sum->dim(), soc.comodule->dim());
    incl.set_block(0, 0, Matrix::identity(c->field(), soc.comodule->dim()));
    CHECK(is_zero_object(make_freyd_object(soc.comodule, sum, incl)).zero);
  }
}

TEST_CASE("null-homotopy of the completed chain map matches the zero test") {
  std::mt19937_64 rng(41);
  for (std::size_t d = 1; d <= 2; ++d) {
    const auto p = pool(d);
    for (int t = 0; t < 40; ++t) {
      const FreydObject x = random_freyd_object(rng, p), y = random_freyd_object(rng, p);
      const FreydMap m = random_freyd_map(rng, x, y);
      const ChainMap ch = complete_map(m);
      CHECK(ch.target.q * ch.g == ch.h * ch.source.q);
      CHECK(ch.source.exact_at_n);
      CHECK((ch.source.q * ch.source.u).is_zero());
      const auto nh = null_homotopy(ch);
      CHECK(nh.null_homotopic == is_zero_morphism(m).zero);
      if (nh.null_homotopic) {
        CHECK(*nh.alpha * ch.source.u == ch.f);
        CHECK(*nh.alpha_prime * ch.source.q + ch.target.u * *nh.alpha == ch.g);
      }
    }
  }
}

TEST_CASE("duality flips the flavor and preserves hom dimensions") {
  std::mt19937_64 rng(43);
  const auto p = pool(1);
  for (int t = 0; t < 30; ++t) {
    const FreydObject x = random_freyd_object(rng, p), y = random_freyd_object(rng, p);
    const FreydObject dx = dual_freyd(x), dy = dual_freyd(y);
    CHECK(dx.flavor == Flavor::A);
    CHECK(dx.m->side() == Side::Left);
    CHECK(dx.u == x.u.transpose());
    CHECK(freyd_hom_dim(x, y) == freyd_hom_dim(dy, dx));
    const FreydMap m = random_freyd_map(rng, x, y);
    CHECK(is_zero_morphism(m).zero == is_zero_morphism(dual_freyd(m)).zero);
    CHECK(square_basis(x, y).size() >= freyd_hom_dim(x, y));
  }
}

TEST_CASE("matrix coalgebra equivalence") {
  const auto c = chain(1);
  const auto m2 = std::make_shared<const Coalgebra>(matrix2_coalgebra(*c));
  const auto zero = make_comodule(Comodule::zero(c, Side::Right));
  const auto z = matrix_comodule_equivalence(make_freyd_object(zero, zero, Matrix(c->field(), 0, 0)), m2);
  CHECK(z.comodule->dim() == 0);

  std::mt19937_64 rng(47);
  const auto p = pool(1);
  bool candidate_rejected = false;
  for (const auto& m : loewy_family(c, Side::Right)) {
    const auto o = make_freyd_object(m, m, Matrix::identity(c->field(), m->dim()));
    const auto t = matrix_comodule_equivalence(o, m2);
    CHECK(t.comodule->dim() == 2 * m->dim());
    CHECK(validate_comodule(*t.comodule).ok);
  }
  for (int i = 0; i < 30; ++i) {
    const FreydObject o = random_freyd_object(rng, p);
    const auto t = matrix_comodule_equivalence(o, m2);
    CHECK(t.comodule->dim() == o.m->dim() + o.n->dim());
    CHECK(validate_comodule(*t.comodule).ok);
    const auto back = matrix_comodule_inverse(t.comodule, c);
    CHECK(is_idempotent(back.e));
    CHECK(is_idempotent(back.f));
    CHECK(find_mor_isomorphism(o, back.object).has_value());
    if (!o.u.is_zero() && !validate_comodule(*matrix_comodule_candidate(o, m2)).ok) candidate_rejected = true;
  }
  CHECK(candidate_rejected);
}
