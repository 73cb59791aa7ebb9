#include <algorithm>

#include "cofreyd/comodule.hpp"
#include "cofreyd/spectral.hpp"
#include "doctest.h"

using namespace cofreyd;

namespace {

CoalgebraPtr chain(std::size_t d, const Field& f = Field::rationals()) {
  return std::make_shared<const Coalgebra>(incidence_chain(d, f));
}

/// dim {F : F A^M_k = A^N_k F for all k} from the Kronecker form of the equations.
std::size_t kronecker_hom_dim(const Comodule& m, const Comodule& n) {
  const std::size_t a = m.dim(), b = n.dim(), c = m.coalgebra().dim();
  const Field& f = m.field();
  Matrix eq(f, c * b * a, b * a);
  std::size_t row = 0;
  for (std::size_t k = 0; k < c; ++k)
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < a; ++j, ++row) {
        // (F A^M)_{ij} - (A^N F)_{ij}
        for (std::size_t l = 0; l < a; ++l)
          eq.set(row, i * a + l, f.add(eq(row, i * a + l), m.action(k)(l, j)));
        for (std::size_t l = 0; l < b; ++l)
          eq.set(row, l * a + j, f.sub(eq(row, l * a + j), n.action(k)(i, l)));
      }
  return b * a - rank(eq);
}

/// soc M for a pointed coalgebra whose coradical is a coordinate subspace: the common
/// kernel of the actions of the non-coradical basis vectors.
Subspace pointed_socle(const Comodule& m) {
  const Subspace c0 = coradical(m.coalgebra());
  Matrix stacked(m.field(), 0, m.dim());
  for (std::size_t k = 0; k < m.coalgebra().dim(); ++k) {
    Vector e(m.coalgebra().dim());
    e[k] = 1;
    if (!c0.contains(e)) stacked = vstack(stacked, m.action(k));
  }
  return Subspace::span(nullspace(stacked));
}

}  // namespace

TEST_CASE("regular and dual comodules are valid") {
  for (std::size_t d = 0; d <= 3; ++d)
    for (const Side side : {Side::Left, Side::Right}) {
      for (const auto& c : {chain(d), std::make_shared<const Coalgebra>(h_coalgebra(d + 1))}) {
        const auto reg = regular_comodule(c, side);
        CHECK(validate_comodule(*reg).ok);
        const auto dual = dual_comodule(reg);
        CHECK(dual->side() == opposite(side));
        CHECK(validate_comodule(*dual).ok);
        CHECK(validate_comodule(*reg, Exec::Serial).ok);
      }
    }
}

TEST_CASE("a broken counit is rejected") {
  const auto c = chain(1);
  const auto reg = regular_comodule(c, Side::Right);
  std::vector<Matrix> a = reg->actions();
  a[0].set(0, 0, Scalar(2));
  const Comodule bad(c, Side::Right, a);
  CHECK(!validate_comodule(bad).ok);
}

TEST_CASE("hom spaces match the Kronecker nullspace") {
  for (const Field& f : {Field::rationals(), Field::prime(7)})
    for (std::size_t d = 1; d <= 2; ++d)
      for (const Side side : {Side::Left, Side::Right}) {
        const auto fam = loewy_family(chain(d, f), side);
        for (const auto& m : fam)
          for (const auto& n : fam) {
            const HomSpace h = hom_space(m, n);
            CHECK(h.dim() == kronecker_hom_dim(*m, *n));
            for (const auto& b : h.basis) CHECK(intertwines(b, *m, *n));
          }
      }
}

TEST_CASE("hom dimensions of the right C_[0,1] family") {
  const auto fam = loewy_family(chain(1), Side::Right);
  REQUIRE(fam.size() == 3);
  std::vector<std::vector<std::size_t>> dims(3, std::vector<std::size_t>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) dims[i][j] = hom_space(fam[i], fam[j]).dim();
  CHECK(dims == std::vector<std::vector<std::size_t>>{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
}

TEST_CASE("socle agrees with the pointed-coalgebra formula") {
  for (std::size_t d = 0; d <= 3; ++d)
    for (const Side side : {Side::Left, Side::Right}) {
      const auto c = chain(d);
      const auto reg = regular_comodule(c, side);
      CHECK(socle(*reg) == pointed_socle(*reg));
      CHECK(socle(*reg).dim() == d + 1);
      for (const auto& m : loewy_family(c, side)) CHECK(socle(*m) == pointed_socle(*m));
    }
}

TEST_CASE("uniseriality agrees with lattice enumeration") {
  for (const Field& f : {Field::prime(7), Field::prime(11)})
    for (std::size_t d = 1; d <= 2; ++d)
      for (const Side side : {Side::Left, Side::Right}) {
        const auto fam = loewy_family(chain(d, f), side);
        for (const auto& m : fam) {
          CHECK(is_uniserial(m) == subcomodule_lattice_is_chain(*m));
          CHECK(is_uniserial(m));
        }
        const auto sum = direct_sum(fam.front(), fam.back());
        CHECK(!is_uniserial(sum));
        CHECK(!subcomodule_lattice_is_chain(*sum));
      }
}

TEST_CASE("injective summands of incidence chains") {
  for (std::size_t d = 0; d <= 3; ++d)
    for (const Side side : {Side::Left, Side::Right}) {
      const auto c = chain(d);
      const auto dec = decompose_injectives(c, side);
      CHECK(dec.complete);
      REQUIRE(dec.summands.size() == d + 1);
      std::vector<std::size_t> sizes;
      std::size_t total = 0;
      for (std::size_t i = 0; i < dec.summands.size(); ++i) {
        const auto& s = dec.summands[i];
        sizes.push_back(s->dim());
        total += s->dim();
        CHECK(is_injective(s).injective);
        CHECK(is_indecomposable(s).status == Tristate::Yes);
        CHECK(socle(*s).dim() == 1);
        CHECK(is_idempotent(dec.idempotents[i]));
        for (std::size_t j = 0; j < dec.idempotents.size(); ++j)
          if (j != i) CHECK((dec.idempotents[i] * dec.idempotents[j]).is_zero());
      }
      CHECK(total == c->dim());
      std::sort(sizes.begin(), sizes.end());
      for (std::size_t i = 0; i < sizes.size(); ++i) CHECK(sizes[i] == i + 1);
    }
}

TEST_CASE("quotient of an injective by its socle is the next injective") {
  const auto c = chain(2);
  auto dec = decompose_injectives(c, Side::Right);
  auto summands = dec.summands;
  std::sort(summands.begin(), summands.end(), [](const auto& a, const auto& b) { return a->dim() > b->dim(); });
  for (std::size_t i = 0; i + 1 < summands.size(); ++i) {
    const auto q = quotient_comodule(summands[i], socle(*summands[i])).comodule;
    CHECK(validate_comodule(*q).ok);
    CHECK(find_isomorphism(q, summands[i + 1]).has_value());
  }
}

TEST_CASE("non-injective and decomposable comodules") {
  const auto c = chain(1);
  const auto fam = loewy_family(c, Side::Right);
  std::size_t injective = 0;
  for (const auto& m : fam) injective += is_injective(m).injective;
  CHECK(injective == 2);

  std::vector<ComodulePtr> simples;
  for (const auto& m : fam)
    if (is_simple(m)) simples.push_back(m);
  REQUIRE(simples.size() == 2);
  const auto sum = direct_sum(simples[0], simples[1]);
  const auto ind = is_indecomposable(sum);
  CHECK(ind.status == Tristate::No);
  REQUIRE(ind.idempotent.has_value());
  CHECK(is_idempotent(*ind.idempotent));
  CHECK(intertwines(*ind.idempotent, *sum, *sum));
}

TEST_CASE("double dual and dual maps") {
  const auto fam = loewy_family(chain(2), Side::Left);
  for (const auto& m : fam) {
    const auto dd = dual_comodule(dual_comodule(m));
    const auto iso = double_dual_iso(m, dd);
    CHECK(iso.matrix.is_identity());
    CHECK(intertwines(iso.matrix, *m, *dd));
  }
  const HomSpace h = hom_space(fam[0], fam[1]);
  for (const auto& b : h.basis) {
    const auto fm = make_map(fam[0], fam[1], b);
    const auto d = dual_map(fm);
    CHECK(d.matrix == b.transpose());
    CHECK(intertwines(d.matrix, *d.source, *d.target));
  }
  CHECK_THROWS_AS(make_map(fam[0], fam[0], Matrix(Field::rationals(), fam[0]->dim(), fam[0]->dim() + 1)), Error);
}

TEST_CASE("comodule entries round trip") {
  const auto c = chain(2);
  const auto reg = regular_comodule(c, Side::Left);
  const auto rebuilt = Comodule::from_entries(c, Side::Left, reg->dim(), reg->entries());
  CHECK(rebuilt.actions() == reg->actions());
  const auto s = subcomodule_generated(*reg, Vector{Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
  CHECK(is_subcomodule(*reg, s));
}
