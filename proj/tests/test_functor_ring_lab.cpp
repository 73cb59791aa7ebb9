#include <algorithm>
#include <random>

#include "cofreyd/functor_ring.hpp"
#include "doctest.h"

using namespace cofreyd;

namespace {

CoalgebraPtr chain(std::size_t d, const Field& f = Field::rationals()) {
  return std::make_shared<const Coalgebra>(incidence_chain(d, f));
}

/// Invariant subspaces of dimension one, by enumerating projective points of F_p^n.
bool has_invariant_line(const std::vector<Matrix>& actions, std::size_t n, std::uint64_t p) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vector v(n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) v[i] = Scalar(static_cast<long>(c % p));
    // Normalized representative: first nonzero entry is 1.
    const auto first = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) != 0; });
    if (*first != 1) continue;
    bool invariant = true;
    for (const auto& a : actions) {
      const Vector w = a.apply(v);
      Matrix two(a.field(), 2, n);
      for (std::size_t i = 0; i < n; ++i) {
        two.set(0, i, v[i]);
        two.set(1, i, w[i]);
      }
      if (rank(two) > 1) {
        invariant = false;
        break;
      }
    }
    if (invariant) return true;
  }
  return false;
}

/// Simplicity of a module of dimension <= 3 over F_p: no invariant line in X or in X*.
bool brute_simple(const FpModule& x, std::uint64_t p) {
  if (x.dim <= 1) return x.dim == 1;
  std::vector<Matrix> dual;
  for (const auto& a : x.actions) dual.push_back(a.transpose());
  return !has_invariant_line(x.actions, x.dim, p) && !has_invariant_line(dual, x.dim, p);
}

std::vector<ComodulePtr> with_sums(std::vector<ComodulePtr> fam) {
  const std::size_t n = fam.size();
  for (std::size_t i = 0; i + 1 < n; ++i) fam.push_back(direct_sum(fam[i], fam[i + 1]));
  return fam;
}

MultTable matrix_units(const Field& f, std::size_t n) {
  MultTable t(f, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.add(i * n + j, j * n + k, i * n + k, Scalar(1));
  Vector unit(n * n);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  t.set_unit(unit);
  return t;
}

}  // namespace

TEST_CASE("ring dimensions are sums of hom dimensions") {
  const auto one = build_functor_ring({regular_comodule(chain(0), Side::Right)});
  CHECK(one.dim() == 1);
  const auto fam = loewy_family(chain(1), Side::Right);
  const auto r = build_functor_ring(fam);
  CHECK(r.dim() == 5);
  std::size_t total = 0;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j) total += hom_space(fam[i], fam[j]).dim();
  CHECK(total == r.dim());
  CHECK(build_functor_ring(loewy_family(chain(2), Side::Left)).dim() == 15);
}

TEST_CASE("products are composition of maps") {
  const auto fam = loewy_family(chain(2), Side::Right);
  const auto r = build_functor_ring(fam);
  CHECK(r.table.is_associative());
  CHECK(r.table.is_unital());
  for (std::size_t x = 0; x < r.dim(); ++x)
    for (std::size_t y = 0; y < r.dim(); ++y) {
      const auto& bx = r.basis[x];
      const auto& by = r.basis[y];
      Vector ex(r.dim()), ey(r.dim());
      ex[x] = 1;
      ey[y] = 1;
      const Vector prod = r.table.multiply(ex, ey);
      if (by.to != bx.from) {
        CHECK(std::all_of(prod.begin(), prod.end(), [](const Scalar& s) { return sgn(s) == 0; }));
        continue;
      }
      const Matrix comp = r.hom(bx.from, bx.to).basis[bx.index] * r.hom(by.from, by.to).basis[by.index];
      CHECK(prod == r.element(by.from, bx.to, comp));
    }
  Vector sum(r.dim());
  for (const auto& e : r.idempotents)
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += e[i];
  CHECK(sum == *r.table.unit());
}

TEST_CASE("finitely presented modules") {
  const Field f = Field::prime(7);
  const auto c = chain(1, f);
  const auto fam = loewy_family(c, Side::Right);
  const auto r = build_functor_ring(fam);
  std::mt19937_64 rng(53);
  const auto pool = with_sums(fam);
  for (int t = 0; t < 30; ++t) {
    const FreydObject o = random_freyd_object(rng, pool);
    const FpModule x = fp_module_from_freyd(o, r);
    CHECK(module_violations(x, r).empty());
    std::size_t s = 0;
    for (const auto v : x.support) s += v;
    CHECK(s == x.dim);
    if (x.dim <= 3) CHECK(is_simple_module(x, r) == brute_simple(x, 7));
  }
  // Zero object gives the zero module; representable gives Hom(U, -).
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto& u = fam[i];
    const auto zero = make_comodule(Comodule::zero(c, Side::Right));
    CHECK(fp_module_from_freyd(make_freyd_object(u, u, Matrix::identity(f, u->dim())), r).dim == 0);
    const FpModule rep = fp_module_from_freyd(make_freyd_object(u, zero, Matrix(f, 0, u->dim())), r);
    for (std::size_t j = 0; j < fam.size(); ++j) CHECK(rep.support[j] == r.hom(i, j).dim());
  }
}

TEST_CASE("direct sums are not simple") {
  const Field f = Field::prime(7);
  const auto c = chain(1, f);
  const auto r = build_functor_ring(loewy_family(c, Side::Right));
  const auto w = simple_witnesses(c, Side::Right, r);
  REQUIRE(w.size() == 2);
  for (const auto& s : w) {
    CHECK(s.simple);
    if (s.module.dim <= 3) CHECK(brute_simple(s.module, 7));
  }
  const FpModule sum = direct_sum(w[0].module, w[1].module);
  CHECK(module_violations(sum, r).empty());
  CHECK(!is_simple_module(sum, r));
  CHECK(!brute_simple(sum, 7));
  CHECK(module_hom_dim(w[0].module, w[1].module) == 0);
  CHECK(module_hom_dim(w[0].module, w[0].module) == 1);
  CHECK(find_module_isomorphism(sum, direct_sum(w[1].module, w[0].module)).has_value());
}

TEST_CASE("simple-module oracle on known algebras") {
  const Field f = Field::prime(7);
  const auto m2 = enumerate_simples_oracle(matrix_units(f, 2));
  CHECK(m2.radical_dim == 0);
  REQUIRE(m2.simples.size() == 1);
  CHECK(m2.simples[0].dim == 2);
  CHECK(m2.complete);

  const auto field = enumerate_simples_oracle(matrix_units(f, 1));
  CHECK(field.simples.size() == 1);
  CHECK(field.simples[0].dim == 1);

  const auto r = build_functor_ring(loewy_family(chain(1, f), Side::Right));
  const auto o = enumerate_simples_oracle(r);
  CHECK(o.radical_dim == 2);
  CHECK(o.simples.size() == 3);
  CHECK(o.complete);
  for (const auto& s : o.simples) {
    CHECK(s.dim == 1);
    CHECK(module_violations(s, r).empty());
  }

  const auto r5 = build_functor_ring(loewy_family(chain(1, Field::prime(5)), Side::Right));
  CHECK_THROWS_AS(enumerate_simples_oracle(r5), CharacteristicTooSmall);
}

TEST_CASE("opposite duality is independent of the dual family order") {
  for (std::size_t d = 1; d <= 2; ++d) {
    const auto fam = loewy_family(chain(d), Side::Right);
    const auto plain = opposite_duality_check(fam);
    CHECK(plain.iso);
    CHECK(plain.dim_r == plain.dim_l);
    auto dual = loewy_family(chain(d), Side::Left);
    std::reverse(dual.begin(), dual.end());
    const auto permuted = opposite_duality_check(fam, dual);
    CHECK(permuted.iso);
    CHECK(permuted.map.rows() == permuted.dim_l);
  }
}

TEST_CASE("module homs against Freyd homs") {
  const Field f = Field::prime(101);
  const auto fam = loewy_family(chain(1, f), Side::Right);
  const auto r = build_functor_ring(fam);
  std::mt19937_64 rng(59);
  const auto pool = with_sums(fam);
  for (int t = 0; t < 25; ++t) {
    const FreydObject a = random_freyd_object(rng, pool), b = random_freyd_object(rng, pool);
    const auto h = hom_fp_duality_check(a, b, r);
    CHECK(h.equal);
    CHECK(h.dim_module_hom == h.dim_freyd_hom);
  }
}

TEST_CASE("simple injective summand of H gives a witness with zero cokernel") {
  const Field f = Field::prime(101);
  const auto h = std::make_shared<const Coalgebra>(h_coalgebra(1, f));
  const auto r = build_functor_ring(loewy_family(h, Side::Right));
  const auto w = simple_witnesses(h, Side::Right, r);
  bool found = false;
  for (const auto& s : w) {
    CHECK(s.simple);
    if (s.object.n->dim() == 0) found = true;
  }
  CHECK(found);
}

TEST_CASE("symmetry probe") {
  const Field f = Field::prime(101);
  const auto inc = symmetry_probe("incidence-chain", {1}, f);
  REQUIRE(inc.rows.size() == 1);
  auto dims = inc.rows[0].right.summand_dims;
  std::sort(dims.rbegin(), dims.rend());
  CHECK(dims == std::vector<std::size_t>{2, 1});
  CHECK(inc.rows[0].right.witness_count == 2);

  const auto h = symmetry_probe("H", {1, 2, 3, 4, 5, 6}, f);
  for (const auto& row : h.rows) {
    CHECK(row.left.min_dim == row.order + 1);
    CHECK(row.right.min_dim == 1);
  }
  CHECK(h.left_min_unbounded);
  CHECK(h.right_min_constant);
  CHECK(h.both_sides_witnessed);

  const auto dp = symmetry_probe("dividedpower", {3}, f);
  CHECK(dp.rows[0].right.summand_dims == std::vector<std::size_t>{4});
  CHECK(dp.rows[0].left.summand_dims == std::vector<std::size_t>{4});
  CHECK(!dp.right_min_constant);
  CHECK_THROWS_AS(build_named_example("nope", 1, f), Error);
}
