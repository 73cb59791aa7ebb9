#include <algorithm>

#include "cofreyd/coalgebra.hpp"
#include "doctest.h"

using namespace cofreyd;

namespace {

/// Dense (Delta (x) 1) Delta - (1 (x) Delta) Delta per basis element, by index arithmetic.
std::vector<std::size_t> brute_coassociativity_failures(const Coalgebra& c) {
  const std::size_t n = c.dim();
  const Field& f = c.field();
  std::vector<std::vector<Scalar>> d(n, std::vector<Scalar>(n * n));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : c.delta()[k]) d[k][t.i * n + t.j] = f.add(d[k][t.i * n + t.j], t.coef);
  std::vector<std::size_t> bad;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Scalar> lhs(n * n * n), rhs(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& w = d[k][a * n + b];
        if (Field::is_zero(w)) continue;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            f.add_mul(lhs[(x * n + y) * n + b], w, d[a][x * n + y]);
            f.add_mul(rhs[(a * n + x) * n + y], w, d[b][x * n + y]);
          }
      }
    for (auto& v : lhs) v = f.reduce(v);
    for (auto& v : rhs) v = f.reduce(v);
    if (lhs != rhs) bad.push_back(k);
  }
  return bad;
}

std::vector<std::size_t> dims(const std::vector<Subspace>& s) {
  std::vector<std::size_t> out;
  for (const auto& v : s) out.push_back(v.dim());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("named examples are coassociative by dense tensor expansion") {
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (std::size_t d = 0; d <= 4; ++d) {
      const Coalgebra examples[] = {incidence_chain(d, f), divided_power_truncated(d, f), h_coalgebra(d, f),
                                    matrix2_coalgebra(incidence_chain(d, f))};
      for (const auto& c : examples) {
        CHECK(brute_coassociativity_failures(c).empty());
        CHECK(validate_coalgebra(c).ok);
      }
    }
}

TEST_CASE("corrupted structure constants are located") {
  Coalgebra c = incidence_chain(2);
  c.add_delta(c.index_of("(0,2)"), c.index_of("(0,0)"), c.index_of("(1,2)"), Scalar(1));
  const auto brute = brute_coassociativity_failures(c);
  const auto rep = validate_coalgebra(c);
  CHECK(!rep.ok);
  CHECK(std::find(rep.defect_locations.begin(), rep.defect_locations.end(), c.index_of("(0,2)")) !=
        rep.defect_locations.end());
  CHECK(!brute.empty());

  Coalgebra e = divided_power_truncated(2);
  e.set_epsilon(1, Scalar(1));
  CHECK(!validate_coalgebra(e).ok);
  CHECK(brute_coassociativity_failures(e).empty());
}

TEST_CASE("serial and parallel defect flags agree") {
  Coalgebra c = matrix2_coalgebra(incidence_chain(3));
  CHECK(coalgebra_defect_flags(c.delta(), c.epsilon(), c.field(), Exec::Serial) ==
        coalgebra_defect_flags(c.delta(), c.epsilon(), c.field(), Exec::Parallel));
  c.add_delta(3, 1, 2, Scalar(2));
  c.set_epsilon(5, Scalar(7));
  const auto s = coalgebra_defect_flags(c.delta(), c.epsilon(), c.field(), Exec::Serial);
  CHECK(s == coalgebra_defect_flags(c.delta(), c.epsilon(), c.field(), Exec::Parallel));
  CHECK(std::any_of(s.begin(), s.end(), [](std::uint8_t x) { return x != 0; }));
}

TEST_CASE("incidence coalgebra of a chain") {
  for (std::size_t d = 0; d <= 6; ++d) CHECK(incidence_chain(d).dim() == (d + 1) * (d + 2) / 2);
  const Coalgebra c = incidence_chain(3);
  CHECK(incidence_index(3, 1, 2) == c.index_of("(1,2)"));
  // Delta((0,3)) has one term per intermediate point.
  CHECK(c.delta()[c.index_of("(0,3)")].size() == 4);
  CHECK(c.epsilon()[c.index_of("(2,2)")] == 1);
  CHECK(c.epsilon()[c.index_of("(1,2)")] == 0);
  CHECK(coradical(c).dim() == 4);
  CHECK(sorted(coordinate_labels(c, coradical(c))) == std::vector<std::string>{"(0,0)", "(1,1)", "(2,2)", "(3,3)"});
  const auto filt = coradical_filtration(c);
  CHECK(dims(filt) == std::vector<std::size_t>{4, 7, 9, 10});
  for (const auto& s : filt) CHECK(is_subcoalgebra(c, s));
}

TEST_CASE("divided power coalgebra is pointed with a one-step filtration") {
  for (std::size_t d = 0; d <= 5; ++d) {
    const Coalgebra c = divided_power_truncated(d);
    std::vector<std::size_t> expected;
    for (std::size_t i = 1; i <= d + 1; ++i) expected.push_back(i);
    CHECK(dims(coradical_filtration(c)) == expected);
    CHECK(coordinate_labels(c, coradical(c)) == std::vector<std::string>{"c_0"});
  }
}

TEST_CASE("triangular coalgebra H_d") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const Coalgebra h = h_coalgebra(d);
    CHECK(h.dim() == 2 * (d + 1) + 1);
    CHECK(sorted(coordinate_labels(h, coradical(h))) == std::vector<std::string>{"c_0", "t"});
    const auto filt = coradical_filtration(h);
    REQUIRE(filt.size() >= 2);
    CHECK(sorted(coordinate_labels(h, filt[1])) == std::vector<std::string>{"c_0", "c_1", "t", "x_0"});
    CHECK(filt.back().dim() == h.dim());
  }
  CHECK(h_coalgebra(1).decompositions().size() >= 2);
}

TEST_CASE("dual algebras") {
  const Coalgebra c = incidence_chain(2);
  const MultTable a = dual_algebra(c);
  CHECK(a.is_associative());
  CHECK(a.is_unital());
  // (x,y)* (z,w)* = delta_{yz} (x,w)*
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) {
      const auto& li = c.label(i);
      const auto& lj = c.label(j);
      const bool composable = li[3] == lj[1];
      const auto& prod = a.product(i, j);
      if (!composable) {
        CHECK(prod.empty());
      } else {
        REQUIRE(prod.size() == 1);
        const std::string expect = std::string("(") + li[1] + "," + lj[3] + ")";
        CHECK(c.label(prod[0].index) == expect);
        CHECK(prod[0].coef == 1);
      }
    }

  const Coalgebra m2 = matrix2_coalgebra(c);
  const MultTable t = dual_algebra(m2);
  CHECK(t == triangular_matrix_algebra(a));
  CHECK(has_triangular_shape(t, c.dim(), c.dim(), c.dim()));
  CHECK(!has_triangular_shape(a, 1, 1, c.dim() - 2));
}

TEST_CASE("bicomodule and poset validation") {
  const auto c = std::make_shared<const Coalgebra>(divided_power_truncated(2));
  Bicomodule m = epsilon_bicomodule(c, "x");
  CHECK(bicomodule_violations(m).empty());
  m.right = {m.left[1]};
  CHECK(!bicomodule_violations(m).empty());

  CHECK(Poset::chain(4).violations().empty());
  CHECK(Poset::antichain(3).violations().empty());
  Poset p = Poset::chain(3);
  p.leq[2][0] = true;
  CHECK(!p.violations().empty());
  CHECK(incidence_coalgebra(Poset::antichain(3)).dim() == 3);
}
