#include <random>
#include <set>

#include "cofreyd/algebra.hpp"
#include "cofreyd/kernels.hpp"
#include "cofreyd/spectral.hpp"
#include "doctest.h"

using namespace cofreyd;

namespace {

Matrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t r, std::size_t c, int density = 2) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % density == 0) m.set(i, j, Scalar(static_cast<long>(rng() % 7) - 3));
  return m;
}

/// Leibniz expansion, independent of elimination.
Scalar leibniz_det(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Scalar total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar term = a.field().from_int(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = a.field().mul(term, a(i, perm[i]));
    total = a.field().add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Size of the image of a matrix over F_p, by enumeration.
std::size_t image_size(const Matrix& a) {
  const std::uint64_t p = a.field().characteristic();
  std::set<std::vector<long>> seen;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < a.cols(); ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Vector x(a.cols());
    std::uint64_t c = code;
    for (std::size_t i = 0; i < a.cols(); ++i, c /= p) x[i] = Scalar(static_cast<long>(c % p));
    const Vector y = a.apply(x);
    std::vector<long> key;
    for (const auto& v : y) key.push_back(v.get_num().get_si());
    seen.insert(key);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("prime field arithmetic stays canonical") {
  const Field f = Field::prime(7);
  CHECK(f.add(Scalar(5), Scalar(4)) == 2);
  CHECK(f.neg(Scalar(3)) == 4);
  for (long a = 1; a < 7; ++a) CHECK(f.mul(Scalar(a), f.inv(Scalar(a))) == 1);
  CHECK(f.parse_scalar("-1") == 6);
  CHECK(f.parse_scalar("1/2") == 4);
  CHECK_THROWS_AS(f.inv(Scalar(0)), Error);
  CHECK(Field::parse("Fp:101") == Field::prime(101));
  CHECK(Field::parse("F101") == Field::prime(101));
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK_THROWS_AS(Field::parse("R"), ParseError);
  CHECK(Field::rationals().format(Scalar(-3, 4)) == "-3/4");
}

TEST_CASE("rank agrees with image enumeration over F_3") {
  std::mt19937_64 rng(3);
  const Field f = Field::prime(3);
  for (int t = 0; t < 40; ++t) {
    const Matrix a = random_matrix(rng, f, 1 + rng() % 4, 1 + rng() % 4);
    std::size_t expected = 1;
    for (std::size_t r = 0; r < rank(a); ++r) expected *= 3;
    CHECK(image_size(a) == expected);
  }
}

TEST_CASE("nullspace is the kernel and has complementary dimension") {
  std::mt19937_64 rng(5);
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (int t = 0; t < 30; ++t) {
      const Matrix a = random_matrix(rng, f, 1 + rng() % 6, 1 + rng() % 7);
      const Matrix k = nullspace(a);
      CHECK(k.rows() + rank(a) == a.cols());
      if (k.rows()) CHECK((a * k.transpose()).is_zero());
    }
}

TEST_CASE("dense and sparse elimination give the same canonical forms") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::rationals(), Field::prime(13)})
    for (int t = 0; t < 10; ++t) {
      const std::size_t cols = 40 + rng() % 60, rows = 20 + rng() % 50;
      Eliminator dense(f, cols, Eliminator::Storage::Dense), sparse(f, cols, Eliminator::Storage::Sparse);
      const Matrix a = random_matrix(rng, f, rows, cols, 9);
      for (std::size_t r = 0; r < rows; ++r) {
        CHECK(dense.add_row(a.row(r)) == sparse.add_row(a.row(r)));
      }
      CHECK(dense.rref() == sparse.rref());
      CHECK(dense.kernel_basis() == sparse.kernel_basis());
      CHECK(dense.rref() == rref_rows(a));
    }
}

TEST_CASE("determinant and inverse agree with the Leibniz formula") {
  std::mt19937_64 rng(11);
  for (const Field& f : {Field::rationals(), Field::prime(7)})
    for (int t = 0; t < 25; ++t) {
      const Matrix a = random_matrix(rng, f, 4, 4);
      const Scalar d = leibniz_det(a);
      CHECK(determinant(a) == d);
      const auto inv = inverse(a);
      CHECK(inv.has_value() == !Field::is_zero(d));
      if (inv) CHECK((a * *inv).is_identity());
    }
}

TEST_CASE("characteristic polynomial: Cayley-Hamilton and det(tI - A)") {
  std::mt19937_64 rng(13);
  for (const Field& f : {Field::rationals(), Field::prime(11)})
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 1 + rng() % 5;
      const Matrix a = random_matrix(rng, f, n, n);
      const Polynomial p = characteristic_polynomial(a);
      REQUIRE(p.size() == n + 1);
      CHECK(p.back() == 1);
      Matrix acc(f, n, n), power = Matrix::identity(f, n);
      for (const auto& c : p) {
        acc = acc + power.scaled(c);
        power = power * a;
      }
      CHECK(acc.is_zero());
      for (long x = -2; x <= 2; ++x) {
        const Scalar xs = f.reduce(Scalar(x));
        CHECK(evaluate(p, xs, f) == leibniz_det(Matrix::identity(f, n).scaled(xs) - a));
      }
    }
}

TEST_CASE("roots of a product of linear factors") {
  const Field q = Field::rationals();
  // (t - 2)(t + 1/3)(t - 5)^2
  Polynomial p{Scalar(1)};
  for (const Scalar r : {Scalar(2), Scalar(-1, 3), Scalar(5), Scalar(5)}) {
    Polynomial next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= r * p[i];
    }
    p = next;
  }
  CHECK(roots_in_field(p, q) == std::vector<Scalar>{Scalar(-1, 3), Scalar(2), Scalar(5)});
  const Field f = Field::prime(7);
  CHECK(roots_in_field({Scalar(1), Scalar(0), Scalar(1)}, f).empty());  // t^2 + 1 over F_7
}

TEST_CASE("Fitting idempotents split generalized eigenspaces") {
  const Field q = Field::rationals();
  const Matrix a = Matrix::from_ints(q, {{2, 1, 0}, {0, 2, 0}, {0, 0, 3}});
  const auto e = fitting_idempotent(a, Scalar(2));
  REQUIRE(e.has_value());
  CHECK(is_idempotent(*e));
  CHECK(*e * a == a * *e);
  CHECK(rank(*e) == 2);
  CHECK(!fitting_idempotent(Matrix::identity(q, 3), Scalar(1)).has_value());
  const auto s = split_by_eigenvalues(a);
  REQUIRE(s.has_value());
  CHECK(is_idempotent(*s));
}

TEST_CASE("subspace dimension formula and annihilators") {
  std::mt19937_64 rng(17);
  const Field f = Field::prime(101);
  for (int t = 0; t < 30; ++t) {
    const Subspace u = Subspace::span(random_matrix(rng, f, rng() % 5, 6));
    const Subspace v = Subspace::span(random_matrix(rng, f, rng() % 5, 6));
    const auto ops = subspace_ops(u, v);
    CHECK(ops.sum.dim() + ops.intersection.dim() == u.dim() + v.dim());
    CHECK(ops.sum.contains(u));
    CHECK(u.contains(ops.intersection));
    CHECK(ops.quotient_dim == u.dim() - ops.intersection.dim());
    CHECK(annihilator(u).dim() + u.dim() == 6);
    CHECK(annihilator(annihilator(u)) == u);
    const Matrix q = u.quotient_map();
    CHECK(q.rows() == 6 - u.dim());
    CHECK((q * u.quotient_section()).is_identity());
    for (std::size_t r = 0; r < u.dim(); ++r) CHECK(u.coordinates(u.basis().row(r))[r] == 1);
  }
}

TEST_CASE("sparse solve finds particular solutions and detects inconsistency") {
  std::mt19937_64 rng(19);
  const Field f = Field::rationals();
  for (int t = 0; t < 20; ++t) {
    const Matrix a = random_matrix(rng, f, 5, 7, 3);
    Vector x(7);
    for (auto& v : x) v = Scalar(static_cast<long>(rng() % 5));
    const Vector b = a.apply(x);
    std::vector<SparseEquation> eqs;
    for (std::size_t r = 0; r < 5; ++r) eqs.push_back({to_sparse(a.row(r)), b[r]});
    const auto sol = sparse_solve(f, 7, eqs);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
  }
  std::vector<SparseEquation> bad{{{{0, Scalar(1)}}, Scalar(1)}, {{{0, Scalar(2)}}, Scalar(3)}};
  CHECK(!sparse_solve(f, 1, bad).has_value());
}

TEST_CASE("trace-form radical of upper triangular matrices") {
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    // basis e11, e12, e22
    MultTable t(f, 3);
    t.add(0, 0, 0, 1);
    t.add(0, 1, 1, 1);
    t.add(1, 2, 1, 1);
    t.add(2, 2, 2, 1);
    t.set_unit({Scalar(1), Scalar(0), Scalar(1)});
    REQUIRE(t.is_associative());
    const Subspace j = trace_form_radical(t);
    CHECK(j.dim() == 1);
    CHECK(j.contains(Vector{Scalar(0), Scalar(1), Scalar(0)}));
    CHECK(t.nilpotency_index(j) == std::optional<std::size_t>(2));
  }
  MultTable small(Field::prime(3), 3);
  small.set_unit({Scalar(1), Scalar(0), Scalar(0)});
  CHECK_THROWS_AS(trace_form_radical(small), CharacteristicTooSmall);
}

TEST_CASE("serial and parallel Gram kernels agree") {
  std::mt19937_64 rng(23);
  const Field f = Field::prime(101);
  std::vector<Matrix> fam;
  for (int i = 0; i < 12; ++i) fam.push_back(random_matrix(rng, f, 5, 5));
  CHECK(matrix_trace_gram(fam, Exec::Serial) == matrix_trace_gram(fam, Exec::Parallel));
  MultTable t(f, 3);
  t.add(0, 0, 0, 1);
  t.add(0, 1, 1, 1);
  t.add(1, 2, 1, 1);
  t.add(2, 2, 2, 1);
  CHECK(trace_gram(t, Exec::Serial) == trace_gram(t, Exec::Parallel));
}
