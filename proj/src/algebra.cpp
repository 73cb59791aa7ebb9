#include "cofreyd/algebra.hpp"

#include <algorithm>
#include <string>

#include "cofreyd/kernels.hpp"

namespace cofreyd {

MultTable::MultTable(Field field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), prod_(dim * dim) {}

void MultTable::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionMismatch("MultTable::add: index out of range");
  const Scalar v = field_.reduce(c);
  if (Field::is_zero(v)) return;
  auto& terms = prod_[i * dim_ + j];
  auto it = std::lower_bound(terms.begin(), terms.end(), k,
                             [](const Term& t, std::size_t key) { return t.index < key; });
  if (it != terms.end() && it->index == k) {
    it->coef = field_.add(it->coef, v);
    if (Field::is_zero(it->coef)) terms.erase(it);
  } else {
    terms.insert(it, Term{static_cast<std::uint32_t>(k), v});
  }
}

void MultTable::set_unit(Vector unit) {
  if (unit.size() != dim_) throw DimensionMismatch("MultTable::set_unit: length");
  for (auto& x : unit) x = field_.reduce(x);
  unit_ = std::move(unit);
}

Vector MultTable::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionMismatch("MultTable::multiply: length");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (Field::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (Field::is_zero(b[j])) continue;
      const Scalar ab = field_.mul(a[i], b[j]);
      for (const auto& t : product(i, j)) field_.add_mul(out[t.index], ab, t.coef);
    }
  }
  return out;
}

Matrix MultTable::left_multiplication(const Vector& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (Field::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product(i, j)) field_.add_mul(m.mut(t.index, j), a[i], t.coef);
  }
  return m;
}

Vector MultTable::left_traces() const {
  Vector tr(dim_);
  for (std::size_t l = 0; l < dim_; ++l)
    for (std::size_t k = 0; k < dim_; ++k)
      for (const auto& t : product(l, k))
        if (t.index == k) tr[l] = field_.add(tr[l], t.coef);
  return tr;
}

std::vector<std::array<std::size_t, 3>> MultTable::associativity_defects(std::size_t limit) const {
  std::vector<std::array<std::size_t, 3>> out;
  Vector lhs(dim_), rhs(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        std::fill(lhs.begin(), lhs.end(), Scalar(0));
        std::fill(rhs.begin(), rhs.end(), Scalar(0));
        for (const auto& t : product(i, j))
          for (const auto& s : product(t.index, k)) field_.add_mul(lhs[s.index], t.coef, s.coef);
        for (const auto& t : product(j, k))
          for (const auto& s : product(i, t.index)) field_.add_mul(rhs[s.index], t.coef, s.coef);
        if (lhs != rhs) {
          out.push_back({i, j, k});
          if (out.size() >= limit) return out;
        }
      }
  return out;
}

bool MultTable::is_unital() const {
  if (!unit_) return false;
  for (std::size_t j = 0; j < dim_; ++j) {
    Vector e(dim_);
    e[j] = 1;
    if (multiply(*unit_, e) != e || multiply(e, *unit_) != e) return false;
  }
  return true;
}

MultTable MultTable::opposite() const {
  MultTable op(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) op.prod_[j * dim_ + i] = product(i, j);
  op.unit_ = unit_;
  return op;
}

MultTable MultTable::quotient(const Subspace& ideal) const {
  if (ideal.ambient_dim() != dim_) throw DimensionMismatch("MultTable::quotient: ambient");
  const auto comp = ideal.complement_columns();
  const std::size_t q = comp.size();
  MultTable out(field_, q);
  Vector e_a(dim_), e_b(dim_);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      Vector prod(dim_);
      for (const auto& t : product(comp[a], comp[b])) prod[t.index] = t.coef;
      const Vector r = ideal.quotient_coordinates(prod);
      for (std::size_t c = 0; c < q; ++c)
        if (!Field::is_zero(r[c])) out.add(a, b, c, r[c]);
    }
  if (unit_) out.set_unit(ideal.quotient_coordinates(*unit_));
  return out;
}

bool MultTable::is_two_sided_ideal(const Subspace& s) const {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vector x = s.basis().row(r);
    for (std::size_t i = 0; i < dim_; ++i) {
      Vector e(dim_);
      e[i] = 1;
      if (!s.contains(multiply(e, x)) || !s.contains(multiply(x, e))) return false;
    }
  }
  return true;
}

std::optional<std::size_t> MultTable::nilpotency_index(const Subspace& ideal) const {
  if (ideal.is_zero()) return 1;
  Subspace power = ideal;
  for (std::size_t k = 2; k <= dim_ + 1; ++k) {
    std::vector<Vector> gens;
    for (std::size_t a = 0; a < power.dim(); ++a)
      for (std::size_t b = 0; b < ideal.dim(); ++b) gens.push_back(multiply(power.basis().row(a), ideal.basis().row(b)));
    Subspace next = gens.empty() ? Subspace(field_, dim_) : Subspace::span(field_, dim_, gens);
    if (next.is_zero()) return k;
    if (next == power) return std::nullopt;
    power = std::move(next);
  }
  return std::nullopt;
}

void require_radical_characteristic(const Field& field, std::size_t dim) {
  const auto p = field.characteristic();
  if (p != 0 && p <= dim)
    throw CharacteristicTooSmall("characteristic too small: trace-form radical needs p > " + std::to_string(dim) +
                                 " (got p = " + std::to_string(p) + ")");
}

Subspace trace_form_radical(const MultTable& table, bool verify) {
  require_radical_characteristic(table.field(), table.dim());
  if (!table.is_associative()) throw InvalidStructure("trace_form_radical: table is not associative");
  const Matrix gram = trace_gram(table);
  Subspace rad = kernel(gram);
  if (verify) {
    if (!table.is_two_sided_ideal(rad)) throw InvalidStructure("trace_form_radical: radical is not an ideal");
    if (!table.nilpotency_index(rad)) throw InvalidStructure("trace_form_radical: radical is not nilpotent");
    if (!rad.is_zero()) {
      const MultTable q = table.quotient(rad);
      if (!trace_form_radical(q, false).is_zero())
        throw InvalidStructure("trace_form_radical: quotient is not semisimple");
    }
  }
  return rad;
}

Subspace matrix_algebra_radical(const std::vector<Matrix>& basis) {
  if (basis.empty()) throw Error("matrix_algebra_radical: empty basis");
  require_radical_characteristic(basis.front().field(), basis.front().rows());
  return kernel(matrix_trace_gram(basis));
}

}  // namespace cofreyd
