#include "cofreyd/kernels.hpp"

#include <map>
#include <unordered_map>

namespace cofreyd {

namespace {

using Accum = std::map<std::uint64_t, Scalar>;

void accumulate(Accum& acc, std::uint64_t key, const Scalar& v, const Field& f) {
  auto [it, inserted] = acc.try_emplace(key, v);
  if (!inserted) it->second = f.add(it->second, v);
}

bool same_accum(const Accum& a, const Accum& b) {
  auto ia = a.begin(), ib = b.begin();
  while (true) {
    while (ia != a.end() && Field::is_zero(ia->second)) ++ia;
    while (ib != b.end() && Field::is_zero(ib->second)) ++ib;
    if (ia == a.end() || ib == b.end()) return ia == a.end() && ib == b.end();
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

std::uint8_t defects_at(const DeltaTable& delta, const Vector& eps, const Field& f, std::size_t k) {
  const std::uint64_t n = delta.size();
  std::uint8_t flags = 0;
  Accum lhs, rhs;
  for (const auto& t : delta[k]) {
    for (const auto& s : delta[t.i]) accumulate(lhs, (s.i * n + s.j) * n + t.j, f.mul(t.coef, s.coef), f);
    for (const auto& s : delta[t.j]) accumulate(rhs, (t.i * n + s.i) * n + s.j, f.mul(t.coef, s.coef), f);
  }
  if (!same_accum(lhs, rhs)) flags |= 1;

  Accum left, right, id;
  id.emplace(k, Scalar(1));
  for (const auto& t : delta[k]) {
    if (!Field::is_zero(eps[t.i])) accumulate(left, t.j, f.mul(eps[t.i], t.coef), f);
    if (!Field::is_zero(eps[t.j])) accumulate(right, t.i, f.mul(eps[t.j], t.coef), f);
  }
  if (!same_accum(left, id)) flags |= 2;
  if (!same_accum(right, id)) flags |= 4;
  return flags;
}

}  // namespace

std::vector<std::uint8_t> coalgebra_defect_flags(const DeltaTable& delta, const Vector& epsilon,
                                                 const Field& field, Exec exec) {
  const auto n = static_cast<std::int64_t>(delta.size());
  std::vector<std::uint8_t> flags(delta.size(), 0);
  if (exec == Exec::Serial) {
    for (std::int64_t k = 0; k < n; ++k) flags[k] = defects_at(delta, epsilon, field, k);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k < n; ++k) flags[k] = defects_at(delta, epsilon, field, k);
  }
  return flags;
}

namespace {

using PairIndex = std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint32_t, Scalar>>>;

/// (i, j) -> list of (l, c^{ij}_l).
PairIndex index_pairs(const DeltaTable& delta) {
  const std::uint64_t n = delta.size();
  PairIndex idx;
  for (std::uint32_t l = 0; l < delta.size(); ++l)
    for (const auto& t : delta[l]) idx[t.i * n + t.j].emplace_back(l, t.coef);
  return idx;
}

std::uint8_t comodule_defects_at(const ActionList& actions, std::size_t m, const PairIndex& pairs,
                                 std::size_t n, bool left_side, const Field& f, std::size_t j) {
  std::vector<Scalar> prod(m * m), expect(m * m);
  std::vector<std::vector<std::pair<std::uint32_t, const Scalar*>>> by_row_k(m);
  for (std::size_t k = 0; k < n; ++k) {
    for (auto& x : prod) x = 0;
    for (auto& x : expect) x = 0;
    // (A_j A_k)[r, c] = sum_t A_j[r, t] A_k[t, c]
    for (auto& row : by_row_k) row.clear();
    for (const auto& e : actions[k]) by_row_k[e.row].emplace_back(e.col, &e.value);
    for (const auto& a : actions[j])
      for (const auto& [c, v] : by_row_k[a.col]) f.add_mul(prod[a.row * m + c], a.value, *v);
    const std::uint64_t key = left_side ? k * n + j : j * n + k;
    if (auto it = pairs.find(key); it != pairs.end()) {
      for (const auto& [l, coef] : it->second)
        for (const auto& e : actions[l]) f.add_mul(expect[e.row * m + e.col], coef, e.value);
    }
    if (prod != expect) return 1;
  }
  return 0;
}

}  // namespace

std::vector<std::uint8_t> comodule_defect_flags(const ActionList& actions, std::size_t module_dim,
                                                const DeltaTable& delta, const Vector& epsilon,
                                                bool left_side, const Field& field, Exec exec) {
  const std::size_t n = delta.size();
  const std::size_t m = module_dim;
  std::vector<std::uint8_t> flags(n, 0);
  const PairIndex pairs = index_pairs(delta);
  if (exec == Exec::Serial) {
    for (std::size_t j = 0; j < n; ++j) flags[j] = comodule_defects_at(actions, m, pairs, n, left_side, field, j);
  } else {
#pragma omp parallel for schedule(dynamic, 2)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(n); ++j)
      flags[j] = comodule_defects_at(actions, m, pairs, n, left_side, field, static_cast<std::size_t>(j));
  }
  // Counit: sum_k eps(b_k) A_k = identity.
  std::vector<Scalar> unit(m * m);
  for (std::size_t k = 0; k < n; ++k) {
    if (Field::is_zero(epsilon[k])) continue;
    for (const auto& e : actions[k]) field.add_mul(unit[e.row * m + e.col], epsilon[k], e.value);
  }
  bool counit_ok = true;
  for (std::size_t r = 0; r < m && counit_ok; ++r)
    for (std::size_t c = 0; c < m; ++c)
      if (unit[r * m + c] != (r == c ? 1 : 0)) {
        counit_ok = false;
        break;
      }
  if (!counit_ok && n > 0) flags[0] |= 2;
  return flags;
}

Matrix trace_gram(const MultTable& table, Exec exec) {
  const Field& f = table.field();
  const std::size_t n = table.dim();
  const Vector traces = table.left_traces();
  Matrix gram(f, n, n);
  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc = 0;
      for (const auto& t : table.product(i, j)) f.add_mul(acc, t.coef, traces[t.index]);
      gram.mut(i, j) = acc;
    }
  };
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) fill_row(i);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) fill_row(static_cast<std::size_t>(i));
  }
  return gram;
}

Matrix matrix_trace_gram(const std::vector<Matrix>& family, Exec exec) {
  if (family.empty()) throw Error("matrix_trace_gram: empty family");
  const Field& f = family.front().field();
  const std::size_t k = family.size();
  const std::size_t m = family.front().rows();
  Matrix gram(f, k, k);
  auto fill_row = [&](std::size_t a) {
    for (std::size_t b = a; b < k; ++b) {
      Scalar acc = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const Scalar& x = family[a](i, j);
          if (Field::is_zero(x)) continue;
          const Scalar& y = family[b](j, i);
          if (!Field::is_zero(y)) f.add_mul(acc, x, y);
        }
      gram.mut(a, b) = acc;
    }
  };
  if (exec == Exec::Serial) {
    for (std::size_t a = 0; a < k; ++a) fill_row(a);
  } else {
#pragma omp parallel for schedule(dynamic, 2)
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(k); ++a) fill_row(static_cast<std::size_t>(a));
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < a; ++b) gram.mut(a, b) = gram(b, a);
  return gram;
}

}  // namespace cofreyd
