#include "cofreyd/coalgebra.hpp"

#include <algorithm>
#include <map>

namespace cofreyd {

Coalgebra::Coalgebra(Field field, std::vector<std::string> labels)
    : field_(std::move(field)), labels_(std::move(labels)), delta_(labels_.size()), epsilon_(labels_.size()) {
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (!index_.emplace(labels_[k], k).second) throw InvalidStructure("duplicate coalgebra label '" + labels_[k] + "'");
}

std::size_t Coalgebra::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error("unknown basis label '" + label + "'");
  return it->second;
}

void Coalgebra::add_delta(std::size_t k, std::size_t i, std::size_t j, const Scalar& c) {
  const std::size_t n = dim();
  if (k >= n || i >= n || j >= n) throw DimensionMismatch("add_delta: index out of range");
  const Scalar v = field_.reduce(c);
  if (Field::is_zero(v)) return;
  cache_ = std::make_shared<Cache>();
  auto& terms = delta_[k];
  const auto key = std::make_pair(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
  auto it = std::lower_bound(terms.begin(), terms.end(), key, [](const DeltaTerm& t, const auto& kk) {
    return std::make_pair(t.i, t.j) < kk;
  });
  if (it != terms.end() && it->i == key.first && it->j == key.second) {
    it->coef = field_.add(it->coef, v);
    if (Field::is_zero(it->coef)) terms.erase(it);
  } else {
    terms.insert(it, DeltaTerm{key.first, key.second, v});
  }
}

void Coalgebra::set_epsilon(std::size_t k, const Scalar& v) {
  cache_ = std::make_shared<Cache>();
  epsilon_.at(k) = field_.reduce(v);
}

const Subspace& Coalgebra::cached_coradical() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->coradical) cache_->coradical = coradical(*this);
  return *cache_->coradical;
}

ValidationReport validate_coalgebra(const Coalgebra& c, Exec exec) {
  ValidationReport r;
  const auto flags = coalgebra_defect_flags(c.delta(), c.epsilon(), c.field(), exec);
  for (std::size_t k = 0; k < flags.size(); ++k) {
    if (!flags[k]) continue;
    r.ok = false;
    r.defect_locations.push_back(k);
    std::string what;
    if (flags[k] & 1) what += " coassociativity";
    if (flags[k] & 2) what += " left-counit";
    if (flags[k] & 4) what += " right-counit";
    r.messages.push_back("defect at " + c.label(k) + ":" + what);
  }
  return r;
}

// --- posets ----------------------------------------------------------------

Poset Poset::chain(std::size_t n) {
  Poset p;
  p.size = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    p.names.push_back(std::to_string(x));
    for (std::size_t y = x; y < n; ++y) p.leq[x][y] = true;
  }
  return p;
}

Poset Poset::antichain(std::size_t n) {
  Poset p;
  p.size = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    p.names.push_back(std::to_string(x));
    p.leq[x][x] = true;
  }
  return p;
}

std::vector<std::string> Poset::violations() const {
  std::vector<std::string> out;
  if (leq.size() != size) return {"relation table has wrong size"};
  for (const auto& row : leq)
    if (row.size() != size) return {"relation table has wrong size"};
  for (std::size_t x = 0; x < size; ++x) {
    if (!leq[x][x]) out.push_back("not reflexive at " + std::to_string(x));
    for (std::size_t y = 0; y < size; ++y) {
      if (x != y && leq[x][y] && leq[y][x])
        out.push_back("not antisymmetric at " + std::to_string(x) + "," + std::to_string(y));
      for (std::size_t z = 0; z < size; ++z)
        if (leq[x][y] && leq[y][z] && !leq[x][z])
          out.push_back("not transitive at " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
    }
  }
  return out;
}

// --- constructors ------------------------------------------------------------

Coalgebra incidence_coalgebra(const Poset& p, const Field& field) {
  if (auto v = p.violations(); !v.empty()) throw InvalidStructure("invalid poset: " + v.front());
  auto name = [&](std::size_t x) { return x < p.names.size() ? p.names[x] : std::to_string(x); };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < p.size; ++x)
    for (std::size_t y = 0; y < p.size; ++y)
      if (p.less_equal(x, y)) pairs.emplace_back(x, y);
  std::vector<std::string> labels;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    labels.push_back("(" + name(pairs[k].first) + "," + name(pairs[k].second) + ")");
    index[pairs[k]] = k;
  }
  Coalgebra c(field, labels);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [x, y] = pairs[k];
    for (std::size_t z = 0; z < p.size; ++z)
      if (p.less_equal(x, z) && p.less_equal(z, y)) c.add_delta(k, index.at({x, z}), index.at({z, y}), 1);
    if (x == y) c.set_epsilon(k, 1);
  }
  return c;
}

Coalgebra incidence_chain(std::size_t d, const Field& field) { return incidence_coalgebra(Poset::chain(d + 1), field); }

std::size_t incidence_index(std::size_t d, std::size_t x, std::size_t y) {
  if (x > y || y > d) throw Error("incidence_index: need x <= y <= d");
  // Rows 0..x-1 contribute (d+1) + d + ... + (d+2-x) pairs.
  return x * (d + 1) - x * (x - 1) / 2 + (y - x);
}

Coalgebra divided_power_truncated(std::size_t d, const Field& field) {
  std::vector<std::string> labels;
  for (std::size_t n = 0; n <= d; ++n) labels.push_back("c_" + std::to_string(n));
  Coalgebra c(field, labels);
  for (std::size_t n = 0; n <= d; ++n)
    for (std::size_t i = 0; i <= n; ++i) c.add_delta(n, i, n - i, 1);
  c.set_epsilon(0, 1);
  return c;
}

Coalgebra grouplike_coalgebra(const Field& field, const std::string& label) {
  Coalgebra c(field, {label});
  c.add_delta(0, 0, 0, 1);
  c.set_epsilon(0, 1);
  return c;
}

namespace {

/// Action matrices of the left (use_left) or right regular coaction: A_k[t, s] is the
/// coefficient of b_k (x) b_t (left) or b_t (x) b_k (right) in Delta(b_s).
std::vector<Matrix> regular_actions(const Coalgebra& c, bool use_left) {
  const std::size_t n = c.dim();
  std::vector<Matrix> a(n, Matrix(c.field(), n, n));
  for (std::size_t s = 0; s < n; ++s)
    for (const auto& t : c.delta()[s]) {
      if (use_left)
        a[t.i].mut(t.j, s) = t.coef;
      else
        a[t.j].mut(t.i, s) = t.coef;
    }
  return a;
}

bool right_comodule_ok(const std::vector<Matrix>& a, const Coalgebra& c, bool left_side) {
  const std::size_t n = c.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix expect(c.field(), a[0].rows(), a[0].cols());
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& t : c.delta()[l]) {
          const bool hit = left_side ? (t.i == k && t.j == j) : (t.i == j && t.j == k);
          if (hit) expect = expect + a[l].scaled(t.coef);
        }
      if (a[j] * a[k] != expect) return false;
    }
  Matrix unit(c.field(), a[0].rows(), a[0].cols());
  for (std::size_t k = 0; k < n; ++k)
    if (!Field::is_zero(c.epsilon()[k])) unit = unit + a[k].scaled(c.epsilon()[k]);
  return unit.is_identity();
}

}  // namespace

std::vector<std::string> bicomodule_violations(const Bicomodule& m) {
  std::vector<std::string> out;
  if (!m.left_parent || !m.right_parent) return {"missing parent coalgebra"};
  if (m.left.size() != m.left_parent->dim() || m.right.size() != m.right_parent->dim())
    return {"action count does not match coalgebra dimension"};
  for (const auto& a : m.left)
    if (a.rows() != m.dim || a.cols() != m.dim) return {"left action matrix has wrong size"};
  for (const auto& a : m.right)
    if (a.rows() != m.dim || a.cols() != m.dim) return {"right action matrix has wrong size"};
  if (m.dim == 0) return out;
  if (!right_comodule_ok(m.left, *m.left_parent, true)) out.push_back("left coaction is not a comodule structure");
  if (!right_comodule_ok(m.right, *m.right_parent, false)) out.push_back("right coaction is not a comodule structure");
  for (std::size_t k = 0; k < m.left.size(); ++k)
    for (std::size_t l = 0; l < m.right.size(); ++l)
      if (m.left[k] * m.right[l] != m.right[l] * m.left[k]) {
        out.push_back("coactions do not commute at (" + m.left_parent->label(k) + "," + m.right_parent->label(l) + ")");
        return out;
      }
  return out;
}

Bicomodule epsilon_bicomodule(const CoalgebraPtr& c, const std::string& prefix) {
  Bicomodule m;
  m.left_parent = c;
  m.right_parent = std::make_shared<const Coalgebra>(grouplike_coalgebra(c->field(), "t"));
  m.dim = c->dim();
  for (const auto& l : c->labels()) {
    const auto us = l.find('_');
    m.labels.push_back(us == std::string::npos ? prefix + "[" + l + "]" : prefix + l.substr(us));
  }
  m.left = regular_actions(*c, true);
  // m -> sum eps(m_2) m_1 (x) 1 = m (x) 1: the right coaction through epsilon.
  m.right = {Matrix::identity(c->field(), c->dim())};
  return m;
}

Coalgebra triangular_coalgebra(const Bicomodule& m) {
  if (auto v = bicomodule_violations(m); !v.empty()) throw InvalidStructure("invalid bicomodule: " + v.front());
  const Coalgebra& c = *m.left_parent;
  const Coalgebra& d = *m.right_parent;
  require_same_field(c.field(), d.field(), "triangular_coalgebra");
  const std::size_t nc = c.dim(), nm = m.dim, nd = d.dim();
  std::vector<std::string> labels = c.labels();
  for (std::size_t s = 0; s < nm; ++s) labels.push_back(s < m.labels.size() ? m.labels[s] : "m_" + std::to_string(s));
  for (const auto& l : d.labels()) labels.push_back(l);
  Coalgebra h(c.field(), labels);
  const std::size_t om = nc, od = nc + nm;
  for (std::size_t k = 0; k < nc; ++k) {
    for (const auto& t : c.delta()[k]) h.add_delta(k, t.i, t.j, t.coef);
    h.set_epsilon(k, c.epsilon()[k]);
  }
  for (std::size_t s = 0; s < nm; ++s) {
    for (std::size_t k = 0; k < nc; ++k)
      for (std::size_t t = 0; t < nm; ++t)
        if (!Field::is_zero(m.left[k](t, s))) h.add_delta(om + s, k, om + t, m.left[k](t, s));
    for (std::size_t l = 0; l < nd; ++l)
      for (std::size_t t = 0; t < nm; ++t)
        if (!Field::is_zero(m.right[l](t, s))) h.add_delta(om + s, om + t, od + l, m.right[l](t, s));
  }
  for (std::size_t k = 0; k < nd; ++k) {
    for (const auto& t : d.delta()[k]) h.add_delta(od + k, od + t.i, od + t.j, t.coef);
    h.set_epsilon(od + k, d.epsilon()[k]);
  }
  auto coord = [&](std::size_t from, std::size_t count) {
    std::vector<Vector> gens;
    for (std::size_t i = from; i < from + count; ++i) {
      Vector v(h.dim());
      v[i] = 1;
      gens.push_back(std::move(v));
    }
    return Subspace::span(h.field(), h.dim(), gens);
  };
  h.add_decomposition({"left", {"C", "M+D"}, {coord(0, nc), coord(om, nm + nd)}});
  h.add_decomposition({"right", {"C+M", "D"}, {coord(0, nc + nm), coord(od, nd)}});
  return h;
}

Coalgebra h_coalgebra(std::size_t d, const Field& field) {
  auto c = std::make_shared<const Coalgebra>(divided_power_truncated(d, field));
  return triangular_coalgebra(epsilon_bicomodule(c, "x"));
}

Coalgebra matrix2_coalgebra(const Coalgebra& c) {
  const std::size_t n = c.dim();
  std::vector<std::string> labels;
  for (const char* block : {"x", "y", "z"})
    for (const auto& l : c.labels()) labels.push_back(std::string(block) + "[" + l + "]");
  Coalgebra m(c.field(), labels);
  const std::size_t ox = 0, oy = n, oz = 2 * n;
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& t : c.delta()[k]) {
      m.add_delta(ox + k, ox + t.i, ox + t.j, t.coef);
      m.add_delta(oy + k, ox + t.i, oy + t.j, t.coef);
      m.add_delta(oy + k, oy + t.i, oz + t.j, t.coef);
      m.add_delta(oz + k, oz + t.i, oz + t.j, t.coef);
    }
    m.set_epsilon(ox + k, c.epsilon()[k]);
    m.set_epsilon(oz + k, c.epsilon()[k]);
  }
  return m;
}

// --- dual algebra ------------------------------------------------------------

MultTable dual_algebra(const Coalgebra& c) {
  MultTable t(c.field(), c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k)
    for (const auto& d : c.delta()[k]) t.add(d.i, d.j, k, d.coef);
  t.set_unit(c.epsilon());
  // Associativity of the convolution product is coassociativity of Delta, and the
  // unit law is the counit law, so the defect kernel checks both in one pass.
  if (!validate_coalgebra(c).ok) throw InvalidStructure("dual_algebra: coalgebra axioms fail");
  return t;
}

MultTable triangular_matrix_algebra(const MultTable& a) {
  const std::size_t n = a.dim();
  MultTable t(a.field(), 3 * n);
  const std::size_t ox = 0, oy = n, oz = 2 * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& term : a.product(i, j)) {
        t.add(ox + i, ox + j, ox + term.index, term.coef);
        t.add(ox + i, oy + j, oy + term.index, term.coef);
        t.add(oy + i, oz + j, oy + term.index, term.coef);
        t.add(oz + i, oz + j, oz + term.index, term.coef);
      }
  if (a.unit()) {
    Vector u(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      u[ox + i] = (*a.unit())[i];
      u[oz + i] = (*a.unit())[i];
    }
    t.set_unit(u);
  }
  return t;
}

bool has_triangular_shape(const MultTable& t, std::size_t p, std::size_t q, std::size_t r) {
  if (p + q + r != t.dim()) return false;
  auto block = [&](std::size_t i) { return i < p ? 0 : (i < p + q ? 1 : 2); };
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const int bi = block(i), bj = block(j);
      int allowed = -1;
      if (bi == 0 && bj == 0) allowed = 0;
      if (bi == 0 && bj == 1) allowed = 1;
      if (bi == 1 && bj == 2) allowed = 1;
      if (bi == 2 && bj == 2) allowed = 2;
      for (const auto& term : t.product(i, j))
        if (block(term.index) != allowed) return false;
    }
  return true;
}

// --- coradical -------------------------------------------------------------------

Subspace coradical(const Coalgebra& c) {
  require_radical_characteristic(c.field(), c.dim());
  const MultTable dual = dual_algebra(c);
  const Subspace j = trace_form_radical(dual);
  Subspace c0 = annihilator(j);
  if (!is_subcoalgebra(c, c0)) throw InvalidStructure("coradical: annihilator of the radical is not a subcoalgebra");
  return c0;
}

namespace {

/// Sparse columns of the quotient projection C -> C/V.
std::vector<std::vector<std::pair<std::size_t, Scalar>>> quotient_columns(const Subspace& v) {
  const Matrix q = v.quotient_map();
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(q.cols());
  for (std::size_t r = 0; r < q.rows(); ++r)
    for (std::size_t c = 0; c < q.cols(); ++c)
      if (!Field::is_zero(q(r, c))) cols[c].emplace_back(r, q(r, c));
  return cols;
}

/// Kernel of b_k -> sum c^{ij}_k P(b_i) (x) Q(b_j) for projections P, Q given by columns.
Subspace delta_kernel(const Coalgebra& c, const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& p,
                      std::size_t p_dim,
                      const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& q) {
  const Field& f = c.field();
  std::map<std::uint64_t, std::map<std::uint32_t, Scalar>> rows;
  for (std::size_t k = 0; k < c.dim(); ++k)
    for (const auto& t : c.delta()[k])
      for (const auto& [a, pa] : p[t.i])
        for (const auto& [b, qb] : q[t.j]) {
          auto& cell = rows[static_cast<std::uint64_t>(b) * p_dim + a][static_cast<std::uint32_t>(k)];
          f.add_mul(cell, t.coef, f.mul(pa, qb));
        }
  Eliminator elim(f, c.dim());
  for (auto& [key, entries] : rows) {
    SparseRow row;
    for (auto& [col, v] : entries)
      if (!Field::is_zero(v)) row.emplace_back(col, v);
    if (!row.empty()) elim.add_row(std::move(row));
  }
  return Subspace::span(elim.kernel_basis());
}

}  // namespace

bool is_subcoalgebra(const Coalgebra& c, const Subspace& v) {
  if (v.is_full()) return true;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> id(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) id[i].emplace_back(i, Scalar(1));
  const auto q = quotient_columns(v);
  const std::size_t qd = c.dim() - v.dim();
  // Delta(V) in V (x) V iff V lies in ker (pi (x) id) Delta and in ker (id (x) pi) Delta.
  return delta_kernel(c, q, qd, id).contains(v) && delta_kernel(c, id, c.dim(), q).contains(v);
}

std::vector<Subspace> coradical_filtration(const Coalgebra& c) {
  std::vector<Subspace> terms{c.cached_coradical()};
  const auto p0 = quotient_columns(terms[0]);
  const std::size_t q0 = c.dim() - terms[0].dim();
  while (!terms.back().is_full()) {
    Subspace next = delta_kernel(c, p0, q0, quotient_columns(terms.back()));
    if (!next.contains(terms.back()) || next == terms.back())
      throw InvalidStructure("coradical_filtration: chain does not ascend");
    if (!is_subcoalgebra(c, next)) throw InvalidStructure("coradical_filtration: term is not a subcoalgebra");
    terms.push_back(std::move(next));
  }
  return terms;
}

std::vector<std::string> coordinate_labels(const Coalgebra& c, const Subspace& v) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < v.dim(); ++r) {
    if (v.basis().nonzeros() != v.dim()) return {};
    out.push_back(c.label(v.pivots()[r]));
  }
  return out;
}

}  // namespace cofreyd
