#include "cofreyd/comodule.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cofreyd/spectral.hpp"

namespace cofreyd {

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

Side side_from_name(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw ParseError("side must be 'left' or 'right', got '" + s + "'");
}

const char* tristate_name(Tristate t) {
  switch (t) {
    case Tristate::Yes:
      return "yes";
    case Tristate::No:
      return "no";
    default:
      return "unknown";
  }
}

// --- Comodule ---------------------------------------------------------------

Comodule::Comodule(CoalgebraPtr parent, Side side, std::vector<Matrix> actions, std::string name)
    : parent_(std::move(parent)), side_(side), dim_(0), actions_(std::move(actions)), name_(std::move(name)) {
  if (!parent_) throw Error("Comodule: missing parent coalgebra");
  if (actions_.size() != parent_->dim()) throw DimensionMismatch("Comodule: one action matrix per coalgebra basis element");
  if (!actions_.empty()) dim_ = actions_.front().rows();
  for (const auto& a : actions_) {
    if (a.rows() != dim_ || a.cols() != dim_) throw DimensionMismatch("Comodule: action matrices must be square");
    require_same_field(a.field(), parent_->field(), "Comodule");
  }
}

Comodule Comodule::from_entries(CoalgebraPtr parent, Side side, std::size_t dim, const std::vector<Entry>& entries,
                                std::string name) {
  const Field f = parent->field();
  std::vector<Matrix> a(parent->dim(), Matrix(f, dim, dim));
  for (const auto& e : entries) {
    if (e.s >= dim || e.t >= dim || e.k >= parent->dim()) throw DimensionMismatch("coaction entry out of range");
    a[e.k].set(e.t, e.s, f.add(a[e.k](e.t, e.s), f.reduce(e.value)));
  }
  return Comodule(std::move(parent), side, std::move(a), std::move(name));
}

Comodule Comodule::zero(CoalgebraPtr parent, Side side, std::string name) {
  const Field f = parent->field();
  std::vector<Matrix> a(parent->dim(), Matrix(f, 0, 0));
  return Comodule(std::move(parent), side, std::move(a), std::move(name));
}

std::vector<Comodule::Entry> Comodule::entries() const {
  std::vector<Entry> out;
  for (std::size_t k = 0; k < actions_.size(); ++k)
    for (std::size_t t = 0; t < dim_; ++t)
      for (std::size_t s = 0; s < dim_; ++s)
        if (!Field::is_zero(actions_[k](t, s)))
          out.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(k),
                         actions_[k](t, s)});
  std::sort(out.begin(), out.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.s, a.t, a.k) < std::tie(b.s, b.t, b.k); });
  return out;
}

ActionList Comodule::sparse_actions() const {
  ActionList out(actions_.size());
  for (std::size_t k = 0; k < actions_.size(); ++k)
    for (std::size_t t = 0; t < dim_; ++t)
      for (std::size_t s = 0; s < dim_; ++s)
        if (!Field::is_zero(actions_[k](t, s)))
          out[k].push_back({static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(s), actions_[k](t, s)});
  return out;
}

Matrix Comodule::act(const Vector& functional) const {
  if (functional.size() != actions_.size()) throw DimensionMismatch("Comodule::act: functional length");
  Matrix out(field(), dim_, dim_);
  for (std::size_t k = 0; k < actions_.size(); ++k)
    if (!Field::is_zero(functional[k])) out = out + actions_[k].scaled(functional[k]);
  return out;
}

ComodulePtr make_comodule(Comodule m) { return std::make_shared<const Comodule>(std::move(m)); }

ValidationReport validate_comodule(const Comodule& m, Exec exec) {
  ValidationReport r;
  if (m.dim() == 0) return r;
  const auto flags = comodule_defect_flags(m.sparse_actions(), m.dim(), m.coalgebra().delta(), m.coalgebra().epsilon(),
                                           m.side() == Side::Left, m.field(), exec);
  for (std::size_t k = 0; k < flags.size(); ++k) {
    if (!flags[k]) continue;
    r.ok = false;
    r.defect_locations.push_back(k);
    if (flags[k] & 1) r.messages.push_back("coassociativity fails at " + m.coalgebra().label(k));
    if (flags[k] & 2) r.messages.push_back("counit fails");
  }
  return r;
}

// --- maps -------------------------------------------------------------------

bool intertwines(const Matrix& f, const Comodule& source, const Comodule& target) {
  if (source.parent() != target.parent() && !(*source.parent() == *target.parent())) return false;
  if (source.side() != target.side()) return false;
  if (f.rows() != target.dim() || f.cols() != source.dim()) return false;
  for (std::size_t k = 0; k < source.actions().size(); ++k)
    if (f * source.action(k) != target.action(k) * f) return false;
  return true;
}

ComoduleMap make_map(ComodulePtr source, ComodulePtr target, Matrix f) {
  if (!intertwines(f, *source, *target)) throw InvalidStructure("matrix is not a comodule map");
  return {std::move(source), std::move(target), std::move(f)};
}

ComoduleMap identity_map(const ComodulePtr& m) { return {m, m, Matrix::identity(m->field(), m->dim())}; }

ComoduleMap compose(const ComoduleMap& g, const ComoduleMap& f) {
  if (f.target->dim() != g.source->dim()) throw DimensionMismatch("compose: incompatible maps");
  return {f.source, g.target, g.matrix * f.matrix};
}

ComodulePtr regular_comodule(const CoalgebraPtr& c, Side side) {
  const std::size_t n = c->dim();
  std::vector<Matrix> a(n, Matrix(c->field(), n, n));
  // Right: rho(b_s) = sum c^{tk}_s b_t (x) b_k. Left: lambda(b_s) = sum c^{kt}_s b_k (x) b_t.
  for (std::size_t s = 0; s < n; ++s)
    for (const auto& term : c->delta()[s]) {
      if (side == Side::Right)
        a[term.j].mut(term.i, s) = term.coef;
      else
        a[term.i].mut(term.j, s) = term.coef;
    }
  return make_comodule(Comodule(c, side, std::move(a), side == Side::Right ? "C_C" : "_CC"));
}

// --- hom spaces -----------------------------------------------------------------

Vector HomSpace::coordinates(const Matrix& f) const {
  Vector out(free_entries.size());
  for (std::size_t a = 0; a < free_entries.size(); ++a) out[a] = f(free_entries[a] / f.cols(), free_entries[a] % f.cols());
  return out;
}

Matrix HomSpace::combination(const Vector& coords) const {
  Matrix out(source->field(), target->dim(), source->dim());
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (!Field::is_zero(coords[a])) out = out + basis[a].scaled(coords[a]);
  return out;
}

HomSpace hom_space(const ComodulePtr& m, const ComodulePtr& n) {
  if (m->side() != n->side()) throw Error("hom_space: comodules on different sides");
  if (m->parent() != n->parent() && !(*m->parent() == *n->parent()))
    throw Error("hom_space: comodules over different coalgebras");
  const Field& f = m->field();
  const std::size_t sm = m->dim(), tn = n->dim();
  HomSpace h{m, n, {}, {}};
  const std::size_t unknowns = sm * tn;
  if (unknowns == 0) return h;
  Eliminator elim(f, unknowns);
  // (F A_k - A'_k F)[a, s] = 0, with F[a, b] at unknown a * sm + b.
  std::map<std::uint32_t, Scalar> acc;
  for (std::size_t k = 0; k < m->actions().size() && elim.rank() < unknowns; ++k) {
    const Matrix& a = m->action(k);
    const Matrix& b = n->action(k);
    if (a.is_zero() && b.is_zero()) continue;
    for (std::size_t row = 0; row < tn; ++row)
      for (std::size_t s = 0; s < sm; ++s) {
        acc.clear();
        for (std::size_t t = 0; t < sm; ++t)
          if (!Field::is_zero(a(t, s))) {
            auto& cell = acc[static_cast<std::uint32_t>(row * sm + t)];
            cell = f.add(cell, a(t, s));
          }
        for (std::size_t u = 0; u < tn; ++u)
          if (!Field::is_zero(b(row, u))) {
            auto& cell = acc[static_cast<std::uint32_t>(u * sm + s)];
            cell = f.sub(cell, b(row, u));
          }
        SparseRow r;
        for (auto& [c, v] : acc)
          if (!Field::is_zero(v)) r.emplace_back(c, v);
        if (!r.empty()) elim.add_row(std::move(r));
      }
  }
  const Matrix kb = elim.kernel_basis();
  h.free_entries = elim.free_columns();
  for (std::size_t a = 0; a < kb.rows(); ++a) {
    Matrix fm(f, tn, sm);
    for (std::size_t e = 0; e < unknowns; ++e) fm.mut(e / sm, e % sm) = kb(a, e);
    h.basis.push_back(std::move(fm));
  }
  return h;
}

// --- subcomodules --------------------------------------------------------------

bool is_subcomodule(const Comodule& m, const Subspace& v) {
  for (std::size_t r = 0; r < v.dim(); ++r) {
    const Vector x = v.basis().row(r);
    for (const auto& a : m.actions())
      if (!v.contains(a.apply(x))) return false;
  }
  return true;
}

Subspace subcomodule_generated(const Comodule& m, const Vector& v) {
  if (v.size() != m.dim()) throw DimensionMismatch("subcomodule_generated: vector length");
  Eliminator elim(m.field(), m.dim());
  std::vector<Vector> frontier;
  if (elim.add_row(v)) frontier.push_back(v);
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& x : frontier)
      for (const auto& a : m.actions()) {
        Vector y = a.apply(x);
        if (elim.add_row(y)) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  Subspace out = Subspace::span(elim.rref());
  if (!is_subcomodule(m, out)) throw InvalidStructure("subcomodule_generated: closure is not stable");
  return out;
}

SubcomoduleResult subcomodule(const ComodulePtr& m, const Subspace& v, std::string name) {
  if (!is_subcomodule(*m, v)) throw InvalidStructure("subcomodule: subspace is not stable");
  std::vector<Matrix> a;
  a.reserve(m->actions().size());
  for (const auto& x : m->actions()) a.push_back(restrict_to(x, v));
  auto sub = make_comodule(Comodule(m->parent(), m->side(), std::move(a), std::move(name)));
  return {sub, ComoduleMap{sub, m, v.inclusion()}};
}

SubcomoduleResult quotient_comodule(const ComodulePtr& m, const Subspace& v, std::string name) {
  if (!is_subcomodule(*m, v)) throw InvalidStructure("quotient_comodule: subspace is not stable");
  const Matrix q = v.quotient_map();
  const Matrix s = v.quotient_section();
  std::vector<Matrix> a;
  a.reserve(m->actions().size());
  for (const auto& x : m->actions()) a.push_back(q * x * s);
  auto quo = make_comodule(Comodule(m->parent(), m->side(), std::move(a), std::move(name)));
  return {quo, ComoduleMap{m, quo, q}};
}

ComodulePtr direct_sum(const ComodulePtr& a, const ComodulePtr& b, std::string name) {
  if (a->side() != b->side()) throw Error("direct_sum: different sides");
  std::vector<Matrix> acts;
  for (std::size_t k = 0; k < a->actions().size(); ++k) acts.push_back(cofreyd::direct_sum(a->action(k), b->action(k)));
  if (name.empty()) name = a->name() + "+" + b->name();
  return make_comodule(Comodule(a->parent(), a->side(), std::move(acts), std::move(name)));
}

// --- socle and Loewy series --------------------------------------------------------

Subspace socle(const Comodule& m) {
  const Field& f = m.field();
  if (m.dim() == 0) return Subspace(f, 0);
  const Subspace& c0 = m.coalgebra().cached_coradical();
  const Matrix q = c0.quotient_map();
  // v in soc M iff every component of rho(v) in M (x) C/C_0 vanishes.
  Eliminator elim(f, m.dim());
  for (std::size_t c = 0; c < q.rows(); ++c) {
    Matrix b(f, m.dim(), m.dim());
    bool any = false;
    for (std::size_t k = 0; k < q.cols(); ++k)
      if (!Field::is_zero(q(c, k)) && !m.action(k).is_zero()) {
        b = b + m.action(k).scaled(q(c, k));
        any = true;
      }
    if (!any) continue;
    for (std::size_t r = 0; r < b.rows(); ++r) elim.add_row(b.row(r));
  }
  return Subspace::span(elim.kernel_basis());
}

std::vector<Subspace> loewy_series(const Comodule& m) {
  std::vector<Subspace> out;
  if (m.dim() == 0) return out;
  auto self = std::make_shared<const Comodule>(m);
  Subspace cur = socle(m);
  if (cur.is_zero()) throw InvalidStructure("loewy_series: socle of a nonzero comodule is zero");
  out.push_back(cur);
  while (!cur.is_full()) {
    auto quo = quotient_comodule(self, cur);
    const Subspace s = socle(*quo.comodule);
    Subspace next = preimage(quo.map.matrix, s);
    if (next == cur) throw InvalidStructure("loewy_series: chain does not ascend");
    cur = std::move(next);
    out.push_back(cur);
  }
  return out;
}

// --- injectivity --------------------------------------------------------------------

InjectiveResult is_injective(const ComodulePtr& m) {
  InjectiveResult res;
  const std::size_t md = m->dim();
  if (md == 0) {
    res.injective = true;
    res.retraction = std::vector<Matrix>{};
    return res;
  }
  const Field& f = m->field();
  const std::size_t n = m->coalgebra().dim();
  const HomSpace h = hom_space(regular_comodule(m->parent(), m->side()), m);
  const std::size_t hd = h.dim();
  // Unknown y_{t,h} at t * hd + h; sigma_t = sum_h y_{t,h} H_h.
  std::vector<SparseEquation> eqs;
  for (std::size_t s = 0; s < md; ++s)
    for (std::size_t r = 0; r < md; ++r) {
      std::map<std::uint32_t, Scalar> acc;
      for (std::size_t k = 0; k < n; ++k) {
        const Matrix& a = m->action(k);
        for (std::size_t t = 0; t < md; ++t) {
          if (Field::is_zero(a(t, s))) continue;
          for (std::size_t hh = 0; hh < hd; ++hh) {
            const Scalar& v = h.basis[hh](r, k);
            if (Field::is_zero(v)) continue;
            f.add_mul(acc[static_cast<std::uint32_t>(t * hd + hh)], a(t, s), v);
          }
        }
      }
      SparseEquation e{{}, Scalar(r == s ? 1 : 0)};
      for (auto& [c, v] : acc)
        if (!Field::is_zero(v)) e.row.emplace_back(c, v);
      eqs.push_back(std::move(e));
    }
  const auto y = sparse_solve(f, md * hd, eqs);
  if (!y) return res;
  res.injective = true;
  std::vector<Matrix> sigma;
  for (std::size_t t = 0; t < md; ++t) {
    Vector coords(y->begin() + static_cast<std::ptrdiff_t>(t * hd),
                  y->begin() + static_cast<std::ptrdiff_t>((t + 1) * hd));
    sigma.push_back(h.combination(coords));
  }
  res.retraction = std::move(sigma);
  return res;
}

// --- indecomposability ------------------------------------------------------------

namespace {

bool nontrivial_idempotent(const Matrix& e) { return !e.is_zero() && !e.is_identity() && is_idempotent(e); }

}  // namespace

IndecomposableResult is_indecomposable(const ComodulePtr& m) {
  IndecomposableResult res;
  if (m->dim() == 0) {
    res.status = Tristate::No;
    return res;
  }
  const HomSpace end = hom_space(m, m);
  res.end_dim = end.dim();
  if (end.dim() == 1) {
    res.status = Tristate::Yes;
    return res;
  }
  const Subspace rad = matrix_algebra_radical(end.basis);
  res.radical_dim = rad.dim();
  if (end.dim() - rad.dim() == 1) {
    res.status = Tristate::Yes;
    return res;
  }
  // Fitting decompositions of basis elements outside the radical, then of all basis elements.
  std::vector<std::size_t> order = rad.complement_columns();
  for (std::size_t i = 0; i < end.dim(); ++i)
    if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
  for (std::size_t i : order) {
    if (auto e = split_by_eigenvalues(end.basis[i]); e && nontrivial_idempotent(*e)) {
      res.status = Tristate::No;
      res.idempotent = std::move(e);
      return res;
    }
  }
  const Field& f = m->field();
  std::mt19937_64 rng(0x5eed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vector c(end.dim());
    for (auto& x : c) x = f.is_prime_field() ? f.reduce(Scalar(static_cast<unsigned long>(rng() % f.characteristic())))
                                              : Scalar(static_cast<long>(rng() % 11) - 5);
    if (auto e = split_by_eigenvalues(end.combination(c)); e && nontrivial_idempotent(*e)) {
      res.status = Tristate::No;
      res.idempotent = std::move(e);
      return res;
    }
  }
  if (f.is_prime_field()) {
    const std::uint64_t p = f.characteristic();
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < end.dim() && small; ++i) {
      total *= p;
      if (total > (1u << 20)) small = false;
    }
    if (small) {
      Vector c(end.dim());
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t x = code;
        for (auto& ci : c) {
          ci = Scalar(static_cast<unsigned long>(x % p));
          x /= p;
        }
        const Matrix e = end.combination(c);
        if (nontrivial_idempotent(e)) {
          res.status = Tristate::No;
          res.idempotent = e;
          return res;
        }
      }
      res.status = Tristate::Yes;
      return res;
    }
  }
  res.status = Tristate::Unknown;
  return res;
}

bool is_simple(const ComodulePtr& m) {
  if (m->dim() == 0) return false;
  if (!socle(*m).is_full()) return false;
  return is_indecomposable(m).status == Tristate::Yes;
}

bool is_uniserial(const ComodulePtr& m) {
  if (m->dim() == 0) return true;
  const auto series = loewy_series(*m);
  auto self = m;
  Subspace prev(m->field(), m->dim());
  for (const auto& term : series) {
    // Layer term / prev as a comodule.
    auto sub = subcomodule(self, term);
    Subspace prev_in_term(m->field(), term.dim());
    {
      std::vector<Vector> gens;
      for (std::size_t r = 0; r < prev.dim(); ++r) gens.push_back(term.coordinates(prev.basis().row(r)));
      prev_in_term = Subspace::span(m->field(), term.dim(), gens);
    }
    auto layer = quotient_comodule(sub.comodule, prev_in_term);
    if (!is_simple(layer.comodule)) return false;
    prev = term;
  }
  return true;
}

StructureReport structure_report(const ComodulePtr& m) {
  StructureReport r{socle(*m), loewy_series(*m)};
  r.injective = is_injective(m).injective;
  r.indecomposable = is_indecomposable(m).status;
  r.simple = m->dim() > 0 && r.socle.is_full() && r.indecomposable == Tristate::Yes;
  r.uniserial = is_uniserial(m);
  return r;
}

bool subcomodule_lattice_is_chain(const Comodule& m) {
  const Field& f = m.field();
  if (!f.is_prime_field()) throw Error("subcomodule_lattice_is_chain: needs a prime field");
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    total *= p;
    if (total > (1u << 16)) throw Error("subcomodule_lattice_is_chain: space too large to enumerate");
  }
  // Every subcomodule is a sum of cyclic ones, so the lattice is a chain iff the cyclic
  // subcomodules are totally ordered by inclusion.
  std::vector<Subspace> cyclic;
  Vector v(m.dim());
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t x = code;
    for (auto& vi : v) {
      vi = Scalar(static_cast<unsigned long>(x % p));
      x /= p;
    }
    Subspace s = subcomodule_generated(m, v);
    if (std::find(cyclic.begin(), cyclic.end(), s) == cyclic.end()) cyclic.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < cyclic.size(); ++a)
    for (std::size_t b = a + 1; b < cyclic.size(); ++b)
      if (!cyclic[a].contains(cyclic[b]) && !cyclic[b].contains(cyclic[a])) return false;
  return true;
}

// --- decomposition of C -------------------------------------------------------------

namespace {

/// Matrices of phi_k = phi_{b_k*} in End(C) for the given side.
std::vector<Matrix> end_spanning_set(const Coalgebra& c, Side side) {
  const std::size_t n = c.dim();
  std::vector<Matrix> phi(n, Matrix(c.field(), n, n));
  for (std::size_t s = 0; s < n; ++s)
    for (const auto& t : c.delta()[s]) {
      if (side == Side::Right)
        phi[t.i].mut(t.j, s) = t.coef;  // c -> f(c_1) c_2
      else
        phi[t.j].mut(t.i, s) = t.coef;  // c -> c_1 f(c_2)
    }
  return phi;
}

/// Selection matrix reading echelon coordinates (pivot entries) of vectors in V.
Matrix pivot_selection(const Subspace& v) {
  Matrix sel(v.field(), v.dim(), v.ambient_dim());
  for (std::size_t r = 0; r < v.dim(); ++r) sel.mut(r, v.pivots()[r]) = 1;
  return sel;
}

std::optional<std::pair<Matrix, Matrix>> try_split(const Matrix& e, const Matrix& x) {
  const Subspace v = image(e);
  const Matrix ex = e * x * e;
  const auto local = split_by_eigenvalues(restrict_to(ex, v));
  if (!local) return std::nullopt;
  Matrix e1 = v.inclusion() * *local * pivot_selection(v) * e;
  Matrix e2 = e - e1;
  if (!is_idempotent(e1) || !is_idempotent(e2) || e1.is_zero() || e2.is_zero()) return std::nullopt;
  return std::make_pair(std::move(e1), std::move(e2));
}

}  // namespace

InjectiveDecomposition decompose_injectives(const CoalgebraPtr& c, Side side) {
  const Field& f = c->field();
  const std::size_t n = c->dim();
  InjectiveDecomposition out;
  if (n == 0) return out;
  auto reg = regular_comodule(c, side);
  const auto phi = end_spanning_set(*c, side);
  for (const auto& p : phi)
    if (!intertwines(p, *reg, *reg)) throw InvalidStructure("decompose_injectives: spanning set is not in End(C)");
  const Subspace rad = trace_form_radical(dual_algebra(*c));
  std::vector<std::size_t> candidates = rad.complement_columns();
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < n; ++k)
    if (std::find(candidates.begin(), candidates.end(), k) == candidates.end()) rest.push_back(k);

  std::vector<Matrix> work{Matrix::identity(f, n)};
  std::vector<Matrix> primitive;
  std::mt19937_64 rng(0xdec0);
  while (!work.empty()) {
    Matrix e = std::move(work.back());
    work.pop_back();
    if (rank(e) == 1) {
      primitive.push_back(std::move(e));
      continue;
    }
    std::optional<std::pair<Matrix, Matrix>> split;
    for (std::size_t k : candidates)
      if ((split = try_split(e, phi[k]))) break;
    if (!split)
      for (std::size_t k : rest)
        if ((split = try_split(e, phi[k]))) break;
    for (int attempt = 0; !split && attempt < 8; ++attempt) {
      Matrix x(f, n, n);
      for (std::size_t k : candidates) {
        const Scalar coef = f.is_prime_field()
                                ? f.reduce(Scalar(static_cast<unsigned long>(rng() % f.characteristic())))
                                : Scalar(static_cast<long>(rng() % 11) - 5);
        if (!Field::is_zero(coef)) x = x + phi[k].scaled(coef);
      }
      split = try_split(e, x);
    }
    if (split) {
      work.push_back(std::move(split->first));
      work.push_back(std::move(split->second));
    } else {
      primitive.push_back(std::move(e));
    }
  }

  std::vector<std::pair<Subspace, Matrix>> parts;
  for (auto& e : primitive) parts.emplace_back(image(e), std::move(e));
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.first.pivots().front() < b.first.pivots().front(); });
  Subspace total(f, n);
  std::size_t dims = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto& [space, e] = parts[i];
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (i != j && !(e * parts[j].second).is_zero())
        throw InvalidStructure("decompose_injectives: idempotents are not orthogonal");
    auto sub = subcomodule(reg, space, std::string(side == Side::Right ? "E_r" : "E_l") + "(" +
                                           c->label(space.pivots().front()) + ")");
    const auto ind = is_indecomposable(sub.comodule);
    if (ind.status != Tristate::Yes) out.complete = false;
    auto soc = subcomodule(sub.comodule, socle(*sub.comodule));
    if (!is_simple(soc.comodule)) out.complete = false;
    total = subspace_sum(total, space);
    dims += space.dim();
    out.spaces.push_back(space);
    out.summands.push_back(sub.comodule);
    out.idempotents.push_back(e);
  }
  if (!total.is_full() || dims != n) throw InvalidStructure("decompose_injectives: summands do not add up to C");
  return out;
}

// --- duality -----------------------------------------------------------------------

ComodulePtr dual_comodule(const ComodulePtr& m) {
  std::vector<Matrix> a;
  a.reserve(m->actions().size());
  for (const auto& x : m->actions()) a.push_back(x.transpose());
  std::string name = m->name();
  if (name.size() > 1 && name.back() == '*')
    name.pop_back();
  else
    name += "*";
  return make_comodule(Comodule(m->parent(), opposite(m->side()), std::move(a), std::move(name)));
}

ComoduleMap dual_map(const ComoduleMap& f, const ComodulePtr& source_dual, const ComodulePtr& target_dual) {
  // f: M -> N; f*: N* -> M*.
  if (source_dual->dim() != f.target->dim() || target_dual->dim() != f.source->dim())
    throw DimensionMismatch("dual_map: dual comodules do not match");
  return {source_dual, target_dual, f.matrix.transpose()};
}

ComoduleMap dual_map(const ComoduleMap& f) { return dual_map(f, dual_comodule(f.target), dual_comodule(f.source)); }

ComoduleMap double_dual_iso(const ComodulePtr& m, const ComodulePtr& double_dual) {
  return make_map(m, double_dual, Matrix::identity(m->field(), m->dim()));
}

std::optional<ComoduleMap> find_isomorphism(const ComodulePtr& m, const ComodulePtr& n, std::uint64_t seed) {
  if (m->dim() != n->dim() || m->side() != n->side()) return std::nullopt;
  if (m->dim() == 0) return ComoduleMap{m, n, Matrix(m->field(), 0, 0)};
  const HomSpace h = hom_space(m, n);
  if (h.dim() == 0) return std::nullopt;
  for (const auto& b : h.basis)
    if (inverse(b)) return ComoduleMap{m, n, b};
  const Field& f = m->field();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vector c(h.dim());
    for (auto& x : c) x = f.is_prime_field() ? f.reduce(Scalar(static_cast<unsigned long>(rng() % f.characteristic())))
                                              : Scalar(static_cast<long>(rng() % 41) - 20);
    Matrix cand = h.combination(c);
    if (inverse(cand)) return ComoduleMap{m, n, std::move(cand)};
  }
  return std::nullopt;
}

std::vector<ComodulePtr> loewy_family(const CoalgebraPtr& c, Side side) {
  const auto dec = decompose_injectives(c, side);
  std::vector<ComodulePtr> family;
  for (const auto& summand : dec.summands) {
    const auto series = loewy_series(*summand);
    for (std::size_t i = 0; i < series.size(); ++i) {
      auto term = i + 1 == series.size()
                      ? summand
                      : subcomodule(summand, series[i], summand->name() + ".L" + std::to_string(i + 1)).comodule;
      bool seen = false;
      for (const auto& g : family)
        if (find_isomorphism(term, g)) {
          seen = true;
          break;
        }
      if (!seen) family.push_back(term);
    }
  }
  return family;
}

}  // namespace cofreyd
