#include "cofreyd/functor_ring.hpp"

#include <algorithm>
#include <random>

#include "cofreyd/spectral.hpp"

namespace cofreyd {

Vector FunctorRing::element(std::size_t i, std::size_t j, const Matrix& f) const {
  Vector out(dim());
  const HomSpace& h = hom(i, j);
  const Vector c = h.coordinates(f);
  for (std::size_t a = 0; a < c.size(); ++a) out[offset(i, j) + a] = c[a];
  return out;
}

Matrix FunctorRing::component(const Vector& x, std::size_t i, std::size_t j) const {
  const HomSpace& h = hom(i, j);
  const auto first = x.begin() + static_cast<std::ptrdiff_t>(offset(i, j));
  return h.combination(Vector(first, first + static_cast<std::ptrdiff_t>(h.dim())));
}

FunctorRing build_functor_ring(std::vector<ComodulePtr> family) {
  if (family.empty()) throw Error("build_functor_ring: empty family");
  const Field fld = family.front()->field();
  for (const auto& u : family)
    if (u->side() != family.front()->side()) throw Error("build_functor_ring: family mixes sides");
  const std::size_t r = family.size();
  std::vector<HomSpace> homs;
  std::vector<std::size_t> offsets;
  std::vector<RingBasisElement> basis;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      offsets.push_back(basis.size());
      homs.push_back(hom_space(family[i], family[j]));
      for (std::size_t a = 0; a < homs.back().dim(); ++a) basis.push_back({i, j, a});
    }
  FunctorRing ring{std::move(family), std::move(homs), std::move(offsets), std::move(basis),
                   MultTable(fld, 0), {}};
  const std::size_t n = ring.dim();
  ring.table = MultTable(fld, n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& bx = ring.basis[x];
    const Matrix& fx = ring.hom(bx.from, bx.to).basis[bx.index];
    for (std::size_t y = 0; y < n; ++y) {
      const auto& by = ring.basis[y];
      if (by.to != bx.from) continue;
      const Matrix prod = fx * ring.hom(by.from, by.to).basis[by.index];
      const Vector c = ring.hom(by.from, bx.to).coordinates(prod);
      if (ring.hom(by.from, bx.to).combination(c) != prod) throw InvalidStructure("functor ring: composite outside hom space");
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!Field::is_zero(c[k])) ring.table.add(x, y, ring.offset(by.from, bx.to) + k, c[k]);
    }
  }
  Vector unit(n);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& u = ring.family[i];
    ring.idempotents.push_back(ring.element(i, i, Matrix::identity(fld, u->dim())));
    for (std::size_t k = 0; k < n; ++k) unit[k] = fld.add(unit[k], ring.idempotents.back()[k]);
  }
  ring.table.set_unit(unit);
  if (!ring.table.is_associative()) throw InvalidStructure("functor ring: not associative");
  if (!ring.table.is_unital()) throw InvalidStructure("functor ring: sum of idempotents is not the unit");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Vector p = ring.table.multiply(ring.idempotents[i], ring.idempotents[j]);
      if (p != (i == j ? ring.idempotents[i] : Vector(n))) throw InvalidStructure("functor ring: idempotents not orthogonal");
    }
  return ring;
}

// --- modules -----------------------------------------------------------------------

namespace {

Matrix act(const FpModule& x, const Vector& r, const Field& fld) {
  Matrix out(fld, x.dim, x.dim);
  for (std::size_t k = 0; k < r.size(); ++k)
    if (!Field::is_zero(r[k])) out = out + x.actions[k].scaled(r[k]);
  return out;
}

std::vector<std::size_t> support_of(const std::vector<Matrix>& actions, const FunctorRing& ring) {
  FpModule tmp{actions.empty() ? 0 : actions.front().rows(), actions, {}, std::nullopt};
  std::vector<std::size_t> out;
  for (const auto& e : ring.idempotents) out.push_back(rank(act(tmp, e, ring.field())));
  return out;
}

}  // namespace

std::vector<std::string> module_violations(const FpModule& x, const FunctorRing& ring) {
  std::vector<std::string> out;
  const Field& fld = ring.field();
  if (x.actions.size() != ring.dim()) return {"wrong number of action matrices"};
  for (std::size_t a = 0; a < ring.dim(); ++a)
    for (std::size_t b = 0; b < ring.dim(); ++b) {
      Matrix rhs(fld, x.dim, x.dim);
      for (const auto& t : ring.table.product(a, b)) rhs = rhs + x.actions[t.index].scaled(t.coef);
      if (x.actions[a] * x.actions[b] != rhs) {
        out.push_back("action not multiplicative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        return out;
      }
    }
  if (!act(x, *ring.table.unit(), fld).is_identity()) out.push_back("unit does not act as the identity");
  return out;
}

FpModule fp_module_from_freyd(const FreydObject& o, const FunctorRing& ring) {
  const Field& fld = ring.field();
  const std::size_t r = ring.size();
  std::vector<HomSpace> hm;
  std::vector<Matrix> quot, sect;
  std::vector<std::size_t> mo(r + 1, 0);
  for (std::size_t i = 0; i < r; ++i) {
    hm.push_back(hom_space(o.m, ring.family[i]));
    const HomSpace hn = hom_space(o.n, ring.family[i]);
    std::vector<Vector> gens;
    for (const auto& g : hn.basis) gens.push_back(hm.back().coordinates(g * o.u));
    const Subspace s = Subspace::span(fld, hm.back().dim(), gens);
    quot.push_back(s.quotient_map());
    sect.push_back(s.quotient_section());
    mo[i + 1] = mo[i] + (hm.back().dim() - s.dim());
  }
  FpModule x;
  x.dim = mo[r];
  for (const auto& b : ring.basis) {
    Matrix a(fld, x.dim, x.dim);
    const Matrix& f = ring.hom(b.from, b.to).basis[b.index];
    const HomSpace& src = hm[b.from];
    const HomSpace& dst = hm[b.to];
    Matrix w(fld, dst.dim(), src.dim());
    for (std::size_t c = 0; c < src.dim(); ++c) {
      const Vector cc = dst.coordinates(f * src.basis[c]);
      for (std::size_t k = 0; k < cc.size(); ++k) w.mut(k, c) = cc[k];
    }
    if (mo[b.to + 1] > mo[b.to] && mo[b.from + 1] > mo[b.from]) a.set_block(mo[b.to], mo[b.from], quot[b.to] * w * sect[b.from]);
    x.actions.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < r; ++i) x.support.push_back(mo[i + 1] - mo[i]);
  x.presentation = o;
  if (const auto v = module_violations(x, ring); !v.empty()) throw InvalidStructure("fp module: " + v.front());
  return x;
}

Matrix module_hom_basis(const FpModule& x, const FpModule& y) {
  if (x.actions.size() != y.actions.size()) throw DimensionMismatch("module_hom_basis: different rings");
  const std::size_t dx = x.dim, dy = y.dim, n = dx * dy;
  const Field fld = !x.actions.empty() ? x.actions.front().field() : Field::rationals();
  if (n == 0) return Matrix(fld, 0, 0);
  Eliminator elim(fld, n);
  // T A_z - B_z T = 0, T[r, s] at unknown r * dx + s.
  for (std::size_t z = 0; z < x.actions.size(); ++z) {
    const Matrix& a = x.actions[z];
    const Matrix& b = y.actions[z];
    if (a.is_zero() && b.is_zero()) continue;
    for (std::size_t r = 0; r < dy; ++r)
      for (std::size_t c = 0; c < dx; ++c) {
        Vector row(n);
        for (std::size_t s = 0; s < dx; ++s)
          if (!Field::is_zero(a(s, c))) row[r * dx + s] = fld.add(row[r * dx + s], a(s, c));
        for (std::size_t t = 0; t < dy; ++t)
          if (!Field::is_zero(b(r, t))) row[t * dx + c] = fld.sub(row[t * dx + c], b(r, t));
        elim.add_row(row);
      }
  }
  return elim.kernel_basis();
}

std::size_t module_hom_dim(const FpModule& x, const FpModule& y) {
  if (x.dim * y.dim == 0) return 0;
  return module_hom_basis(x, y).rows();
}

std::optional<Matrix> find_module_isomorphism(const FpModule& x, const FpModule& y, std::uint64_t seed) {
  if (x.dim != y.dim) return std::nullopt;
  const Field fld = !x.actions.empty() ? x.actions.front().field() : Field::rationals();
  if (x.dim == 0) return Matrix(fld, 0, 0);
  const Matrix basis = module_hom_basis(x, y);
  if (basis.rows() == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix t(fld, y.dim, x.dim);
    for (std::size_t b = 0; b < basis.rows(); ++b) {
      const Scalar c = attempt == 0 ? Scalar(1) : random_scalar(rng, fld, 20);
      for (std::size_t e = 0; e < basis.cols(); ++e)
        if (!Field::is_zero(basis(b, e))) fld.add_mul(t.mut(e / x.dim, e % x.dim), c, basis(b, e));
    }
    if (inverse(t)) return t;
  }
  return std::nullopt;
}

FpModule direct_sum(const FpModule& x, const FpModule& y) {
  if (x.actions.size() != y.actions.size()) throw DimensionMismatch("direct_sum: different rings");
  FpModule out;
  out.dim = x.dim + y.dim;
  for (std::size_t z = 0; z < x.actions.size(); ++z) out.actions.push_back(direct_sum(x.actions[z], y.actions[z]));
  for (std::size_t i = 0; i < x.support.size() && i < y.support.size(); ++i) out.support.push_back(x.support[i] + y.support[i]);
  return out;
}

Subspace spin(const Field& field, const std::vector<Matrix>& actions, const Vector& v) {
  const std::size_t n = v.size();
  Eliminator elim(field, n);
  std::vector<Vector> found, queue;
  if (elim.add_row(v)) {
    found.push_back(v);
    queue.push_back(v);
  }
  while (!queue.empty() && elim.rank() < n) {
    const Vector w = std::move(queue.back());
    queue.pop_back();
    for (const auto& a : actions) {
      Vector img = a.apply(w);
      if (elim.add_row(img)) {
        found.push_back(img);
        queue.push_back(std::move(img));
      }
    }
  }
  return Subspace::span(field, n, found);
}

namespace {

/// Decides irreducibility of the representation spanned by `actions` (containing the identity
/// in their span). nullopt when undecided.
std::optional<bool> irreducible(const Field& fld, std::size_t n, const std::vector<Matrix>& actions) {
  if (n == 0) return false;
  if (n == 1) return true;
  std::vector<Matrix> nonzero, transposed;
  for (const auto& a : actions)
    if (!a.is_zero()) {
      nonzero.push_back(a);
      transposed.push_back(a.transpose());
    }
  for (std::size_t s = 0; s < n; ++s) {
    Vector e(n);
    e[s] = 1;
    if (!spin(fld, nonzero, e).is_full()) return false;
  }
  // Norton: a in the algebra with one-dimensional kernel; if a kernel vector of a and of a^T
  // both generate, there is no proper submodule.
  std::mt19937_64 rng(0x5eed);
  auto norton = [&](const Matrix& a) -> std::optional<bool> {
    const Subspace ker = kernel(a);
    if (ker.dim() != 1) return std::nullopt;
    if (!spin(fld, nonzero, ker.basis().row(0)).is_full()) return false;
    const Subspace kt = kernel(a.transpose());
    return spin(fld, transposed, kt.basis().row(0)).is_full();
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix a = attempt < static_cast<int>(nonzero.size()) ? nonzero[static_cast<std::size_t>(attempt)]
                                                          : random_combination(rng, nonzero, n, n, fld);
    if (attempt >= static_cast<int>(nonzero.size()) && attempt % 2 == 0) a = a * random_combination(rng, nonzero, n, n, fld);
    if (auto r = norton(a)) return r;
    if (fld.is_prime_field() && fld.characteristic() > (1u << 20)) continue;
    for (const auto& lambda : roots_in_field(characteristic_polynomial(a), fld))
      if (auto r = norton(a - Matrix::identity(fld, n).scaled(lambda))) return r;
  }
  if (fld.is_prime_field()) {
    const std::uint64_t p = fld.characteristic();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= p;
      if (total > (1u << 20)) return std::nullopt;
    }
    // Every projective point: leading coordinate 1.
    for (std::size_t lead = 0; lead < n; ++lead) {
      const std::size_t rest = n - lead - 1;
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < rest; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        Vector v(n);
        v[lead] = 1;
        std::uint64_t c = code;
        for (std::size_t i = 0; i < rest; ++i, c /= p) v[lead + 1 + i] = Scalar(static_cast<unsigned long>(c % p));
        if (!spin(fld, nonzero, v).is_full()) return false;
      }
    }
    return true;
  }
  return std::nullopt;
}

}  // namespace

bool is_simple_module(const FpModule& x, const FunctorRing& ring) {
  if (x.actions.size() != ring.dim()) throw DimensionMismatch("is_simple_module: wrong ring");
  const auto r = irreducible(ring.field(), x.dim, x.actions);
  if (!r) throw Error("is_simple_module: undecided over " + ring.field().name());
  return *r;
}

HomDualityCheck hom_fp_duality_check(const FreydObject& o1, const FreydObject& o2, const FunctorRing& ring) {
  HomDualityCheck out;
  out.dim_module_hom = module_hom_dim(fp_module_from_freyd(o1, ring), fp_module_from_freyd(o2, ring));
  out.dim_freyd_hom = freyd_hom_dim(o2, o1);
  out.equal = out.dim_module_hom == out.dim_freyd_hom;
  return out;
}

// --- R ~ L^op ---------------------------------------------------------------------

OppositeDuality opposite_duality_check(const std::vector<ComodulePtr>& family,
                                       const std::vector<ComodulePtr>& dual_family) {
  OppositeDuality out;
  const FunctorRing r = build_functor_ring(family);
  const FunctorRing l = build_functor_ring(dual_family);
  const Field& fld = r.field();
  out.dim_r = r.dim();
  out.dim_l = l.dim();
  out.map = Matrix(fld, l.dim(), r.dim());
  if (family.size() != dual_family.size()) {
    out.messages.push_back("family sizes differ");
    return out;
  }
  std::vector<Matrix> theta, theta_inv;
  std::vector<bool> used(dual_family.size(), false);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const ComodulePtr d = dual_comodule(family[i]);
    bool matched = false;
    for (std::size_t j = 0; j < dual_family.size() && !matched; ++j) {
      if (used[j]) continue;
      if (auto iso = find_isomorphism(d, dual_family[j])) {
        used[j] = matched = true;
        out.matching.push_back(j);
        theta.push_back(iso->matrix);
        theta_inv.push_back(*inverse(iso->matrix));
      }
    }
    if (!matched) {
      out.messages.push_back("no dual family member matches " + family[i]->name() + "*");
      return out;
    }
  }
  for (std::size_t x = 0; x < r.dim(); ++x) {
    const auto& b = r.basis[x];
    const Matrix& f = r.hom(b.from, b.to).basis[b.index];
    // f: U_i -> U_j gives V_{m(j)} -> V_{m(i)}.
    const Matrix g = theta[b.from] * f.transpose() * theta_inv[b.to];
    const std::size_t src = out.matching[b.to], dst = out.matching[b.from];
    const Vector v = l.element(src, dst, g);
    if (l.component(v, src, dst) != g) {
      out.messages.push_back("dual map outside the hom space");
      return out;
    }
    for (std::size_t k = 0; k < l.dim(); ++k) out.map.mut(k, x) = v[k];
  }
  if (r.dim() != l.dim() || !inverse(out.map)) {
    out.messages.push_back("f -> f* is not bijective");
    return out;
  }
  for (std::size_t x = 0; x < r.dim(); ++x)
    for (std::size_t y = 0; y < r.dim(); ++y) {
      Vector ex(r.dim()), ey(r.dim());
      ex[x] = 1;
      ey[y] = 1;
      const Vector lhs = out.map.apply(r.table.multiply(ex, ey));
      const Vector rhs = l.table.multiply(out.map.apply(ey), out.map.apply(ex));
      if (lhs != rhs) {
        out.messages.push_back("table mismatch at (" + std::to_string(x) + "," + std::to_string(y) + ")");
        return out;
      }
    }
  if (out.map.apply(*r.table.unit()) != *l.table.unit()) {
    out.messages.push_back("unit not preserved");
    return out;
  }
  out.iso = true;
  return out;
}

OppositeDuality opposite_duality_check(const std::vector<ComodulePtr>& family) {
  std::vector<ComodulePtr> duals;
  for (const auto& u : family) duals.push_back(dual_comodule(u));
  return opposite_duality_check(family, duals);
}

// --- simples -----------------------------------------------------------------------

std::vector<SimpleWitness> simple_witnesses(const CoalgebraPtr& c, Side side, const FunctorRing& ring) {
  const InjectiveDecomposition dec = decompose_injectives(c, side);
  std::vector<SimpleWitness> out;
  for (const auto& m : dec.summands) {
    const Subspace soc = socle(*m);
    auto q = quotient_comodule(m, soc, m->name() + "/soc");
    FreydObject o = make_freyd_object(m, q.comodule, q.map.matrix);
    FpModule x = fp_module_from_freyd(o, ring);
    const bool simple = is_simple_module(x, ring);
    out.push_back({m, std::move(o), std::move(x), simple});
  }
  return out;
}

namespace {

Matrix left_mult_restricted(const MultTable& t, const Vector& a, const Subspace& v) {
  return restrict_to(t.left_multiplication(a), v);
}

Subspace ideal_span(const MultTable& t, const Vector& x, bool left_of_x) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Vector e(t.dim());
    e[i] = 1;
    gens.push_back(left_of_x ? t.multiply(e, x) : t.multiply(x, e));
  }
  return Subspace::span(t.field(), t.dim(), gens);
}

/// Primitive central idempotents of a semisimple algebra.
std::vector<Vector> central_idempotents(const MultTable& s, bool& complete) {
  const Field& fld = s.field();
  const std::size_t n = s.dim();
  // Center: z b_i = b_i z for all i.
  Eliminator elim(fld, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(n);
      for (std::size_t l = 0; l < n; ++l) {
        for (const auto& t : s.product(l, i))
          if (t.index == k) row[l] = fld.add(row[l], t.coef);
        for (const auto& t : s.product(i, l))
          if (t.index == k) row[l] = fld.sub(row[l], t.coef);
      }
      elim.add_row(row);
    }
  const Matrix zb = elim.kernel_basis();
  std::vector<Vector> center;
  for (std::size_t r = 0; r < zb.rows(); ++r) center.push_back(zb.row(r));
  std::vector<Vector> work{*s.unit()}, done;
  std::mt19937_64 rng(7);
  while (!work.empty()) {
    const Vector e = work.back();
    work.pop_back();
    std::vector<Vector> gens;
    for (const auto& z : center) gens.push_back(s.multiply(z, e));
    const Subspace ze = Subspace::span(fld, n, gens);
    if (ze.dim() <= 1) {
      done.push_back(e);
      continue;
    }
    std::optional<Vector> e1;
    auto try_split = [&](const Vector& x) {
      const auto p = split_by_eigenvalues(left_mult_restricted(s, x, ze));
      if (!p) return;
      const Vector ce = ze.coordinates(e);
      const Vector c1 = p->apply(ce);
      Vector cand(n);
      for (std::size_t a = 0; a < ze.dim(); ++a)
        for (std::size_t k = 0; k < n; ++k) fld.add_mul(cand[k], c1[a], ze.basis()(a, k));
      if (s.multiply(cand, cand) == cand && cand != e && cand != Vector(n)) e1 = cand;
    };
    for (std::size_t a = 0; a < ze.dim() && !e1; ++a) try_split(ze.basis().row(a));
    for (int attempt = 0; attempt < 16 && !e1; ++attempt) {
      Vector x(n);
      for (std::size_t a = 0; a < ze.dim(); ++a) {
        const Scalar c = random_scalar(rng, fld);
        for (std::size_t k = 0; k < n; ++k) fld.add_mul(x[k], c, ze.basis()(a, k));
      }
      try_split(x);
    }
    if (!e1) {
      // A commutative semisimple algebra without eigenvalue splits may still be a product
      // of extension fields; search idempotents exhaustively when small.
      std::uint64_t total = 1;
      bool small = true;
      for (std::size_t a = 0; a < ze.dim() && small; ++a) {
        total *= fld.characteristic();
        small = total <= (1u << 16);
      }
      if (!small) {
        complete = false;
        done.push_back(e);
        continue;
      }
      for (std::uint64_t code = 1; code < total && !e1; ++code) {
        Vector x(n);
        std::uint64_t c = code;
        for (std::size_t a = 0; a < ze.dim(); ++a, c /= fld.characteristic())
          for (std::size_t k = 0; k < n; ++k)
            fld.add_mul(x[k], Scalar(static_cast<unsigned long>(c % fld.characteristic())), ze.basis()(a, k));
        if (x != e && s.multiply(x, x) == x) e1 = x;
      }
      if (!e1) {
        done.push_back(e);
        continue;
      }
    }
    Vector e2(n);
    for (std::size_t k = 0; k < n; ++k) e2[k] = fld.sub(e[k], (*e1)[k]);
    work.push_back(*e1);
    work.push_back(e2);
  }
  return done;
}

}  // namespace

OracleResult enumerate_simples_oracle(const MultTable& table) {
  const Field& fld = table.field();
  if (!fld.is_prime_field()) throw Error("enumerate_simples_oracle: needs a prime field");
  require_radical_characteristic(fld, table.dim());
  if (!table.unit()) throw InvalidStructure("enumerate_simples_oracle: table has no unit");
  OracleResult out;
  const Subspace j = trace_form_radical(table, true);
  out.radical_dim = j.dim();
  const MultTable s = table.quotient(j);
  const std::size_t n = s.dim();
  bool complete = true;
  const auto idems = central_idempotents(s, complete);
  // Images of the basis of the original algebra in R/J.
  std::vector<Matrix> lmul;
  for (std::size_t x = 0; x < table.dim(); ++x) {
    Vector e(table.dim());
    e[x] = 1;
    lmul.push_back(s.left_multiplication(j.quotient_coordinates(e)));
  }
  std::mt19937_64 rng(11);
  std::size_t total = 0;
  for (const auto& e : idems) {
    const Subspace block = ideal_span(s, e, true);
    out.block_dims.push_back(block.dim());
    // Descend to a minimal left ideal inside S e.
    Subspace ideal = block;
    std::vector<Matrix> gens;
    for (const auto& l : lmul) gens.push_back(l);
    for (bool shrunk = true; shrunk && ideal.dim() > 1;) {
      shrunk = false;
      std::vector<Vector> cands;
      for (std::size_t a = 0; a < ideal.dim(); ++a) cands.push_back(ideal.basis().row(a));
      for (int attempt = 0; attempt < 16; ++attempt) {
        Vector v(n);
        for (std::size_t a = 0; a < ideal.dim(); ++a) {
          const Scalar c = random_scalar(rng, fld);
          for (std::size_t k = 0; k < n; ++k) fld.add_mul(v[k], c, ideal.basis()(a, k));
        }
        cands.push_back(std::move(v));
      }
      // Singular elements a - lambda e of the block push vectors of the ideal into smaller ones.
      for (int attempt = 0; attempt < 4; ++attempt) {
        Vector a(n);
        for (std::size_t b = 0; b < block.dim(); ++b) {
          const Scalar c = random_scalar(rng, fld);
          for (std::size_t k = 0; k < n; ++k) fld.add_mul(a[k], c, block.basis()(b, k));
        }
        for (const auto& lambda : roots_in_field(characteristic_polynomial(left_mult_restricted(s, a, block)), fld)) {
          Vector shifted = a;
          for (std::size_t k = 0; k < n; ++k) fld.sub_mul(shifted[k], lambda, e[k]);
          for (std::size_t b = 0; b < ideal.dim(); ++b) cands.push_back(s.multiply(shifted, ideal.basis().row(b)));
        }
      }
      for (const auto& v : cands) {
        if (v == Vector(n)) continue;
        const Subspace sub = spin(fld, gens, v);
        if (sub.dim() < ideal.dim()) {
          ideal = sub;
          shrunk = true;
          break;
        }
      }
    }
    FpModule simple;
    simple.dim = ideal.dim();
    for (const auto& l : lmul) simple.actions.push_back(restrict_to(l, ideal));
    const auto irr = irreducible(fld, simple.dim, simple.actions);
    if (!irr || !*irr) complete = false;
    const std::size_t end = module_hom_dim(simple, simple);
    out.end_dims.push_back(end);
    if (end == 0 || (simple.dim * simple.dim) % end != 0) complete = false;
    else total += simple.dim * simple.dim / end;
    out.simples.push_back(std::move(simple));
  }
  out.complete = complete && total == n;
  for (std::size_t a = 0; a < out.simples.size() && out.complete; ++a)
    for (std::size_t b = a + 1; b < out.simples.size(); ++b)
      if (find_module_isomorphism(out.simples[a], out.simples[b])) out.complete = false;
  return out;
}

OracleResult enumerate_simples_oracle(const FunctorRing& ring) {
  OracleResult out = enumerate_simples_oracle(ring.table);
  for (auto& s : out.simples) s.support = support_of(s.actions, ring);
  return out;
}

// --- probe ------------------------------------------------------------------------

CoalgebraPtr build_named_example(const std::string& name, std::size_t d, const Field& field) {
  if (name == "incidence-chain") return std::make_shared<const Coalgebra>(incidence_chain(d, field));
  if (name == "dividedpower") return std::make_shared<const Coalgebra>(divided_power_truncated(d, field));
  if (name == "H") return std::make_shared<const Coalgebra>(h_coalgebra(d, field));
  throw Error("unknown example: " + name);
}

namespace {

SideProbe probe_side(const CoalgebraPtr& c, Side side) {
  SideProbe out;
  const InjectiveDecomposition dec = decompose_injectives(c, side);
  out.complete = dec.complete;
  for (const auto& m : dec.summands) {
    out.summand_dims.push_back(m->dim());
    out.summand_simple.push_back(socle(*m).dim() == m->dim());
  }
  out.min_dim = out.summand_dims.empty() ? 0 : *std::min_element(out.summand_dims.begin(), out.summand_dims.end());
  out.witness_count = dec.complete ? dec.summands.size() : 0;
  return out;
}

}  // namespace

ProbeReport symmetry_probe(const std::string& builder, const std::vector<std::size_t>& orders, const Field& field) {
  ProbeReport rep;
  rep.builder = builder;
  rep.field = field.name();
  for (const std::size_t d : orders) {
    const CoalgebraPtr c = build_named_example(builder, d, field);
    rep.rows.push_back({d, c->dim(), probe_side(c, Side::Right), probe_side(c, Side::Left)});
  }
  rep.left_min_unbounded = rep.right_min_constant = rep.both_sides_witnessed = !rep.rows.empty();
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    if (row.left.min_dim != row.order + 1) rep.left_min_unbounded = false;
    if (i > 0 && row.left.min_dim <= rep.rows[i - 1].left.min_dim) rep.left_min_unbounded = false;
    if (row.right.min_dim != 1) rep.right_min_constant = false;
    if (row.right.witness_count == 0 || row.left.witness_count == 0) rep.both_sides_witnessed = false;
  }
  return rep;
}

}  // namespace cofreyd
