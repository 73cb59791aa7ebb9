#include "cofreyd/freyd.hpp"

#include "cofreyd/spectral.hpp"

namespace cofreyd {

const char* flavor_name(Flavor f) { return f == Flavor::B ? "B" : "A"; }

namespace {

/// Flattened matrix entries, row-major.
Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

/// Coefficients y with sum y_i gens[i] = target, or nullopt.
std::optional<Vector> solve_in_span(const std::vector<Matrix>& gens, const Matrix& target) {
  const Field& f = target.field();
  const std::size_t len = target.rows() * target.cols();
  if (gens.empty()) {
    if (target.is_zero()) return Vector{};
    return std::nullopt;
  }
  Matrix a(f, len, gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Vector v = flatten(gens[i]);
    for (std::size_t e = 0; e < len; ++e) a.mut(e, i) = v[e];
  }
  auto res = rref_solve(a, flatten(target));
  if (!res.solution) return std::nullopt;
  return res.solution->particular;
}

Matrix combine(const std::vector<Matrix>& gens, const Vector& y, std::size_t rows, std::size_t cols, const Field& f) {
  Matrix out(f, rows, cols);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!Field::is_zero(y[i])) out = out + gens[i].scaled(y[i]);
  return out;
}

void require_square(const FreydMap& m) {
  if (m.target.u * m.f != m.g * m.source.u) throw InvalidStructure("Freyd map: square does not commute");
}

}  // namespace

FreydObject make_freyd_object(ComodulePtr m, ComodulePtr n, Matrix u, Flavor flavor) {
  if (!intertwines(u, *m, *n)) throw InvalidStructure("Freyd object: u is not a comodule map");
  return FreydObject{flavor, std::move(m), std::move(n), std::move(u)};
}

FreydMap make_freyd_map(FreydObject source, FreydObject target, Matrix f, Matrix g) {
  if (source.flavor != target.flavor) throw Error("Freyd map: flavors differ");
  if (!intertwines(f, *source.m, *target.m) || !intertwines(g, *source.n, *target.n))
    throw InvalidStructure("Freyd map: components are not comodule maps");
  FreydMap out{std::move(source), std::move(target), std::move(f), std::move(g)};
  require_square(out);
  return out;
}

FreydMap identity_freyd_map(const FreydObject& o) {
  return FreydMap{o, o, Matrix::identity(o.m->field(), o.m->dim()), Matrix::identity(o.n->field(), o.n->dim())};
}

FreydMap compose_freyd(const FreydMap& a, const FreydMap& b) {
  if (b.target.m->dim() != a.source.m->dim() || b.target.n->dim() != a.source.n->dim() ||
      b.target.u != a.source.u)
    throw Error("compose_freyd: maps are not composable");
  FreydMap out{b.source, a.target, a.f * b.f, a.g * b.g};
  require_square(out);
  return out;
}

FreydMap add_freyd(const FreydMap& a, const FreydMap& b) {
  if (a.source.u != b.source.u || a.target.u != b.target.u) throw Error("add_freyd: different endpoints");
  return FreydMap{a.source, a.target, a.f + b.f, a.g + b.g};
}

FreydMap scale_freyd(const FreydMap& a, const Scalar& s) { return FreydMap{a.source, a.target, a.f.scaled(s), a.g.scaled(s)}; }

// --- zero tests ------------------------------------------------------------------

namespace {

ZeroMorphismResult b_zero(const FreydMap& m) {
  ZeroMorphismResult res;
  const Field& fld = m.f.field();
  // alpha in Hom(N', M) with alpha u' = f.
  const HomSpace h = hom_space(m.source.n, m.target.m);
  std::vector<Matrix> gens;
  for (const auto& b : h.basis) gens.push_back(b * m.source.u);
  const auto y = solve_in_span(gens, m.f);
  if (!y) return res;
  res.zero = true;
  Matrix alpha = combine(h.basis, *y, m.target.m->dim(), m.source.n->dim(), fld);
  FreydMap part1{m.source, m.target, alpha * m.source.u, m.target.u * alpha};
  FreydMap part2{m.source, m.target, Matrix(fld, m.f.rows(), m.f.cols()), m.g - m.target.u * alpha};
  require_square(part1);
  require_square(part2);
  res.witness = std::move(alpha);
  res.split = std::make_pair(std::move(part1), std::move(part2));
  return res;
}

}  // namespace

ZeroMorphismResult is_zero_morphism(const FreydMap& m) {
  require_square(m);
  if (m.source.flavor == Flavor::B) return b_zero(m);
  // A-zero on C is B-zero on the dual square.
  const FreydMap d = dual_freyd(m);
  ZeroMorphismResult dual_res = b_zero(d);
  ZeroMorphismResult res;
  res.zero = dual_res.zero;
  if (!res.zero) return res;
  const Field& fld = m.f.field();
  Matrix beta = dual_res.witness->transpose();  // N' -> M with u beta = g
  if (m.target.u * beta != m.g) throw InvalidStructure("A-zero witness transport failed");
  FreydMap part1{m.source, m.target, beta * m.source.u, m.target.u * beta};
  FreydMap part2{m.source, m.target, m.f - beta * m.source.u, Matrix(fld, m.g.rows(), m.g.cols())};
  require_square(part1);
  require_square(part2);
  res.witness = std::move(beta);
  res.split = std::make_pair(std::move(part1), std::move(part2));
  return res;
}

ZeroObjectResult is_zero_object(const FreydObject& o) {
  ZeroObjectResult res;
  if (o.flavor == Flavor::A) {
    // {M, u, N} = 0 iff u is a split epimorphism, i.e. u* is a split monomorphism.
    auto d = is_zero_object(dual_freyd(o));
    res.zero = d.zero;
    if (d.retraction) res.retraction = d.retraction->transpose();
    return res;
  }
  const HomSpace h = hom_space(o.n, o.m);
  std::vector<Matrix> gens;
  for (const auto& b : h.basis) gens.push_back(b * o.u);
  const auto y = solve_in_span(gens, Matrix::identity(o.m->field(), o.m->dim()));
  if (!y) return res;
  res.zero = true;
  res.retraction = combine(h.basis, *y, o.m->dim(), o.n->dim(), o.m->field());
  return res;
}

// --- completion to complexes ---------------------------------------------------------

ThreeTermComplex complete_to_complex(const FreydObject& o) {
  const Subspace im = image(o.u);
  auto quo = quotient_comodule(o.n, im, o.n->name() + "/im");
  ThreeTermComplex c{o.m, o.n, quo.comodule, o.u, quo.map.matrix, false};
  // Exact at N: ker q = im u and q u = 0.
  c.exact_at_n = (c.q * c.u).is_zero() && kernel(c.q) == im;
  return c;
}

ChainMap complete_map(const FreydMap& m) {
  ChainMap ch{complete_to_complex(m.source), complete_to_complex(m.target), m.f, m.g, Matrix(m.f.field(), 0, 0)};
  const Subspace im_src = image(m.source.u);
  ch.h = ch.target.q * m.g * im_src.quotient_section();
  if (ch.h * ch.source.q != ch.target.q * m.g) throw InvalidStructure("complete_map: induced map is not well defined");
  if (!intertwines(ch.h, *ch.source.p, *ch.target.p)) throw InvalidStructure("complete_map: induced map is not a comodule map");
  return ch;
}

NullHomotopyResult null_homotopy(const ChainMap& ch) {
  NullHomotopyResult res;
  const Field& fld = ch.f.field();
  const HomSpace ha = hom_space(ch.source.n, ch.target.m);  // alpha: N' -> M
  const HomSpace hb = hom_space(ch.source.p, ch.target.n);  // alpha': P' -> N
  const std::size_t a = ha.dim(), b = hb.dim();
  const std::size_t lf = ch.f.rows() * ch.f.cols(), lg = ch.g.rows() * ch.g.cols();
  // Unknowns (y, z); rows: alpha u' = f, then alpha' q' + u alpha = g.
  Matrix sys(fld, lf + lg, a + b);
  for (std::size_t i = 0; i < a; ++i) {
    const Vector top = flatten(ha.basis[i] * ch.source.u);
    const Vector bot = flatten(ch.target.u * ha.basis[i]);
    for (std::size_t e = 0; e < lf; ++e) sys.mut(e, i) = top[e];
    for (std::size_t e = 0; e < lg; ++e) sys.mut(lf + e, i) = bot[e];
  }
  for (std::size_t j = 0; j < b; ++j) {
    const Vector bot = flatten(hb.basis[j] * ch.source.q);
    for (std::size_t e = 0; e < lg; ++e) sys.mut(lf + e, a + j) = bot[e];
  }
  Vector rhs = flatten(ch.f);
  const Vector gv = flatten(ch.g);
  rhs.insert(rhs.end(), gv.begin(), gv.end());
  if (sys.cols() == 0) {
    bool zero = true;
    for (const auto& x : rhs) zero = zero && Field::is_zero(x);
    if (zero) {
      res.null_homotopic = true;
      res.alpha = Matrix(fld, ch.target.m->dim(), ch.source.n->dim());
      res.alpha_prime = Matrix(fld, ch.target.n->dim(), ch.source.p->dim());
    }
    return res;
  }
  auto sol = rref_solve(sys, rhs);
  if (!sol.solution) return res;
  const Vector& x = sol.solution->particular;
  res.null_homotopic = true;
  res.alpha = ha.combination(Vector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(a)));
  if (b == 0)
    res.alpha_prime = Matrix(fld, ch.target.n->dim(), ch.source.p->dim());
  else
    res.alpha_prime = hb.combination(Vector(x.begin() + static_cast<std::ptrdiff_t>(a), x.end()));
  return res;
}

// --- duality ----------------------------------------------------------------------

FreydObject dual_freyd(const FreydObject& o) {
  return FreydObject{flip(o.flavor), dual_comodule(o.n), dual_comodule(o.m), o.u.transpose()};
}

FreydMap dual_freyd(const FreydMap& m, const FreydObject& source_dual, const FreydObject& target_dual) {
  // (f, g): (M', u', N') -> (M, u, N) gives (g*, f*): (N*, u*, M*) -> (N'*, u'*, M'*).
  return FreydMap{target_dual, source_dual, m.g.transpose(), m.f.transpose()};
}

FreydMap dual_freyd(const FreydMap& m) { return dual_freyd(m, dual_freyd(m.source), dual_freyd(m.target)); }

// --- hom spaces in the quotient ------------------------------------------------------

namespace {

struct SquareSpace {
  HomSpace hf;  // Hom(M', M)
  HomSpace hg;  // Hom(N', N)
  /// Rows: coordinates (f-coords, g-coords) of a basis of the square space.
  Matrix basis;
};

SquareSpace squares(const FreydObject& from, const FreydObject& to) {
  SquareSpace s{hom_space(from.m, to.m), hom_space(from.n, to.n), Matrix(from.m->field(), 0, 0)};
  const Field& fld = from.m->field();
  const std::size_t a = s.hf.dim(), b = s.hg.dim();
  const std::size_t len = to.n->dim() * from.m->dim();
  Matrix sys(fld, len, a + b);
  for (std::size_t i = 0; i < a; ++i) {
    const Vector v = flatten(to.u * s.hf.basis[i]);
    for (std::size_t e = 0; e < len; ++e) sys.mut(e, i) = v[e];
  }
  for (std::size_t j = 0; j < b; ++j) {
    const Vector v = flatten(s.hg.basis[j] * from.u);
    for (std::size_t e = 0; e < len; ++e) sys.mut(e, a + j) = fld.neg(v[e]);
  }
  s.basis = a + b == 0 ? Matrix(fld, 0, 0) : nullspace(sys);
  return s;
}

Vector concat(const Vector& x, const Vector& y) {
  Vector out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

}  // namespace

std::vector<std::pair<Matrix, Matrix>> square_basis(const FreydObject& from, const FreydObject& to) {
  const SquareSpace s = squares(from, to);
  std::vector<std::pair<Matrix, Matrix>> out;
  const std::size_t a = s.hf.dim();
  for (std::size_t r = 0; r < s.basis.rows(); ++r) {
    const Vector v = s.basis.row(r);
    Matrix f = s.hf.combination(Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(a)));
    Matrix g = s.hg.dim() == 0 ? Matrix(from.m->field(), to.n->dim(), from.n->dim())
                               : s.hg.combination(Vector(v.begin() + static_cast<std::ptrdiff_t>(a), v.end()));
    out.emplace_back(std::move(f), std::move(g));
  }
  return out;
}

std::size_t freyd_hom_dim(const FreydObject& from, const FreydObject& to) {
  if (from.flavor != to.flavor) throw Error("freyd_hom_dim: flavors differ");
  const SquareSpace s = squares(from, to);
  const Field& fld = from.m->field();
  const std::size_t a = s.hf.dim(), b = s.hg.dim();
  if (a + b == 0) return 0;
  std::vector<Vector> zero_gens;
  const Vector zf(a), zg(b);
  const HomSpace h = hom_space(from.n, to.m);  // alpha or beta: N' -> M
  for (const auto& x : h.basis) zero_gens.push_back(concat(s.hf.coordinates(x * from.u), s.hg.coordinates(to.u * x)));
  if (from.flavor == Flavor::B) {
    // (0, g0) with g0 u' = 0.
    Matrix sys(fld, from.m->dim() * to.n->dim(), b);
    for (std::size_t j = 0; j < b; ++j) {
      const Vector v = flatten(s.hg.basis[j] * from.u);
      for (std::size_t e = 0; e < v.size(); ++e) sys.mut(e, j) = v[e];
    }
    if (b > 0) {
      const Matrix k = nullspace(sys);
      for (std::size_t r = 0; r < k.rows(); ++r) zero_gens.push_back(concat(zf, k.row(r)));
    }
  } else {
    // (f0, 0) with u f0 = 0.
    Matrix sys(fld, to.n->dim() * from.m->dim(), a);
    for (std::size_t i = 0; i < a; ++i) {
      const Vector v = flatten(to.u * s.hf.basis[i]);
      for (std::size_t e = 0; e < v.size(); ++e) sys.mut(e, i) = v[e];
    }
    if (a > 0) {
      const Matrix k = nullspace(sys);
      for (std::size_t r = 0; r < k.rows(); ++r) zero_gens.push_back(concat(k.row(r), zg));
    }
  }
  const std::size_t zero_dim = zero_gens.empty() ? 0 : Subspace::span(fld, a + b, zero_gens).dim();
  const Subspace sq = Subspace::span(s.basis);
  if (!zero_gens.empty() && !sq.contains(Subspace::span(fld, a + b, zero_gens)))
    throw InvalidStructure("freyd_hom_dim: zero morphisms are not squares");
  return sq.dim() - zero_dim;
}

// --- M^2_Delta(C) ----------------------------------------------------------------------

namespace {

const Coalgebra& base_of(const FreydObject& o) { return o.m->coalgebra(); }

}  // namespace

MatrixEquivalence matrix_comodule_equivalence(const FreydObject& o, const CoalgebraPtr& m2) {
  if (o.m->side() != Side::Right || o.n->side() != Side::Right)
    throw Error("matrix_comodule_equivalence: needs right comodules");
  const std::size_t nc = base_of(o).dim();
  if (m2->dim() != 3 * nc) throw DimensionMismatch("matrix_comodule_equivalence: wrong matrix coalgebra");
  const Field& fld = o.m->field();
  const std::size_t dm = o.m->dim(), dn = o.n->dim(), dt = dm + dn;
  std::vector<Matrix> a(3 * nc, Matrix(fld, dt, dt));
  for (std::size_t k = 0; k < nc; ++k) {
    a[k].set_block(dm, dm, o.n->action(k));                     // n -> n_0 (x) x[n_1]
    a[nc + k].set_block(dm, 0, o.u * o.m->action(k));           // m -> u(m_0) (x) y[m_1]
    a[2 * nc + k].set_block(0, 0, o.m->action(k));              // m -> m_0 (x) z[m_1]
  }
  auto t = make_comodule(Comodule(m2, Side::Right, std::move(a), "T(" + o.m->name() + "->" + o.n->name() + ")"));
  const auto report = validate_comodule(*t);
  if (!report.ok) throw InvalidStructure("matrix_comodule_equivalence: coaction fails validation");
  return {m2, t};
}

MatrixEquivalence matrix_comodule_equivalence(const FreydObject& o) {
  auto m2 = std::make_shared<const Coalgebra>(matrix2_coalgebra(base_of(o)));
  return matrix_comodule_equivalence(o, m2);
}

ComodulePtr matrix_comodule_candidate(const FreydObject& o, const CoalgebraPtr& m2) {
  const std::size_t nc = base_of(o).dim();
  const Field& fld = o.m->field();
  const std::size_t dm = o.m->dim(), dn = o.n->dim(), dt = dm + dn;
  std::vector<Matrix> a(3 * nc, Matrix(fld, dt, dt));
  for (std::size_t k = 0; k < nc; ++k) {
    a[k].set_block(dm, dm, o.n->action(k));
    a[nc + k].set_block(dm, 0, o.u * o.m->action(k));
    a[2 * nc + k].set_block(dm, dm, o.n->action(k));
  }
  return make_comodule(Comodule(m2, Side::Right, std::move(a), "candidate"));
}

InverseEquivalence matrix_comodule_inverse(const ComodulePtr& t, const CoalgebraPtr& c) {
  const std::size_t nc = c->dim();
  if (t->coalgebra().dim() != 3 * nc) throw DimensionMismatch("matrix_comodule_inverse: wrong base coalgebra");
  const Field& fld = t->field();
  const std::size_t dt = t->dim();
  Matrix pe(fld, dt, dt), pf(fld, dt, dt), pn(fld, dt, dt);
  for (std::size_t k = 0; k < nc; ++k) {
    const Scalar& e = c->epsilon()[k];
    if (Field::is_zero(e)) continue;
    pf = pf + t->action(k).scaled(e);
    pn = pn + t->action(nc + k).scaled(e);
    pe = pe + t->action(2 * nc + k).scaled(e);
  }
  if (!is_idempotent(pe) || !is_idempotent(pf) || !(pe + pf).is_identity())
    throw InvalidStructure("matrix_comodule_inverse: E and F do not split T");
  const Subspace et = image(pe), ft = image(pf);
  std::vector<Matrix> am, an;
  for (std::size_t k = 0; k < nc; ++k) {
    am.push_back(restrict_to(t->action(2 * nc + k), et));
    an.push_back(restrict_to(t->action(k), ft));
  }
  auto m = make_comodule(Comodule(c, Side::Right, std::move(am), "E.T"));
  auto n = make_comodule(Comodule(c, Side::Right, std::move(an), "F.T"));
  if (!validate_comodule(*m).ok || !validate_comodule(*n).ok)
    throw InvalidStructure("matrix_comodule_inverse: components are not comodules");
  // u = P_N restricted to E.T, read in the echelon coordinates of F.T.
  Matrix u(fld, ft.dim(), et.dim());
  for (std::size_t a = 0; a < et.dim(); ++a) {
    const Vector img = pn.apply(et.basis().row(a));
    if (!ft.contains(img)) throw InvalidStructure("matrix_comodule_inverse: N does not map E.T into F.T");
    const Vector cc = ft.coordinates(img);
    for (std::size_t b = 0; b < ft.dim(); ++b) u.mut(b, a) = cc[b];
  }
  return {make_freyd_object(m, n, std::move(u)), pe, pf, pn};
}

std::optional<MorIso> find_mor_isomorphism(const FreydObject& x, const FreydObject& y, std::uint64_t seed) {
  if (x.m->dim() != y.m->dim() || x.n->dim() != y.n->dim()) return std::nullopt;
  const Field& fld = x.m->field();
  const auto basis = square_basis(x, y);
  auto ok = [](const Matrix& a, const Matrix& b) { return inverse(a).has_value() && inverse(b).has_value(); };
  if (x.m->dim() + x.n->dim() == 0) return MorIso{Matrix(fld, 0, 0), Matrix(fld, 0, 0)};
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix a(fld, y.m->dim(), x.m->dim()), b(fld, y.n->dim(), x.n->dim());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Scalar c = attempt == 0 ? Scalar(1) : random_scalar(rng, fld, 20);
      a = a + basis[i].first.scaled(c);
      b = b + basis[i].second.scaled(c);
    }
    if (ok(a, b)) return MorIso{std::move(a), std::move(b)};
  }
  return std::nullopt;
}

// --- sampling ----------------------------------------------------------------------

Scalar random_scalar(std::mt19937_64& rng, const Field& f, long radius) {
  if (f.is_prime_field()) return f.reduce(Scalar(static_cast<unsigned long>(rng() % f.characteristic())));
  const auto span = static_cast<std::uint64_t>(2 * radius + 1);
  return Scalar(static_cast<long>(rng() % span) - radius);
}

Matrix random_combination(std::mt19937_64& rng, const std::vector<Matrix>& basis, std::size_t rows, std::size_t cols,
                           const Field& f) {
  Matrix out(f, rows, cols);
  for (const auto& b : basis) {
    const Scalar c = random_scalar(rng, f);
    if (!Field::is_zero(c)) out = out + b.scaled(c);
  }
  return out;
}

FreydObject random_freyd_object(std::mt19937_64& rng, const std::vector<ComodulePtr>& pool) {
  if (pool.empty()) throw Error("random_freyd_object: empty pool");
  const auto& m = pool[rng() % pool.size()];
  const auto& n = pool[rng() % pool.size()];
  const HomSpace h = hom_space(m, n);
  return make_freyd_object(m, n, random_combination(rng, h.basis, n->dim(), m->dim(), m->field()));
}

FreydMap random_freyd_map(std::mt19937_64& rng, const FreydObject& from, const FreydObject& to) {
  const Field& fld = from.m->field();
  if (rng() % 2 == 0) {
    // (alpha u', u alpha) + (0, g0) with g0 u' = 0: B-zero by construction.
    const HomSpace h = hom_space(from.n, to.m);
    const Matrix alpha = random_combination(rng, h.basis, to.m->dim(), from.n->dim(), fld);
    const HomSpace hg = hom_space(from.n, to.n);
    std::vector<Matrix> killers;
    if (hg.dim() > 0) {
      Matrix sys(fld, to.n->dim() * from.m->dim(), hg.dim());
      for (std::size_t j = 0; j < hg.dim(); ++j) {
        const Vector v = flatten(hg.basis[j] * from.u);
        for (std::size_t e = 0; e < v.size(); ++e) sys.mut(e, j) = v[e];
      }
      const Matrix k = nullspace(sys);
      for (std::size_t r = 0; r < k.rows(); ++r) killers.push_back(hg.combination(k.row(r)));
    }
    const Matrix g0 = random_combination(rng, killers, to.n->dim(), from.n->dim(), fld);
    return make_freyd_map(from, to, alpha * from.u, to.u * alpha + g0);
  }
  const auto basis = square_basis(from, to);
  Matrix f(fld, to.m->dim(), from.m->dim()), g(fld, to.n->dim(), from.n->dim());
  for (const auto& [bf, bg] : basis) {
    const Scalar c = random_scalar(rng, fld);
    f = f + bf.scaled(c);
    g = g + bg.scaled(c);
  }
  return make_freyd_map(from, to, std::move(f), std::move(g));
}

}  // namespace cofreyd
