#include "cofreyd/spectral.hpp"

#include <algorithm>

namespace cofreyd {

namespace {

Matrix hessenberg(Matrix h) {
  const Field& f = h.field();
  const std::size_t n = h.rows();
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && Field::is_zero(h(piv, c))) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.mut(piv, j), h.mut(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h.mut(i, piv), h.mut(i, c + 1));
    }
    const Scalar inv = f.inv(h(c + 1, c));
    for (std::size_t i = c + 2; i < n; ++i) {
      if (Field::is_zero(h(i, c))) continue;
      const Scalar u = f.mul(h(i, c), inv);
      for (std::size_t j = 0; j < n; ++j) f.sub_mul(h.mut(i, j), u, h(c + 1, j));
      for (std::size_t r = 0; r < n; ++r) f.add_mul(h.mut(r, c + 1), u, h(r, i));
    }
  }
  return h;
}

void poly_axpy(Polynomial& acc, const Scalar& a, const Polynomial& p, const Field& f) {
  if (acc.size() < p.size()) acc.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) f.add_mul(acc[i], a, p[i]);
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

constexpr unsigned long kTrialDivisionLimit = 1000000000000UL;

}  // namespace

Polynomial characteristic_polynomial(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("characteristic_polynomial: matrix not square");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  const Matrix h = hessenberg(a);
  std::vector<Polynomial> p(n + 1);
  p[0] = {Scalar(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    // (t - h_mm) p_{m-1}
    Polynomial next(m + 1);
    for (std::size_t i = 0; i < p[m - 1].size(); ++i) {
      next[i + 1] = f.add(next[i + 1], p[m - 1][i]);
      f.sub_mul(next[i], h(m - 1, m - 1), p[m - 1][i]);
    }
    Scalar prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = f.mul(prod, h(i, i - 1));
      if (Field::is_zero(prod)) break;
      poly_axpy(next, f.neg(f.mul(h(i - 1, m - 1), prod)), p[i - 1], f);
    }
    p[m] = std::move(next);
  }
  return p[n];
}

Scalar evaluate(const Polynomial& p, const Scalar& x, const Field& field) {
  Scalar acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = field.add(field.mul(acc, x), p[i]);
  return acc;
}

std::vector<Scalar> roots_in_field(const Polynomial& poly, const Field& field) {
  Polynomial p = poly;
  while (!p.empty() && Field::is_zero(p.back())) p.pop_back();
  std::vector<Scalar> roots;
  if (p.size() <= 1) return roots;
  if (field.is_prime_field()) {
    const std::uint64_t q = field.characteristic();
    if (q > (1u << 20)) throw Error("roots_in_field: prime too large for exhaustive search");
    for (std::uint64_t x = 0; x < q; ++x) {
      const Scalar v(static_cast<unsigned long>(x));
      if (Field::is_zero(evaluate(p, v, field))) roots.push_back(v);
    }
    return roots;
  }
  std::size_t shift = 0;
  while (Field::is_zero(p[shift])) ++shift;
  if (shift) roots.push_back(Scalar(0));
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(shift));
  if (p.size() <= 1) return roots;
  mpz_class lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  const mpz_class a0 = Scalar(p.front() * lcm).get_num();
  const mpz_class an = Scalar(p.back() * lcm).get_num();
  if (abs(a0) > kTrialDivisionLimit || abs(an) > kTrialDivisionLimit) return roots;
  const auto num = divisors(a0);
  const auto den = divisors(an);
  std::vector<Scalar> cand;
  for (const auto& a : num)
    for (const auto& b : den) {
      Scalar r(a, b);
      r.canonicalize();
      cand.push_back(r);
      cand.push_back(-r);
    }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const auto& r : cand)
    if (Field::is_zero(evaluate(p, r, field))) roots.push_back(r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

Matrix restrict_to(const Matrix& x, const Subspace& v) {
  const Field& f = x.field();
  const std::size_t r = v.dim();
  Matrix out(f, r, r);
  for (std::size_t a = 0; a < r; ++a) {
    const Vector img = x.apply(v.basis().row(a));
    if (!v.contains(img)) throw InvalidStructure("restrict_to: subspace is not stable");
    const Vector c = v.coordinates(img);
    for (std::size_t b = 0; b < r; ++b) out.mut(b, a) = c[b];
  }
  return out;
}

std::optional<Matrix> fitting_idempotent(const Matrix& x, const Scalar& lambda) {
  const Field& f = x.field();
  const std::size_t n = x.rows();
  Matrix shifted = x - Matrix::identity(f, n).scaled(lambda);
  Matrix power = shifted;
  for (std::size_t k = 1; k < n; ++k) power = power * shifted;
  const Subspace ker = kernel(power);
  if (ker.is_zero() || ker.is_full()) return std::nullopt;
  const Subspace im = image(power);
  // Change of basis S = [ker | im]; projection S diag(1,..,1,0,..,0) S^{-1}.
  Matrix s = hstack(ker.inclusion(), im.inclusion());
  const auto s_inv = inverse(s);
  if (!s_inv) throw InvalidStructure("fitting_idempotent: kernel and image not complementary");
  Matrix d(f, n, n);
  for (std::size_t i = 0; i < ker.dim(); ++i) d.mut(i, i) = 1;
  return s * d * *s_inv;
}

std::optional<Matrix> split_by_eigenvalues(const Matrix& x) {
  for (const auto& lambda : roots_in_field(characteristic_polynomial(x), x.field()))
    if (auto e = fitting_idempotent(x, lambda)) return e;
  return std::nullopt;
}

bool is_idempotent(const Matrix& e) { return e.rows() == e.cols() && e * e == e; }

}  // namespace cofreyd
