#include "cofreyd/field.hpp"

#include <charconv>

namespace cofreyd {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_same_field(const Field& a, const Field& b, const char* where) {
  if (a != b) throw FieldMismatch(std::string(where) + ": mixed fields " + a.name() + " and " + b.name());
}

Field::Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p), pz_(static_cast<unsigned long>(p)) {}

Field Field::rationals() { return Field(Kind::Rationals, 0); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::PrimeField, p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "Q" || spec == "QQ" || spec == "Rationals") return rationals();
  std::string_view digits;
  if (spec.starts_with("Fp:")) {
    digits = spec.substr(3);
  } else if (spec.starts_with("F_")) {
    digits = spec.substr(2);
  } else if (spec.starts_with("F")) {
    digits = spec.substr(1);
  } else {
    throw ParseError("unknown field spec '" + std::string(spec) + "'");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("unknown field spec '" + std::string(spec) + "'");
  }
  return prime(p);
}

void Field::normalize(mpz_class& z) const {
  mpz_fdiv_r(z.get_mpz_t(), z.get_mpz_t(), pz_.get_mpz_t());
}

Scalar Field::reduce(const Scalar& x) const {
  if (kind_ == Kind::Rationals) {
    Scalar r(x);
    r.canonicalize();
    return r;
  }
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  normalize(num);
  if (den != 1) {
    normalize(den);
    if (den == 0) throw Error("denominator divisible by the characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz_.get_mpz_t());
    num *= inv;
    normalize(num);
  }
  return Scalar(num);
}

Scalar Field::from_int(long v) const { return reduce(Scalar(v)); }

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= pz_) r -= pz_;
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += pz_;
  return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  normalize(r);
  return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return -a;
  if (sgn(a) == 0) return a;
  return Scalar(pz_ - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw Error("division by zero");
  if (kind_ == Kind::Rationals) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), pz_.get_mpz_t());
  return Scalar(r);
}

void Field::add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) {
    acc += a * b;
    return;
  }
  mpz_class r = acc.get_num();
  mpz_addmul(r.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  normalize(r);
  acc = r;
}

void Field::sub_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) {
    acc -= a * b;
    return;
  }
  mpz_class r = acc.get_num();
  mpz_submul(r.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  normalize(r);
  acc = r;
}

std::string Field::format(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return a.get_str();
  return a.get_num().get_str();
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  if (s.empty()) throw ParseError("empty scalar");
  Scalar q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad scalar '" + s + "'");
  if (q.get_den() == 0) throw ParseError("bad scalar '" + s + "'");
  return reduce(q);
}

std::string Field::name() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "F" + std::to_string(p_);
}

}  // namespace cofreyd
