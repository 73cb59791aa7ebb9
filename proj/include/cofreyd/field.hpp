#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cofreyd {

/// Exact scalar. Over a prime field the value is kept as an integer in [0,p).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a radical computation is requested in characteristic p <= dim.
class CharacteristicTooSmall : public Error {
 public:
  using Error::Error;
};

/// A structure that violates one of its defining axioms.
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static Field rationals();
  static Field prime(std::uint64_t p);

  /// Accepts "Q", "Fp:<p>", "F<p>" and "F_<p>".
  static Field parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar reduce(const Scalar& x) const;
  Scalar from_int(long v) const;
  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// acc += a*b
  void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const;
  /// acc -= a*b
  void sub_mul(Scalar& acc, const Scalar& a, const Scalar& b) const;

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  /// "a" or "a/b" over Q, an integer in [0,p) over F_p.
  std::string format(const Scalar& a) const;
  Scalar parse_scalar(std::string_view text) const;

  /// "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Field(Kind kind, std::uint64_t p);

  void normalize(mpz_class& z) const;

  Kind kind_;
  std::uint64_t p_;
  mpz_class pz_;
};

bool is_prime(std::uint64_t n);

void require_same_field(const Field& a, const Field& b, const char* where);

}  // namespace cofreyd
