#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace jacring {

/// An element of the coefficient field: a residue in [0, p) for a prime
/// field, or a rational in lowest terms with positive denominator.
class Coefficient {
 public:
  Coefficient() : value_(std::uint32_t{0}) {}

  static Coefficient modular(std::uint32_t residue) { return Coefficient(residue); }
  static Coefficient rational(mpq_class value) {
    value.canonicalize();
    return Coefficient(std::move(value));
  }

  bool is_modular() const noexcept { return value_.index() == 0; }
  std::uint32_t residue() const { return std::get<0>(value_); }
  const mpq_class& rational_value() const { return std::get<1>(value_); }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (a.is_modular()) return a.residue() == b.residue();
    return a.rational_value() == b.rational_value();
  }

 private:
  explicit Coefficient(std::uint32_t r) : value_(r) {}
  explicit Coefficient(mpq_class q) : value_(std::move(q)) {}

  std::variant<std::uint32_t, mpq_class> value_;
};

/// Arithmetic in F_p (p prime, p < 2^31) or in Q (characteristic 0).
class Field {
 public:
  /// Throws PreconditionError unless `characteristic` is 0 or a prime < 2^31.
  explicit Field(std::uint32_t characteristic);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  Coefficient zero() const;
  Coefficient one() const;
  Coefficient from_int(long long v) const;
  Coefficient from_integer(const mpz_class& v) const;
  /// num/den; throws PreconditionError if den vanishes in the field.
  Coefficient from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Coefficient& a) const;
  bool is_one(const Coefficient& a) const;

  Coefficient add(const Coefficient& a, const Coefficient& b) const;
  Coefficient sub(const Coefficient& a, const Coefficient& b) const;
  Coefficient neg(const Coefficient& a) const;
  Coefficient mul(const Coefficient& a, const Coefficient& b) const;
  /// Throws PreconditionError on zero.
  Coefficient inv(const Coefficient& a) const;
  Coefficient div(const Coefficient& a, const Coefficient& b) const;

  std::string to_string(const Coefficient& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace jacring
