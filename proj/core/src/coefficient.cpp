#include "jacring/coefficient.hpp"

#include <limits>

#include "jacring/errors.hpp"

namespace jacring {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t reduce_signed(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && (p_ >= (1U << 31) || !is_prime(p_))) {
    throw PreconditionError("characteristic must be 0 or a prime below 2^31, got " +
                            std::to_string(p_));
  }
}

Coefficient Field::zero() const { return from_int(0); }
Coefficient Field::one() const { return from_int(1); }

Coefficient Field::from_int(long long v) const {
  if (p_ == 0) return Coefficient::rational(mpq_class(mpz_class(static_cast<long>(v))));
  return Coefficient::modular(reduce_signed(v, p_));
}

Coefficient Field::from_integer(const mpz_class& v) const {
  if (p_ == 0) return Coefficient::rational(mpq_class(v));
  return Coefficient::modular(reduce_mpz(v, p_));
}

Coefficient Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (p_ == 0) {
    if (den == 0) throw PreconditionError("zero denominator");
    return Coefficient::rational(mpq_class(num, den));
  }
  const std::uint32_t d = reduce_mpz(den, p_);
  if (d == 0) {
    throw PreconditionError("denominator " + den.get_str() + " is not invertible mod " +
                            std::to_string(p_));
  }
  return mul(Coefficient::modular(reduce_mpz(num, p_)), inv(Coefficient::modular(d)));
}

bool Field::is_zero(const Coefficient& a) const {
  if (p_ == 0) return sgn(a.rational_value()) == 0;
  return a.residue() == 0;
}

bool Field::is_one(const Coefficient& a) const {
  if (p_ == 0) return a.rational_value() == 1;
  return a.residue() == 1;
}

Coefficient Field::add(const Coefficient& a, const Coefficient& b) const {
  if (p_ == 0) return Coefficient::rational(a.rational_value() + b.rational_value());
  std::uint32_t s = a.residue() + b.residue();
  if (s >= p_) s -= p_;
  return Coefficient::modular(s);
}

Coefficient Field::sub(const Coefficient& a, const Coefficient& b) const {
  if (p_ == 0) return Coefficient::rational(a.rational_value() - b.rational_value());
  return Coefficient::modular(a.residue() >= b.residue() ? a.residue() - b.residue()
                                                         : a.residue() + p_ - b.residue());
}

Coefficient Field::neg(const Coefficient& a) const {
  if (p_ == 0) return Coefficient::rational(-a.rational_value());
  return Coefficient::modular(a.residue() == 0 ? 0 : p_ - a.residue());
}

Coefficient Field::mul(const Coefficient& a, const Coefficient& b) const {
  if (p_ == 0) return Coefficient::rational(a.rational_value() * b.rational_value());
  return Coefficient::modular(static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(a.residue()) * b.residue() % p_));
}

Coefficient Field::inv(const Coefficient& a) const {
  if (is_zero(a)) throw PreconditionError("inverse of zero");
  if (p_ == 0) return Coefficient::rational(1 / a.rational_value());
  return Coefficient::modular(pow_mod(a.residue(), p_ - 2, p_));
}

Coefficient Field::div(const Coefficient& a, const Coefficient& b) const {
  return mul(a, inv(b));
}

std::string Field::to_string(const Coefficient& a) const {
  if (p_ == 0) return a.rational_value().get_str();
  // Print residues in the symmetric range so that -1 reads as -1, not p-1.
  const std::uint32_t r = a.residue();
  if (r > p_ / 2) return "-" + std::to_string(p_ - r);
  return std::to_string(r);
}

}  // namespace jacring
