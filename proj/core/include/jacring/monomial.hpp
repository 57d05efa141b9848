#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "jacring/errors.hpp"

namespace jacring {

/// Upper limit on the number of ring variables, including the auxiliary
/// variable used for elimination.
inline constexpr std::size_t kMaxVariables = 16;

/// A power product x_0^e_0 ... x_{n}^e_n with dense, inline exponent storage.
/// The cached degree is the plain exponent sum.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  /// The monomial 1 in `num_vars` variables.
  explicit Monomial(std::size_t num_vars) : num_vars_(checked_count(num_vars)) {}

  Monomial(std::span<const int> exponents) : num_vars_(checked_count(exponents.size())) {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] < 0 || exponents[i] > 0xFFFF) {
        throw PreconditionError("exponent out of range");
      }
      exps_[i] = static_cast<Exponent>(exponents[i]);
      degree_ += static_cast<std::uint32_t>(exponents[i]);
    }
  }

  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), num_vars_}; }

  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, Exponent e) noexcept {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    Monomial r = a;
    for (std::size_t i = 0; i < a.num_vars_; ++i) r.exps_[i] += b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const noexcept {
    Monomial r = other;
    for (std::size_t i = 0; i < num_vars_; ++i) r.exps_[i] -= exps_[i];
    r.degree_ = other.degree_ - degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r(a.num_vars_);
    for (std::size_t i = 0; i < a.num_vars_; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
    Monomial r(a.num_vars_);
    for (std::size_t i = 0; i < a.num_vars_; ++i) {
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.num_vars_; ++i) {
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.num_vars_ == b.num_vars_ && a.exps_ == b.exps_;
  }

 private:
  static std::uint8_t checked_count(std::size_t n) {
    if (n > kMaxVariables) throw PreconditionError("too many variables");
    return static_cast<std::uint8_t>(n);
  }

  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t num_vars_ = 0;
};

}  // namespace jacring
