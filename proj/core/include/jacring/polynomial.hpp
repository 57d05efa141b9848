#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jacring/coefficient.hpp"
#include "jacring/monomial.hpp"
#include "jacring/ring.hpp"

namespace jacring {

struct Term {
  Coefficient coeff;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A homogeneous polynomial: terms strictly descending in the ring order,
/// no zero coefficients. The zero polynomial has no terms and degree -1.
///
/// A Polynomial does not remember its ring; every operation that needs the
/// order or the field takes the RingContext explicitly.
class Polynomial {
 public:
  Polynomial() = default;

  /// Builds from arbitrary terms: sorts, merges equal monomials and drops
  /// zeros. Throws NonHomogeneousError on mixed degrees.
  static Polynomial from_terms(const RingContext& ring, std::vector<Term> terms);

  /// Takes ownership of terms that already satisfy every invariant.
  static Polynomial from_sorted_terms(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(const RingContext& ring, const Coefficient& c);
  static Polynomial monomial(const RingContext& ring, const Monomial& m);
  static Polynomial variable(const RingContext& ring, std::size_t i);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Coefficient& leading_coefficient() const { return terms_.front().coeff; }

  /// Weighted degree under `ring`, -1 for zero.
  int degree(const RingContext& ring) const {
    return terms_.empty() ? -1 : static_cast<int>(ring.degree(terms_.front().monomial));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

Polynomial add(const RingContext& ring, const Polynomial& f, const Polynomial& g);
Polynomial sub(const RingContext& ring, const Polynomial& f, const Polynomial& g);
Polynomial negate(const RingContext& ring, const Polynomial& f);
Polynomial scale(const RingContext& ring, const Polynomial& f, const Coefficient& c);
/// c * m * f
Polynomial mul_term(const RingContext& ring, const Polynomial& f, const Coefficient& c,
                    const Monomial& m);
Polynomial mul(const RingContext& ring, const Polynomial& f, const Polynomial& g);
Polynomial pow(const RingContext& ring, const Polynomial& f, unsigned exponent);

/// f - c*m*g in one merge pass.
Polynomial sub_mul_term(const RingContext& ring, const Polynomial& f, const Coefficient& c,
                        const Monomial& m, const Polynomial& g);

/// Leading coefficient 1. Zero stays zero.
Polynomial make_monic(const RingContext& ring, const Polynomial& f);

/// Over Q: integer coefficients with gcd 1 and positive leading coefficient.
/// Over F_p: same as make_monic.
Polynomial make_primitive(const RingContext& ring, const Polynomial& f);

/// d f / d x_i. Throws PreconditionError if i is out of range.
Polynomial partial_derivative(const RingContext& ring, const Polynomial& f, std::size_t i);

/// Exact quotient f / g; throws PreconditionError if g does not divide f.
Polynomial exact_divide(const RingContext& ring, const Polynomial& f, const Polynomial& g);

/// Re-expresses `f` from ring `from` in ring `to`, mapping variable i of
/// `from` to variable var_map[i] of `to`.
Polynomial map_variables(const RingContext& from, const RingContext& to, const Polynomial& f,
                         const std::vector<std::size_t>& var_map);

/// Canonical text in the input grammar, e.g. "x^3 - 2*y^2*z".
std::string to_string(const RingContext& ring, const Polynomial& f);
std::string to_string(const RingContext& ring, const Monomial& m);

}  // namespace jacring
