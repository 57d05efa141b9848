#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jacring/polynomial.hpp"
#include "jacring/ring.hpp"

namespace jacring {

/// A reduced Gröbner basis: monic, auto-reduced, sorted by increasing
/// leading monomial. The empty basis is the zero ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingContext& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool is_zero_ideal() const noexcept { return elements_.empty(); }
  /// True iff the basis is {1}.
  bool is_unit() const noexcept {
    return elements_.size() == 1 && elements_.front().leading_monomial().is_one();
  }

  std::vector<Monomial> leading_monomials() const;

  /// Exact element-wise equality (ring compared structurally).
  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring_->same_ring(*b.ring_) && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

struct GroebnerOptions {
  /// Ignore S-pairs and generators above this degree. The result is then a
  /// Gröbner basis only up to that degree (valid for homogeneous input).
  std::optional<int> max_degree;
  /// Product and chain criteria. Turning them off must not change the result.
  bool use_criteria = true;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped = 0;
};

/// Buchberger's algorithm with the normal (lowest degree first) selection
/// strategy. Throws PreconditionError if every generator is zero.
GroebnerBasis reduced_groebner_basis(RingPtr ring, std::span<const Polynomial> generators,
                                     const GroebnerOptions& options = {},
                                     GroebnerStats* stats = nullptr);

/// Fully reduced remainder of f by `divisors` (first divisor in list order
/// wins at each step). With a Gröbner basis the result is unique.
Polynomial normal_form(const RingContext& ring, const Polynomial& f,
                       std::span<const Polynomial> divisors);

/// Throws RingMismatchError when f's monomials belong to another ring.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// (L / LT(f)) f - (L / LT(g)) g with L = lcm(LM f, LM g).
Polynomial s_polynomial(const RingContext& ring, const Polynomial& f, const Polynomial& g);

/// Every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

/// Monic, no term of any element divisible by another element's leading
/// monomial, sorted by increasing leading monomial.
bool is_reduced(const GroebnerBasis& basis);

}  // namespace jacring
