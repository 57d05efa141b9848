#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "jacring/groebner.hpp"
#include "jacring/polynomial.hpp"
#include "jacring/ring.hpp"

namespace jacring {

/// A homogeneous ideal given by generators, with a lazily computed reduced
/// Gröbner basis. Copies share the cache; the cache is filled at most once and
/// concurrent first readers block until it is ready.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// The irrelevant ideal S_+ = (x_0, ..., x_n).
  static Ideal irrelevant(RingPtr ring);
  /// Wraps a known reduced basis; the cache is pre-filled.
  static Ideal from_basis(GroebnerBasis basis);

  const RingContext& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  const GroebnerBasis& groebner() const;

  bool is_zero() const { return groebner().is_zero_ideal(); }
  bool is_unit() const { return groebner().is_unit(); }
  bool contains(const Polynomial& f) const;
  /// other ⊆ *this
  bool contains(const Ideal& other) const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Generated by the union of generators. Throws RingMismatchError.
Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// a ∩ b via elimination of an auxiliary weight-0 variable t from
/// t*a + (1 - t)*b.
Ideal intersect(const Ideal& a, const Ideal& b);

/// (I : g) = (I ∩ (g)) / g. Throws PreconditionError if g = 0.
Ideal colon(const Ideal& ideal, const Polynomial& g);

/// (I : J) as the intersection of (I : g) over the generators g of J.
/// Throws PreconditionError if J = 0.
Ideal colon(const Ideal& ideal, const Ideal& divisor);

struct SaturationResult {
  Ideal ideal;
  /// Number of colon steps that changed the ideal.
  int iterations = 0;
  /// The input was the unit ideal and is returned unchanged.
  bool input_was_unit = false;
};

/// I^s = union of (I : S_+^i), by iterating I <- (I : S_+) until the reduced
/// basis stops changing.
SaturationResult saturate(const Ideal& ideal);

/// Reduced Gröbner bases coincide.
bool ideal_equal(const Ideal& a, const Ideal& b);

/// The numerator N(t) of the Hilbert series of S/I, whose denominator is
/// (1 - t)^num_vars.
class HilbertSeries {
 public:
  HilbertSeries(std::vector<std::int64_t> numerator, std::size_t num_vars);

  const std::vector<std::int64_t>& numerator() const noexcept { return numerator_; }
  std::size_t num_vars() const noexcept { return num_vars_; }

  /// dim (S/I)_k.
  std::int64_t dimension(int k) const;
  /// Krull dimension of S/I; throws PreconditionError for the unit ideal.
  int krull_dim() const;
  /// Leading coefficient of the Hilbert polynomial times (dim - 1)!, i.e. the
  /// value of N(t) / (1 - t)^(num_vars - dim) at t = 1.
  std::int64_t multiplicity() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  std::vector<std::int64_t> numerator_;
  std::size_t num_vars_;
};

/// Hilbert series numerator of a monomial ideal in `num_vars` variables, by
/// recursive pivot splitting N(M) = N(M + (x)) + t * N(M : x).
std::vector<std::int64_t> monomial_hilbert_numerator(std::vector<Monomial> generators,
                                                     std::size_t num_vars);

HilbertSeries hilbert_series(const Ideal& ideal);
std::int64_t hilbert_function(const Ideal& ideal, int k);
int krull_dim(const Ideal& ideal);

/// Degree of the zero-dimensional projective scheme defined by I: the stable
/// value of the Hilbert function of the saturation. Throws PreconditionError
/// unless krull_dim(S/I) = 1.
std::int64_t degree_of(const Ideal& ideal);

/// Hilbert function of a graded module as a finite table.
struct GradedDims {
  std::map<int, std::int64_t> table;
  int bound = 0;
  /// Value for every degree above `bound`, when known.
  std::optional<std::int64_t> eventually_constant;

  std::int64_t at(int k) const;

  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// dim (S/I)_k for k = 0..bound.
GradedDims hilbert_table(const Ideal& ideal, int bound);

}  // namespace jacring
