#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "jacring/polynomial.hpp"
#include "jacring/ring.hpp"

namespace jacring {

/// Rows are the coefficient vectors of m*g for every generator g and every
/// monomial m with deg(m*g) = degree; columns are the degree-`degree`
/// monomials in descending ring order. The row space is I_degree.
struct MacaulayMatrix {
  int degree = 0;
  std::vector<Monomial> columns;
  std::vector<std::vector<Coefficient>> rows;
};

MacaulayMatrix macaulay_matrix(const RingContext& ring, std::span<const Polynomial> generators,
                               int degree);

/// Rank by plain elimination over F_p, fraction-free (Bareiss) over Q.
std::int64_t matrix_rank(const Field& field, const MacaulayMatrix& matrix);

/// dim I_k for I = (generators).
std::int64_t macaulay_dim(const RingContext& ring, std::span<const Polynomial> generators, int k);

/// dim (I^s)_k without Gröbner bases: f in S_k is in the saturation iff
/// x_i^N f in I_{k+N} for all i and large N. N starts at max(0, bound - k) and
/// grows until two consecutive answers agree; throws Error if k + N passes
/// bound + num_vars first.
std::int64_t degreewise_saturation_dim(const RingContext& ring,
                                       std::span<const Polynomial> generators, int k, int bound);

/// Caches the echelon forms of I_D across queries on one generator set.
/// Not thread-safe; use one instance per thread.
class MacaulayOracle {
 public:
  MacaulayOracle(RingPtr ring, std::vector<Polynomial> generators);
  ~MacaulayOracle();
  MacaulayOracle(MacaulayOracle&&) noexcept;
  MacaulayOracle& operator=(MacaulayOracle&&) noexcept;

  /// dim I_k
  std::int64_t ideal_dim(int k);
  /// dim (S/I)_k
  std::int64_t quotient_dim(int k);
  /// dim (I^s)_k, see degreewise_saturation_dim.
  std::int64_t saturation_dim(int k, int bound);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace jacring
