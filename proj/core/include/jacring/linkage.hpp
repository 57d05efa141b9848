#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "jacring/ideal.hpp"
#include "jacring/polynomial.hpp"
#include "jacring/report.hpp"
#include "jacring/ring.hpp"

namespace jacring {

struct JacobianIdeal {
  Ideal ideal;
  int degree = 0;  // degree d of f
  /// Indices i with df/dx_i identically zero (cone-like input).
  std::vector<std::size_t> zero_partials;
  /// The characteristic divides d, so the Euler relation degenerates.
  bool characteristic_divides_degree = false;
};

/// (df/dx_0, ..., df/dx_n). Throws PreconditionError for f = 0 or deg f < 2.
JacobianIdeal jacobian_ideal(RingPtr ring, const Polynomial& f);

/// sigma = sum(d_i) - n - 1 for n + 1 degrees. Throws PreconditionError on a
/// wrong count or a degree below 1.
int socle_degree(std::span<const int> degrees, int n);

/// max(sigma, largest generator degree) + num_vars + 2.
int default_degree_bound(int sigma, int max_generator_degree, std::size_t num_vars);

/// An ideal I = (f_0, ..., f_n) with dim Proj(S/I) <= 0, together with a
/// regular sequence J = (f_1', ..., f_n') such that (f_0) + J = I.
struct QuasiCI {
  Ideal ideal_I;
  std::vector<int> degrees;     // of the generators of ideal_I, in input order
  std::size_t distinguished = 0;  // index of f_0 in ideal_I's generators
  Polynomial f0;
  Ideal cci_J;
  std::vector<int> cci_degrees;  // d_1, ..., d_n in the order of cci_J's generators
  /// 0 when the raw generators were already regular, else the successful
  /// random attempt (1-based).
  int attempts = 0;
  std::uint64_t seed = 0;

  int d0() const { return degrees.at(distinguished); }
  /// tau = d_1 + ... + d_n - n - 1
  int tau() const;
  /// sigma = tau + d_0
  int sigma() const { return tau() + d0(); }
};

/// Index of a generator of minimal degree (the first one on ties).
std::size_t default_distinguished(const Ideal& ideal);

inline constexpr int kMaxRecombinationAttempts = 32;

/// Makes the generators other than f_0 a regular sequence by replacing each
/// f_i with f_i + sum_j g_j f_j over earlier generators of degree <= d_i, with
/// g_j random forms drawn from a seeded stream. The raw generators are tried
/// first. Regularity is certified by krull_dim(S/J) = 1.
///
/// Throws PreconditionError if I does not have num_vars generators or
/// krull_dim(S/I) > 1, and Error after `max_attempts` failed draws.
QuasiCI extract_regular_sequence(const Ideal& ideal, std::size_t distinguished, std::uint64_t seed,
                                 int max_attempts = kMaxRecombinationAttempts);

/// Everything needed to check the duality statements for one instance.
struct LinkageData {
  QuasiCI quasi;
  Ideal i_sat;                 // I^s
  int saturation_iterations = 0;
  Ideal k_prime;               // K' = (J : I^s)
  int tau = 0;
  int sigma = 0;
  int bound = 0;
  GradedDims h0;               // dim (I^s / I)_k

  bool degenerate() const { return i_sat.is_unit(); }
};

/// h(k) = dim (S/I)_k - dim (S/I^s)_k for k = 0..bound. Throws Error when the
/// support reaches past `bound`.
GradedDims local_cohomology_h0(const Ideal& ideal, const Ideal& saturation, int bound);
GradedDims local_cohomology_h0(const QuasiCI& quasi, int bound);

struct SelfDuality {
  bool self_dual = true;
  /// Least k with h(k) != h(sigma - k).
  std::optional<int> witness;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// h(k) = h(sigma - k) for every integer k.
SelfDuality check_self_duality(const GradedDims& h, int sigma);

/// Computes I^s and K' = (J : I^s), then asserts (J : K') = I^s. Throws Error
/// with both reduced bases when the involution fails.
LinkageData linked_ideal(const QuasiCI& quasi, std::optional<int> bound = std::nullopt);

/// (J : (J : I^s)) = I^s as reduced bases.
CheckResult verify_linkage_involution(const LinkageData& link);

/// dim I_j - dim J_j = dim S_{j-d_0} - dim K'_{j-d_0} for j = 0..bound.
CheckResult verify_main_sequence(const LinkageData& link);

/// (J : f_0) ⊆ K', i.e. multiplication by f_0 embeds B[-d_0] into Hom_T(B, T).
CheckResult gherardelli_injectivity_check(const LinkageData& link);
/// Same containment against an arbitrary target ideal (negative controls).
CheckResult gherardelli_injectivity_check(const LinkageData& link, const Ideal& target);

/// degree(J) = degree(I^s) + degree(K'); skipped when I^s = (1).
CheckResult degree_additivity_check(const LinkageData& link);

/// Self-duality of h0 around sigma.
CheckResult self_duality_check(const LinkageData& link);

/// h0 vanishes outside [0, sigma].
CheckResult support_bound_check(const LinkageData& link);

/// Recombined sequence generates I together with f_0, and krull_dim(S/J) = 1.
CheckResult regular_sequence_check(const QuasiCI& quasi);

/// Gröbner dimensions of I, J, I^s and K' against the Macaulay-matrix oracle,
/// and the degreewise saturation of I against I^s, for k = 0..bound.
CheckResult oracle_agreement_check(const LinkageData& link);

struct PipelineOptions {
  std::optional<std::size_t> distinguished;
  std::uint64_t seed = 0;
  std::optional<int> bound;
  bool oracle = false;
  bool timings = false;
};

/// Either one hypersurface equation f (Jacobian mode) or n + 1 generators.
using PipelineInput = std::variant<Polynomial, std::vector<Polynomial>>;

/// Runs jacobian_ideal (for f), the dimension precondition, regular sequence
/// extraction, linkage, H^0, and every check. A stage that throws ends the run
/// and is recorded in `failure`; checks already done are kept.
VerificationReport full_report(RingPtr ring, const PipelineInput& input,
                               const PipelineOptions& options = {});

}  // namespace jacring
