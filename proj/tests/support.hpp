#pragma once

#include <random>
#include <string>
#include <vector>

#include "jacring/ideal.hpp"
#include "jacring/parser.hpp"
#include "jacring/polynomial.hpp"
#include "jacring/ring.hpp"

namespace jacring::testing {

inline constexpr std::uint32_t kP = 32003;

inline RingPtr ring_of(const std::vector<std::string>& vars, std::uint32_t p = kP,
                       MonomialOrder order = MonomialOrder::Grevlex) {
  return RingContext::make(vars, p, order);
}

inline RingPtr xyz(std::uint32_t p = kP) { return ring_of({"x", "y", "z"}, p); }
inline RingPtr xyzw(std::uint32_t p = kP) { return ring_of({"x", "y", "z", "w"}, p); }

inline Polynomial poly(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(text, *ring, /*allow_zero=*/true);
}

inline std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(ring, t));
  return out;
}

inline Ideal ideal(const RingPtr& ring, const std::vector<std::string>& texts) {
  return Ideal(ring, polys(ring, texts));
}

inline Coefficient random_coefficient(const RingContext& ring, std::mt19937_64& rng, int range = 50) {
  const long long v = static_cast<long long>(rng() % (2 * range + 1)) - range;
  return ring.field().from_int(v);
}

/// A random form of the given degree with about `density` of all monomials.
inline Polynomial random_form(const RingContext& ring, int degree, std::mt19937_64& rng,
                              double density = 0.6, int range = 50) {
  std::vector<Term> terms;
  std::bernoulli_distribution keep(density);
  for (const auto& m : ring.monomials_of_degree(degree)) {
    if (keep(rng)) terms.push_back({random_coefficient(ring, rng, range), m});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

inline Polynomial random_nonzero_form(const RingContext& ring, int degree, std::mt19937_64& rng,
                                      double density = 0.6) {
  for (;;) {
    Polynomial f = random_form(ring, degree, rng, density);
    if (!f.is_zero()) return f;
  }
}

/// Generators of a random homogeneous ideal in 2 or 3 variables with degrees
/// at most 4, as used by the Buchberger property suites.
struct RandomIdeal {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

inline RandomIdeal random_ideal(std::mt19937_64& rng, std::uint32_t p = kP) {
  const std::size_t nv = 2 + rng() % 2;
  RingPtr ring = nv == 2 ? ring_of({"x", "y"}, p) : xyz(p);
  const std::size_t count = 1 + rng() % 4;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < count; ++i) {
    const int d = 1 + static_cast<int>(rng() % 4);
    gens.push_back(random_nonzero_form(*ring, d, rng, 0.5));
  }
  return {ring, gens};
}

inline std::vector<std::string> basis_strings(const Ideal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.groebner().elements()) out.push_back(to_string(i.ring(), g));
  return out;
}

}  // namespace jacring::testing
