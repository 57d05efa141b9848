#include "jacring/groebner.hpp"

#include <algorithm>

#include "jacring/errors.hpp"

namespace jacring {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

namespace {

const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> divisors,
                               std::span<const char> active = {}) {
  for (std::size_t k = 0; k < divisors.size(); ++k) {
    if (!active.empty() && !active[k]) continue;
    const auto& g = divisors[k];
    if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

// Full reduction. `rescale` allows dividing out content after each step over Q,
// so the remainder is only determined up to a unit.
Polynomial reduce(const RingContext& ring, Polynomial p, std::span<const Polynomial> divisors,
                  std::span<const char> active, bool rescale) {
  const Field& field = ring.field();
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term lead = p.leading_term();
    const Polynomial* g = find_reducer(lead.monomial, divisors, active);
    if (g == nullptr) {
      remainder.push_back(lead);
      std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
      p = Polynomial::from_sorted_terms(std::move(rest));
      continue;
    }
    const Monomial cofactor = g->leading_monomial().cofactor_in(lead.monomial);
    if (rescale && field.is_rational()) {
      // lc(g) * p - lc(p) * m * g keeps integer coefficients integral.
      const Coefficient& lg = g->leading_coefficient();
      p = sub_mul_term(ring, scale(ring, p, lg), lead.coeff, cofactor, *g);
      for (auto& t : remainder) t.coeff = field.mul(t.coeff, lg);
      if (!p.is_zero()) {
        // Divide remainder and working polynomial by their joint content.
        std::vector<Term> all = remainder;
        all.insert(all.end(), p.terms().begin(), p.terms().end());
        const Polynomial joined = Polynomial::from_sorted_terms(all);
        const Polynomial prim = make_primitive(ring, joined);
        const Coefficient factor = field.div(prim.leading_coefficient(), joined.leading_coefficient());
        if (!field.is_one(factor)) {
          for (auto& t : remainder) t.coeff = field.mul(t.coeff, factor);
          p = scale(ring, p, factor);
        }
      }
    } else {
      p = sub_mul_term(ring, p, field.div(lead.coeff, g->leading_coefficient()), cofactor, *g);
    }
  }
  return Polynomial::from_sorted_terms(std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;  // j == kGenerator marks an input generator awaiting insertion
  Monomial lcm;
  std::uint32_t degree;
};

constexpr std::size_t kGenerator = static_cast<std::size_t>(-1);

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerOptions& options, GroebnerStats* stats)
      : ring_(std::move(ring)), options_(options), stats_(stats) {}

  GroebnerBasis run(std::span<const Polynomial> generators) {
    const RingContext& ring = *ring_;
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      inputs_.push_back(make_primitive(ring, g));
    }
    if (inputs_.empty()) throw PreconditionError("all generators are zero");
    for (std::size_t k = 0; k < inputs_.size(); ++k) {
      const auto& g = inputs_[k];
      queue_.push_back({k, kGenerator, g.leading_monomial(), ring.degree(g.leading_monomial())});
    }

    while (!queue_.empty()) {
      const std::size_t pick = select();
      const Pair pair = queue_[pick];
      queue_.erase(queue_.begin() + static_cast<std::ptrdiff_t>(pick));
      if (options_.max_degree && static_cast<int>(pair.degree) > *options_.max_degree) continue;

      Polynomial h = pair.j == kGenerator ? inputs_[pair.i] : spoly(basis_[pair.i], basis_[pair.j]);
      h = reduce(ring, std::move(h), basis_, active_, true);
      if (stats_ != nullptr) {
        ++stats_->pairs_reduced;
        if (h.is_zero()) ++stats_->zero_reductions;
      }
      if (h.is_zero()) continue;
      insert(make_primitive(ring, h));
      if (basis_.back().leading_monomial().is_one()) break;
    }
    return finish();
  }

 private:
  Polynomial spoly(const Polynomial& f, const Polynomial& g) const {
    const RingContext& ring = *ring_;
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    const Polynomial a = mul_term(ring, f, g.leading_coefficient(), f.leading_monomial().cofactor_in(l));
    return sub_mul_term(ring, a, f.leading_coefficient(), g.leading_monomial().cofactor_in(l), g);
  }

  // Lowest degree first, then smallest lcm, then oldest indices.
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue_.size(); ++k) {
      const Pair& a = queue_[k];
      const Pair& b = queue_[best];
      if (a.degree != b.degree) {
        if (a.degree < b.degree) best = k;
        continue;
      }
      const auto cmp = ring_->compare(a.lcm, b.lcm);
      if (cmp < 0 || (cmp == 0 && std::pair(a.i, a.j) < std::pair(b.i, b.j))) best = k;
    }
    return best;
  }

  // Gebauer-Moeller update.
  void insert(Polynomial h) {
    const std::size_t hi = basis_.size();
    const Monomial hm = h.leading_monomial();
    basis_.push_back(std::move(h));
    active_.push_back(1);

    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial l = lcm(hm, basis_[g].leading_monomial());
      fresh.push_back({g, hi, l, ring_->degree(l)});
    }

    if (!options_.use_criteria) {
      queue_.insert(queue_.end(), fresh.begin(), fresh.end());
      return;
    }

    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const Pair& p = fresh[k];
      const bool disjoint = coprime(hm, basis_[p.i].leading_monomial());
      bool dominated = false;
      if (!disjoint) {
        for (std::size_t q = k + 1; q < fresh.size() && !dominated; ++q) {
          dominated = fresh[q].lcm.divides(p.lcm);
        }
        for (const auto& q : kept) {
          if (dominated) break;
          dominated = q.lcm.divides(p.lcm);
        }
      }
      if (disjoint || !dominated) kept.push_back(p);
    }
    // Product criterion.
    std::size_t skipped = fresh.size();
    std::vector<Pair> accepted;
    for (const auto& p : kept) {
      if (!coprime(hm, basis_[p.i].leading_monomial())) accepted.push_back(p);
    }
    skipped -= accepted.size();

    // Old pairs made redundant by h.
    std::vector<Pair> survivors;
    for (const auto& p : queue_) {
      if (p.j == kGenerator) {
        survivors.push_back(p);
        continue;
      }
      const bool redundant = hm.divides(p.lcm) &&
                             lcm(basis_[p.i].leading_monomial(), hm) != p.lcm &&
                             lcm(basis_[p.j].leading_monomial(), hm) != p.lcm;
      if (redundant) {
        ++skipped;
      } else {
        survivors.push_back(p);
      }
    }
    survivors.insert(survivors.end(), accepted.begin(), accepted.end());
    queue_ = std::move(survivors);
    if (stats_ != nullptr) stats_->pairs_skipped += skipped;

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && hm.divides(basis_[g].leading_monomial())) active_[g] = 0;
    }
  }

  GroebnerBasis finish() const {
    const RingContext& ring = *ring_;
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k]) continue;
      const Monomial& m = basis_[k].leading_monomial();
      bool redundant = false;
      for (std::size_t q = 0; q < basis_.size() && !redundant; ++q) {
        if (q == k || !active_[q]) continue;
        const Monomial& other = basis_[q].leading_monomial();
        // Among equal leading monomials keep the first.
        redundant = other.divides(m) && (other != m || q < k);
      }
      if (!redundant) minimal.push_back(basis_[k]);
    }
    if (!minimal.empty() && std::any_of(minimal.begin(), minimal.end(), [](const Polynomial& p) {
          return p.leading_monomial().is_one();
        })) {
      return GroebnerBasis(ring_, {Polynomial::constant(ring, ring.field().one())});
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t q = 0; q < minimal.size(); ++q) {
        if (q != k) others.push_back(minimal[q]);
      }
      reduced.push_back(make_monic(ring, reduce(ring, minimal[k], others, {}, false)));
    }
    std::sort(reduced.begin(), reduced.end(), [&ring](const Polynomial& a, const Polynomial& b) {
      return ring.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return GroebnerBasis(ring_, std::move(reduced));
  }

  RingPtr ring_;
  GroebnerOptions options_;
  GroebnerStats* stats_;
  std::vector<Polynomial> inputs_;
  std::vector<Polynomial> basis_;
  std::vector<char> active_;
  std::vector<Pair> queue_;
};

}  // namespace

GroebnerBasis reduced_groebner_basis(RingPtr ring, std::span<const Polynomial> generators,
                                     const GroebnerOptions& options, GroebnerStats* stats) {
  for (const auto& g : generators) {
    for (const auto& t : g.terms()) {
      if (t.monomial.num_vars() != ring->num_vars()) {
        throw RingMismatchError("generator does not belong to the ring");
      }
    }
  }
  return Buchberger(std::move(ring), options, stats).run(generators);
}

Polynomial normal_form(const RingContext& ring, const Polynomial& f,
                       std::span<const Polynomial> divisors) {
  return reduce(ring, f, divisors, {}, false);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  for (const auto& t : f.terms()) {
    if (t.monomial.num_vars() != basis.ring().num_vars()) {
      throw RingMismatchError("polynomial does not belong to the basis ring");
    }
  }
  return normal_form(basis.ring(), f, basis.elements());
}

Polynomial s_polynomial(const RingContext& ring, const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const Field& field = ring.field();
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial a = mul_term(ring, f, field.inv(f.leading_coefficient()),
                                f.leading_monomial().cofactor_in(l));
  return sub_mul_term(ring, a, field.inv(g.leading_coefficient()),
                      g.leading_monomial().cofactor_in(l), g);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& elems = basis.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const Polynomial s = s_polynomial(basis.ring(), elems[i], elems[j]);
      if (!normal_form(basis.ring(), s, elems).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& basis) {
  const RingContext& ring = basis.ring();
  const auto& elems = basis.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].is_zero() || !ring.field().is_one(elems[i].leading_coefficient())) return false;
    if (i > 0 && ring.compare(elems[i - 1].leading_monomial(), elems[i].leading_monomial()) >= 0) {
      return false;
    }
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : elems[i].terms()) {
        if (elems[j].leading_monomial().divides(t.monomial)) return false;
      }
    }
  }
  return true;
}

}  // namespace jacring
