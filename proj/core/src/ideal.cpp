#include "jacring/ideal.hpp"

#include <algorithm>

#include "jacring/errors.hpp"

namespace jacring {

namespace {

void check_members(const RingContext& ring, std::span<const Polynomial> polys) {
  for (const auto& p : polys) {
    for (const auto& t : p.terms()) {
      if (t.monomial.num_vars() != ring.num_vars()) {
        throw RingMismatchError("generator does not belong to the ring");
      }
    }
  }
}

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!a.ring().same_ring(b.ring())) throw RingMismatchError("ideals live in different rings");
}

// Drops the eliminated variable 0 of `from`; requires it not to occur.
Polynomial drop_first_variable(const RingContext& from, const RingContext& to, const Polynomial& f) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(to.num_vars());
    for (std::size_t i = 1; i < from.num_vars(); ++i) m.set(i - 1, t.monomial[i]);
    out.push_back({t.coeff, m});
  }
  // The elimination order restricted to t-free monomials is the base order.
  return Polynomial::from_sorted_terms(std::move(out));
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  check_members(*ring_, generators_);
}

Ideal Ideal::unit(RingPtr ring) {
  const RingContext& r = *ring;
  return Ideal(std::move(ring), {Polynomial::constant(r, r.field().one())});
}

Ideal Ideal::irrelevant(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) vars.push_back(Polynomial::variable(*ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

Ideal Ideal::from_basis(GroebnerBasis basis) {
  Ideal ideal(basis.ring_ptr(), basis.elements());
  std::call_once(ideal.cache_->once, [&] { ideal.cache_->basis.emplace(std::move(basis)); });
  return ideal;
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] {
    const bool all_zero = std::all_of(generators_.begin(), generators_.end(),
                                      [](const Polynomial& p) { return p.is_zero(); });
    if (all_zero) {
      cache_->basis.emplace(ring_, std::vector<Polynomial>{});
    } else {
      cache_->basis.emplace(reduced_groebner_basis(ring_, generators_));
    }
  });
  return *cache_->basis;
}

bool Ideal::contains(const Polynomial& f) const {
  return normal_form(f, groebner()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  check_same_ring(*this, other);
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [this](const Polynomial& g) { return contains(g); });
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring_ptr());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;

  const RingContext& base = a.ring();
  const RingPtr elim = RingContext::make_elimination(base, "_t");
  std::vector<std::size_t> shift(base.num_vars());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
  const Monomial t = elim->variable(0);
  const Field& field = elim->field();

  std::vector<Polynomial> gens;
  for (const auto& f : a.groebner().elements()) {
    gens.push_back(mul_term(*elim, map_variables(base, *elim, f, shift), field.one(), t));
  }
  for (const auto& g : b.groebner().elements()) {
    const Polynomial lifted = map_variables(base, *elim, g, shift);
    gens.push_back(sub_mul_term(*elim, lifted, field.one(), t, lifted));
  }
  const GroebnerBasis gb = reduced_groebner_basis(elim, gens);

  std::vector<Polynomial> result;
  for (const auto& g : gb.elements()) {
    if (g.leading_monomial()[0] == 0) result.push_back(drop_first_variable(*elim, base, g));
  }
  return Ideal::from_basis(GroebnerBasis(a.ring_ptr(), std::move(result)));
}

Ideal colon(const Ideal& ideal, const Polynomial& g) {
  const RingContext& ring = ideal.ring();
  check_members(ring, std::span(&g, 1));
  if (g.is_zero()) throw PreconditionError("colon by the zero polynomial");
  if (ideal.is_unit() || ideal.contains(g)) return Ideal::unit(ideal.ring_ptr());
  if (ideal.is_zero() || g.degree(ring) == 0) return ideal;

  const Ideal meet = intersect(ideal, Ideal(ideal.ring_ptr(), {g}));
  std::vector<Polynomial> quotients;
  for (const auto& h : meet.groebner().elements()) quotients.push_back(exact_divide(ring, h, g));
  return Ideal(ideal.ring_ptr(), std::move(quotients));
}

Ideal colon(const Ideal& ideal, const Ideal& divisor) {
  check_same_ring(ideal, divisor);
  if (divisor.is_zero()) throw PreconditionError("colon by the zero ideal");
  if (divisor.is_unit()) return ideal;
  std::optional<Ideal> acc;
  for (const auto& g : divisor.generators()) {
    if (g.is_zero()) continue;
    Ideal part = colon(ideal, g);
    acc = acc ? intersect(*acc, part) : std::move(part);
  }
  return *acc;
}

SaturationResult saturate(const Ideal& ideal) {
  if (ideal.is_unit()) return {ideal, 0, true};
  const Ideal irrelevant = Ideal::irrelevant(ideal.ring_ptr());
  Ideal current = ideal;
  int iterations = 0;
  for (;;) {
    Ideal next = colon(current, irrelevant);
    if (ideal_equal(next, current)) break;
    current = std::move(next);
    ++iterations;
  }
  return {current, iterations, false};
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  return a.groebner().elements() == b.groebner().elements();
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace {

using Series = std::vector<std::int64_t>;

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series add_series(const Series& a, const Series& b) {
  Series r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

// s * (1 - t^d)
Series times_one_minus(const Series& s, std::size_t d) {
  Series r(s.size() + d, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    r[i] += s[i];
    r[i + d] -= s[i];
  }
  trim(r);
  return r;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    const bool redundant =
        std::any_of(out.begin(), out.end(), [&m](const Monomial& d) { return d.divides(m); });
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

std::size_t support_size(const Monomial& m) {
  std::size_t s = 0;
  for (auto e : m.exponents()) s += e != 0 ? 1 : 0;
  return s;
}

}  // namespace

std::vector<std::int64_t> monomial_hilbert_numerator(std::vector<Monomial> gens,
                                                     std::size_t num_vars) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  // Pivot on the most frequent variable of some mixed generator.
  std::vector<std::size_t> counts(num_vars, 0);
  bool mixed = false;
  for (const auto& m : gens) {
    if (support_size(m) >= 2) mixed = true;
    for (std::size_t i = 0; i < num_vars; ++i) counts[i] += m[i] != 0 ? 1 : 0;
  }
  if (!mixed) {
    // Pure powers of distinct variables: a complete intersection.
    Series r{1};
    for (const auto& m : gens) r = times_one_minus(r, m.degree());
    return r;
  }
  std::size_t pivot = num_vars;
  for (const auto& m : gens) {
    if (support_size(m) < 2) continue;
    for (std::size_t i = 0; i < num_vars; ++i) {
      if (m[i] != 0 && (pivot == num_vars || counts[i] > counts[pivot])) pivot = i;
    }
  }

  std::vector<Monomial> with_pivot;
  std::vector<Monomial> quotient;
  Monomial x(num_vars);
  x.set(pivot, 1);
  with_pivot.push_back(x);
  for (const auto& m : gens) {
    if (m[pivot] == 0) with_pivot.push_back(m);
    Monomial q = m;
    if (q[pivot] > 0) q.set(pivot, static_cast<Monomial::Exponent>(q[pivot] - 1));
    quotient.push_back(q);
  }
  const Series left = monomial_hilbert_numerator(std::move(with_pivot), num_vars);
  Series right = monomial_hilbert_numerator(std::move(quotient), num_vars);
  right.insert(right.begin(), 0);  // times t
  return add_series(left, right);
}

HilbertSeries::HilbertSeries(std::vector<std::int64_t> numerator, std::size_t num_vars)
    : numerator_(std::move(numerator)), num_vars_(num_vars) {
  trim(numerator_);
}

std::int64_t HilbertSeries::dimension(int k) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < numerator_.size() && static_cast<int>(i) <= k; ++i) {
    total += numerator_[i] * monomial_count(num_vars_, k - static_cast<int>(i));
  }
  return total;
}

namespace {

// Strips factors (1 - t); returns the count and the cofactor.
std::pair<int, Series> strip_one_minus_t(Series s) {
  int m = 0;
  for (;;) {
    std::int64_t at_one = 0;
    for (auto c : s) at_one += c;
    if (at_one != 0 || s.empty()) return {m, s};
    // Synthetic division by (1 - t).
    Series q(s.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      acc += s[i];
      q[i] = acc;
    }
    trim(q);
    s = std::move(q);
    ++m;
  }
}

}  // namespace

int HilbertSeries::krull_dim() const {
  if (numerator_.empty()) throw PreconditionError("Krull dimension of the unit ideal");
  const auto [m, rest] = strip_one_minus_t(numerator_);
  return static_cast<int>(num_vars_) - m;
}

std::int64_t HilbertSeries::multiplicity() const {
  if (numerator_.empty()) throw PreconditionError("multiplicity of the unit ideal");
  const auto [m, rest] = strip_one_minus_t(numerator_);
  std::int64_t total = 0;
  for (auto c : rest) total += c;
  return total;
}

HilbertSeries hilbert_series(const Ideal& ideal) {
  if (ideal.ring().is_elimination()) {
    throw PreconditionError("Hilbert series needs the standard grading");
  }
  return HilbertSeries(monomial_hilbert_numerator(ideal.groebner().leading_monomials(),
                                                  ideal.ring().num_vars()),
                       ideal.ring().num_vars());
}

std::int64_t hilbert_function(const Ideal& ideal, int k) {
  return hilbert_series(ideal).dimension(k);
}

int krull_dim(const Ideal& ideal) { return hilbert_series(ideal).krull_dim(); }

std::int64_t degree_of(const Ideal& ideal) {
  const int dim = krull_dim(ideal);
  if (dim != 1) {
    throw PreconditionError("degree_of needs a zero-dimensional projective scheme, got Krull dimension " +
                            std::to_string(dim));
  }
  return hilbert_series(saturate(ideal).ideal).multiplicity();
}

std::int64_t GradedDims::at(int k) const {
  if (k < 0) return 0;
  if (const auto it = table.find(k); it != table.end()) return it->second;
  if (k > bound && eventually_constant) return *eventually_constant;
  throw PreconditionError("degree " + std::to_string(k) + " outside the computed table");
}

GradedDims hilbert_table(const Ideal& ideal, int bound) {
  const HilbertSeries hs = hilbert_series(ideal);
  GradedDims dims;
  dims.bound = bound;
  for (int k = 0; k <= bound; ++k) dims.table[k] = hs.dimension(k);
  if (hs.numerator().empty()) {
    dims.eventually_constant = 0;
  } else if (static_cast<std::size_t>(bound) >= hs.numerator().size()) {
    const int dim = hs.krull_dim();
    if (dim == 0) dims.eventually_constant = 0;
    if (dim == 1) dims.eventually_constant = hs.multiplicity();
  }
  return dims;
}

}  // namespace jacring
