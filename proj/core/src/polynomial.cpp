#include "jacring/polynomial.hpp"

#include <algorithm>

#include "jacring/errors.hpp"

namespace jacring {

namespace {

void require_same_degree(const RingContext& ring, const Polynomial& f, const Polynomial& g) {
  if (!f.is_zero() && !g.is_zero() && f.degree(ring) != g.degree(ring)) {
    throw NonHomogeneousError("sum of forms of degree " + std::to_string(f.degree(ring)) +
                              " and " + std::to_string(g.degree(ring)));
  }
}

// f + sign*g, both sorted descending.
Polynomial merge(const RingContext& ring, const Polynomial& f, const Polynomial& g, bool negate_g) {
  require_same_degree(ring, f, g);
  const Field& field = ring.field();
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const auto cmp = ring.compare(a[i].monomial, b[j].monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({negate_g ? field.neg(b[j].coeff) : b[j].coeff, b[j].monomial});
      ++j;
    } else {
      Coefficient c = negate_g ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (!field.is_zero(c)) out.push_back({std::move(c), a[i].monomial});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({negate_g ? field.neg(b[j].coeff) : b[j].coeff, b[j].monomial});
  return Polynomial::from_sorted_terms(std::move(out));
}

}  // namespace

Polynomial Polynomial::from_terms(const RingContext& ring, std::vector<Term> terms) {
  const Field& field = ring.field();
  std::sort(terms.begin(), terms.end(), [&ring](const Term& a, const Term& b) {
    return ring.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (t.monomial.num_vars() != ring.num_vars()) {
      throw RingMismatchError("monomial has the wrong number of variables");
    }
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
      if (field.is_zero(out.back().coeff)) out.pop_back();
    } else if (!field.is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  if (!out.empty()) {
    const auto d = ring.degree(out.front().monomial);
    for (const auto& t : out) {
      if (ring.degree(t.monomial) != d) throw NonHomogeneousError("polynomial is not homogeneous");
    }
  }
  return from_sorted_terms(std::move(out));
}

Polynomial Polynomial::constant(const RingContext& ring, const Coefficient& c) {
  return from_terms(ring, {Term{c, ring.one()}});
}

Polynomial Polynomial::monomial(const RingContext& ring, const Monomial& m) {
  return from_sorted_terms({Term{ring.field().one(), m}});
}

Polynomial Polynomial::variable(const RingContext& ring, std::size_t i) {
  return monomial(ring, ring.variable(i));
}

Polynomial add(const RingContext& ring, const Polynomial& f, const Polynomial& g) {
  return merge(ring, f, g, false);
}

Polynomial sub(const RingContext& ring, const Polynomial& f, const Polynomial& g) {
  return merge(ring, f, g, true);
}

Polynomial negate(const RingContext& ring, const Polynomial& f) {
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.coeff = ring.field().neg(t.coeff);
  return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial scale(const RingContext& ring, const Polynomial& f, const Coefficient& c) {
  return mul_term(ring, f, c, ring.one());
}

Polynomial mul_term(const RingContext& ring, const Polynomial& f, const Coefficient& c,
                    const Monomial& m) {
  const Field& field = ring.field();
  if (field.is_zero(c)) return {};
  std::vector<Term> out;
  out.reserve(f.size());
  const bool unit = field.is_one(c);
  // Multiplication by a monomial preserves the order, so no re-sort.
  for (const auto& t : f.terms()) {
    out.push_back({unit ? t.coeff : field.mul(t.coeff, c), t.monomial * m});
  }
  return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial sub_mul_term(const RingContext& ring, const Polynomial& f, const Coefficient& c,
                        const Monomial& m, const Polynomial& g) {
  const Field& field = ring.field();
  const auto& a = f.terms();
  const auto& b = g.terms();
  if (!a.empty() && !b.empty() && ring.degree(a.front().monomial) != ring.degree(b.front().monomial * m)) {
    throw NonHomogeneousError("sum of forms of different degree");
  }
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].monomial * m;
    const auto cmp = ring.compare(a[i].monomial, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({field.neg(field.mul(c, b[j].coeff)), bm});
      ++j;
    } else {
      Coefficient v = field.sub(a[i].coeff, field.mul(c, b[j].coeff));
      if (!field.is_zero(v)) out.push_back({std::move(v), a[i].monomial});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({field.neg(field.mul(c, b[j].coeff)), b[j].monomial * m});
  return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial mul(const RingContext& ring, const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  const Field& field = ring.field();
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      terms.push_back({field.mul(a.coeff, b.coeff), a.monomial * b.monomial});
    }
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial pow(const RingContext& ring, const Polynomial& f, unsigned exponent) {
  Polynomial result = Polynomial::constant(ring, ring.field().one());
  Polynomial base = f;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(ring, result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(ring, base, base);
  }
  return result;
}

Polynomial make_monic(const RingContext& ring, const Polynomial& f) {
  if (f.is_zero() || ring.field().is_one(f.leading_coefficient())) return f;
  return scale(ring, f, ring.field().inv(f.leading_coefficient()));
}

Polynomial make_primitive(const RingContext& ring, const Polynomial& f) {
  const Field& field = ring.field();
  if (!field.is_rational() || f.is_zero()) return make_monic(ring, f);
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : f.terms()) {
    const mpq_class& q = t.coeff.rational_value();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(f.leading_coefficient().rational_value()) < 0) factor = -factor;
  if (factor == 1) return f;
  return scale(ring, f, Coefficient::rational(factor));
}

Polynomial partial_derivative(const RingContext& ring, const Polynomial& f, std::size_t i) {
  if (i >= ring.num_vars()) throw PreconditionError("derivative index out of range");
  const Field& field = ring.field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const auto e = t.monomial[i];
    if (e == 0) continue;
    Coefficient c = field.mul(t.coeff, field.from_int(e));
    if (field.is_zero(c)) continue;
    Monomial m = t.monomial;
    m.set(i, static_cast<Monomial::Exponent>(e - 1));
    out.push_back({std::move(c), m});
  }
  // Dividing every surviving term by x_i preserves their relative order.
  return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial exact_divide(const RingContext& ring, const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("division by zero polynomial");
  const Field& field = ring.field();
  std::vector<Term> quotient;
  Polynomial rest = f;
  const Coefficient lc_inv = field.inv(g.leading_coefficient());
  while (!rest.is_zero()) {
    const Term& lead = rest.leading_term();
    if (!g.leading_monomial().divides(lead.monomial)) {
      throw PreconditionError("polynomial division is not exact");
    }
    Term q{field.mul(lead.coeff, lc_inv), g.leading_monomial().cofactor_in(lead.monomial)};
    rest = sub_mul_term(ring, rest, q.coeff, q.monomial, g);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_sorted_terms(std::move(quotient));
}

Polynomial map_variables(const RingContext& from, const RingContext& to, const Polynomial& f,
                         const std::vector<std::size_t>& var_map) {
  if (var_map.size() != from.num_vars()) throw PreconditionError("variable map has wrong size");
  if (from.characteristic() != to.characteristic()) {
    throw RingMismatchError("cannot map between fields of different characteristic");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(to.num_vars());
    for (std::size_t i = 0; i < from.num_vars(); ++i) {
      m.set(var_map[i], static_cast<Monomial::Exponent>(m[var_map[i]] + t.monomial[i]));
    }
    out.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(to, std::move(out));
}

std::string to_string(const RingContext& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variable_names()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const RingContext& ring, const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Field& field = ring.field();
  std::string out;
  for (const auto& t : f.terms()) {
    std::string c = field.to_string(t.coeff);
    const bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += to_string(ring, t.monomial);
    }
  }
  return out;
}

}  // namespace jacring
