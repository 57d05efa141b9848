#include "jacring/ring.hpp"

#include <set>

#include "jacring/errors.hpp"

namespace jacring {

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Grevlex:
      return "grevlex";
    case MonomialOrder::Grlex:
      return "grlex";
  }
  return "?";
}

std::optional<MonomialOrder> parse_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::Grevlex;
  if (name == "grlex") return MonomialOrder::Grlex;
  return std::nullopt;
}

namespace {

// Tie-break among monomials of equal degree over variables [first, n).
std::strong_ordering tie_break(const Monomial& a, const Monomial& b, MonomialOrder order,
                               std::size_t first) {
  const std::size_t n = a.num_vars();
  if (order == MonomialOrder::Grevlex) {
    for (std::size_t i = n; i-- > first;) {
      if (a[i] != b[i]) {
        return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = first; i < n; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       MonomialOrder order) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  return tie_break(a, b, order, 0);
}

RingContext::RingContext(std::vector<std::string> variable_names, std::uint32_t characteristic,
                         MonomialOrder order)
    : names_(std::move(variable_names)), field_(characteristic), order_(order) {
  if (names_.size() < 2) throw PreconditionError("a ring needs at least two variables");
  if (names_.size() > kMaxVariables) {
    throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(name).second) throw PreconditionError("duplicate variable name '" + name + "'");
  }
}

RingPtr RingContext::make(std::vector<std::string> variable_names, std::uint32_t characteristic,
                          MonomialOrder order) {
  return std::make_shared<const RingContext>(std::move(variable_names), characteristic, order);
}

RingPtr RingContext::make_elimination(const RingContext& base, std::string name) {
  std::vector<std::string> names;
  names.reserve(base.num_vars() + 1);
  names.push_back(std::move(name));
  names.insert(names.end(), base.names_.begin(), base.names_.end());
  auto ring = std::make_shared<RingContext>(std::move(names), base.characteristic(), base.order_);
  ring->eliminate_first_ = true;
  return ring;
}

std::optional<std::size_t> RingContext::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::strong_ordering RingContext::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (!eliminate_first_) return compare_monomials(a, b, order_);
  const auto da = degree(a);
  const auto db = degree(b);
  if (da != db) return da <=> db;
  if (a[0] != b[0]) return a[0] <=> b[0];
  return tie_break(a, b, order_, 1);
}

Monomial RingContext::variable(std::size_t i) const {
  if (i >= num_vars()) throw PreconditionError("variable index out of range");
  Monomial m(num_vars());
  m.set(i, 1);
  return m;
}

std::vector<Monomial> RingContext::monomials_of_degree(int k) const {
  std::vector<Monomial> out;
  if (k < 0) return out;
  const std::size_t n = num_vars();
  std::vector<int> exps(n, 0);
  // Enumerate compositions of k into n parts.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == n) {
      exps[i] = remaining;
      out.emplace_back(std::span<const int>(exps));
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[i] = e;
      self(self, i + 1, remaining - e);
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(),
            [this](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

bool RingContext::same_ring(const RingContext& other) const {
  return this == &other || (names_ == other.names_ && field_ == other.field_ &&
                            order_ == other.order_ && eliminate_first_ == other.eliminate_first_);
}

std::int64_t monomial_count(std::size_t num_vars, int k) {
  if (k < 0) return 0;
  // C(k + n - 1, n - 1) computed incrementally; exact at every step.
  std::int64_t r = 1;
  const auto n1 = static_cast<std::int64_t>(num_vars) - 1;
  for (std::int64_t i = 1; i <= n1; ++i) r = r * (k + i) / i;
  return r;
}

}  // namespace jacring
