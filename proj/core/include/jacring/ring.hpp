#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacring/coefficient.hpp"
#include "jacring/monomial.hpp"

namespace jacring {

enum class MonomialOrder { Grevlex, Grlex };

std::string_view to_string(MonomialOrder order);
/// Accepts "grevlex" and "grlex".
std::optional<MonomialOrder> parse_order(std::string_view name);

/// Three-way comparison under `order` (standard grading). Higher degree wins;
/// grevlex breaks ties by the last nonzero entry of a - b being negative.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       MonomialOrder order);

/// The polynomial ring K[x_0, ..., x_n]: field, variable names and term order.
///
/// Rings built with make_elimination() carry one extra leading variable of
/// weight 0 and compare monomials by (weighted degree, exponent of that
/// variable, base order on the rest). That is an elimination order for the
/// extra variable and is only used internally for intersections.
class RingContext {
 public:
  RingContext(std::vector<std::string> variable_names, std::uint32_t characteristic,
              MonomialOrder order = MonomialOrder::Grevlex);

  static std::shared_ptr<const RingContext> make(std::vector<std::string> variable_names,
                                                 std::uint32_t characteristic,
                                                 MonomialOrder order = MonomialOrder::Grevlex);

  /// The ring with a new variable `name` prepended, weight 0, eliminated first.
  static std::shared_ptr<const RingContext> make_elimination(const RingContext& base,
                                                             std::string name);

  std::size_t num_vars() const noexcept { return names_.size(); }
  const Field& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  bool is_elimination() const noexcept { return eliminate_first_; }

  /// Index of the variable called `name`, if any.
  std::optional<std::size_t> variable_index(std::string_view name) const;

  /// Weighted degree; equals Monomial::degree() outside elimination rings.
  std::uint32_t degree(const Monomial& m) const noexcept {
    return eliminate_first_ ? m.degree() - m[0] : m.degree();
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;

  Monomial one() const { return Monomial(num_vars()); }
  Monomial variable(std::size_t i) const;

  /// All standard-graded monomials of degree k, in descending order.
  std::vector<Monomial> monomials_of_degree(int k) const;

  /// Same variables, field and order (pointer identity is not required).
  bool same_ring(const RingContext& other) const;

 private:
  std::vector<std::string> names_;
  Field field_;
  MonomialOrder order_;
  bool eliminate_first_ = false;
};

using RingPtr = std::shared_ptr<const RingContext>;

/// Number of monomials of degree k in n variables, C(k+n-1, n-1).
std::int64_t monomial_count(std::size_t num_vars, int k);

}  // namespace jacring
