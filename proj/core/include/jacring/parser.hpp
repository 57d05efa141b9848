#pragma once

#include <string_view>

#include "jacring/polynomial.hpp"
#include "jacring/ring.hpp"

namespace jacring {

/// Parses a homogeneous polynomial in the ring's variables.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := int | int '/' int | var | '(' expr ')'
///
/// Throws ParseError (syntax, unknown variable, non-invertible denominator),
/// NonHomogeneousError, or PreconditionError when the result is zero and
/// `allow_zero` is false.
Polynomial parse_polynomial(std::string_view text, const RingContext& ring,
                            bool allow_zero = false);

}  // namespace jacring
