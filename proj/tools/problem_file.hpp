#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacring/polynomial.hpp"
#include "jacring/ring.hpp"

namespace jacring::tools {

/// Bad problem file. line() and column() are 1-based.
class ProblemFileError : public std::runtime_error {
 public:
  ProblemFileError(const std::string& source, std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Command-line values that take precedence over the file.
struct Overrides {
  std::optional<std::uint32_t> characteristic;
  std::optional<MonomialOrder> order;
  std::optional<int> bound;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> distinguished;
};

struct Problem {
  std::string source;
  RingPtr ring;
  std::optional<Polynomial> f;
  std::vector<Polynomial> gens;
  std::optional<Polynomial> divisor;
  std::optional<std::size_t> distinguished;
  std::uint64_t seed = 0;
  std::optional<int> bound;
};

/// Lines are `key: value`; `#` starts a comment. Keys: char (or
/// characteristic), vars (or variables), order, f, gens, divisor,
/// distinguished, seed, bound. A `gens: [...]` list may span several lines.
/// Exactly one of f and gens is required.
Problem parse_problem(const std::string& text, const std::string& source = "<input>",
                      const Overrides& overrides = {});

/// Reads and parses a file; a missing file raises ProblemFileError at 0:0.
Problem load_problem(const std::string& path, const Overrides& overrides = {});

}  // namespace jacring::tools
