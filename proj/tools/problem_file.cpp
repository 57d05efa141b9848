#include "problem_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "jacring/errors.hpp"
#include "jacring/parser.hpp"

namespace jacring::tools {

ProblemFileError::ProblemFileError(const std::string& source, std::size_t line, std::size_t column,
                                   const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

// A value and where it starts in the file.
struct Located {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;  // of text[0]
  // For values joined from several lines: offset in `text` -> (line, column).
  std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> pieces;

  std::pair<std::size_t, std::size_t> where(std::size_t offset) const {
    std::pair<std::size_t, std::size_t> at{line, column + offset};
    for (const auto& [start, lc] : pieces) {
      if (start <= offset) at = {lc.first, lc.second + (offset - start)};
    }
    return at;
  }
};

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::size_t skip_space(const std::string& s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::size_t trim_end(const std::string& s) {
  std::size_t e = s.size();
  while (e > 0 && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return e;
}

int bracket_balance(const std::string& s) {
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
  }
  return depth;
}

template <class T>
T parse_unsigned(const std::string& source, const Located& v, const char* what) {
  T out{};
  const char* begin = v.text.data();
  const char* end = begin + v.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end || out < T{}) {
    throw ProblemFileError(source, v.line, v.column, std::string("invalid ") + what + " '" + v.text + "'");
  }
  return out;
}

// Splits "a, b, c" at top-level commas, returning offsets of each piece.
std::vector<std::pair<std::size_t, std::string>> split_top_level(const std::string& s, std::size_t from,
                                                                 std::size_t to) {
  std::vector<std::pair<std::size_t, std::string>> out;
  int depth = 0;
  std::size_t start = from;
  for (std::size_t i = from; i <= to; ++i) {
    if (i == to || (s[i] == ',' && depth == 0)) {
      std::size_t b = skip_space(s, start);
      std::size_t e = i;
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
      out.emplace_back(b, s.substr(b, e - b));
      start = i + 1;
      continue;
    }
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
  }
  return out;
}

}  // namespace

Problem parse_problem(const std::string& text, const std::string& source, const Overrides& overrides) {
  std::map<std::string, Located> values;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    const std::size_t b = skip_space(line, 0);
    if (b == line.size()) continue;
    const auto colon = line.find(':', b);
    if (colon == std::string::npos) throw ProblemFileError(source, line_no, b + 1, "expected 'key: value'");
    std::string key = line.substr(b, trim_end(line.substr(0, colon)) - b);
    for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (key == "characteristic") key = "char";
    if (key == "variables") key = "vars";
    static const char* known[] = {"char", "vars", "order", "f", "gens", "divisor", "distinguished", "seed", "bound"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ProblemFileError(source, line_no, b + 1, "unknown key '" + key + "'");
    }
    if (values.count(key)) throw ProblemFileError(source, line_no, b + 1, "duplicate key '" + key + "'");
    const std::size_t vb = skip_space(line, colon + 1);
    Located v{line.substr(vb, trim_end(line) > vb ? trim_end(line) - vb : 0), line_no, vb + 1, {}};
    const std::size_t key_line = line_no;
    while (key == "gens" && bracket_balance(v.text) > 0 && std::getline(in, raw)) {
      ++line_no;
      const std::string more = strip_comment(raw);
      const std::size_t mb = skip_space(more, 0);
      v.text += ' ';
      v.pieces.push_back({v.text.size(), {line_no, mb + 1}});
      v.text += more.substr(mb, trim_end(more) > mb ? trim_end(more) - mb : 0);
    }
    if (key == "gens" && bracket_balance(v.text) != 0) {
      throw ProblemFileError(source, key_line, vb + 1, "unbalanced brackets in gens");
    }
    if (v.text.empty()) throw ProblemFileError(source, key_line, vb + 1, "missing value for '" + key + "'");
    values.emplace(key, std::move(v));
  }

  Problem problem;
  problem.source = source;

  std::uint32_t characteristic = 32003;
  if (auto it = values.find("char"); it != values.end()) {
    characteristic = parse_unsigned<std::uint32_t>(source, it->second, "characteristic");
  }
  if (overrides.characteristic) characteristic = *overrides.characteristic;

  MonomialOrder order = MonomialOrder::Grevlex;
  if (auto it = values.find("order"); it != values.end()) {
    auto parsed = parse_order(it->second.text);
    if (!parsed) {
      throw ProblemFileError(source, it->second.line, it->second.column, "unknown order '" + it->second.text + "'");
    }
    order = *parsed;
  }
  if (overrides.order) order = *overrides.order;

  auto vars_it = values.find("vars");
  if (vars_it == values.end()) throw ProblemFileError(source, line_no + 1, 1, "missing 'vars'");
  std::vector<std::string> names;
  {
    std::string cleaned = vars_it->second.text;
    for (auto& c : cleaned) {
      if (c == ',') c = ' ';
    }
    std::istringstream vs(cleaned);
    for (std::string name; vs >> name;) names.push_back(name);
  }
  try {
    problem.ring = RingContext::make(names, characteristic, order);
  } catch (const Error& e) {
    const auto& v = (overrides.characteristic || !values.count("char")) ? vars_it->second : values.at("char");
    throw ProblemFileError(source, v.line, v.column, e.what());
  }

  auto parse_at = [&](const Located& v, std::size_t offset, const std::string& body) {
    try {
      return parse_polynomial(body, *problem.ring);
    } catch (const ParseError& e) {
      auto [l, c] = v.where(offset + e.position());
      throw ProblemFileError(source, l, c, e.what());
    } catch (const Error& e) {
      auto [l, c] = v.where(offset);
      throw ProblemFileError(source, l, c, e.what());
    }
  };

  const bool has_f = values.count("f") > 0;
  const bool has_gens = values.count("gens") > 0;
  if (has_f == has_gens) {
    throw ProblemFileError(source, line_no + 1, 1, "exactly one of 'f' and 'gens' is required");
  }
  if (has_f) {
    const auto& v = values.at("f");
    problem.f = parse_at(v, 0, v.text);
  } else {
    const auto& v = values.at("gens");
    if (v.text.front() != '[' || v.text.back() != ']') {
      throw ProblemFileError(source, v.line, v.column, "gens must be a bracketed list");
    }
    for (const auto& [offset, body] : split_top_level(v.text, 1, v.text.size() - 1)) {
      if (body.empty()) {
        auto [l, c] = v.where(offset);
        throw ProblemFileError(source, l, c, "empty generator");
      }
      problem.gens.push_back(parse_at(v, offset, body));
    }
  }
  if (auto it = values.find("divisor"); it != values.end()) {
    problem.divisor = parse_at(it->second, 0, it->second.text);
  }
  if (auto it = values.find("distinguished"); it != values.end()) {
    problem.distinguished = parse_unsigned<std::size_t>(source, it->second, "distinguished index");
  }
  if (auto it = values.find("seed"); it != values.end()) {
    problem.seed = parse_unsigned<std::uint64_t>(source, it->second, "seed");
  }
  if (auto it = values.find("bound"); it != values.end()) {
    problem.bound = parse_unsigned<int>(source, it->second, "bound");
  }
  if (overrides.distinguished) problem.distinguished = overrides.distinguished;
  if (overrides.seed) problem.seed = *overrides.seed;
  if (overrides.bound) problem.bound = overrides.bound;
  return problem;
}

Problem load_problem(const std::string& path, const Overrides& overrides) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ProblemFileError(path, 0, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_problem(buffer.str(), path, overrides);
}

}  // namespace jacring::tools
