#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jacring {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus status);
std::optional<CheckStatus> parse_check_status(std::string_view text);

/// Evidence for a check: a degree with both sides' values, and/or a note.
struct Witness {
  std::optional<int> degree;
  std::optional<std::int64_t> lhs;
  std::optional<std::int64_t> rhs;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::vector<Witness> witnesses;
  std::string detail;
  double elapsed_ms = 0.0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ReportInput {
  std::string mode;  // "hypersurface" or "generators"
  std::optional<std::string> f;
  std::vector<std::string> generators;
  std::vector<int> degrees;
  std::optional<std::size_t> distinguished;
  std::uint64_t seed = 0;
  std::optional<int> bound;

  friend bool operator==(const ReportInput&, const ReportInput&) = default;
};

struct RingEcho {
  std::uint32_t characteristic = 0;
  std::vector<std::string> variables;
  std::string order;

  friend bool operator==(const RingEcho&, const RingEcho&) = default;
};

/// The stage that raised, when the pipeline stopped early.
struct StageFailure {
  std::string stage;
  std::string message;
  /// True when the input violated a precondition (as opposed to a check or
  /// computation that went wrong on valid input).
  bool precondition = false;

  friend bool operator==(const StageFailure&, const StageFailure&) = default;
};

struct VerificationReport {
  ReportInput input;
  RingEcho ring;
  std::optional<int> tau;
  std::optional<int> sigma;
  std::vector<std::pair<int, std::int64_t>> h0;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  std::optional<StageFailure> failure;
  /// Emit per-check timings in JSON. Off by default so that reports are
  /// byte-identical across runs.
  bool include_timings = false;

  const CheckResult* find(std::string_view name) const;
  bool any_failed() const;
  /// No failed check and no stage failure.
  bool all_passed() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// JSON document {input, ring, tau, sigma, h0, checks, warnings, failure, timings}.
std::string to_json(const VerificationReport& report);
/// Inverse of to_json. Throws Error on malformed input.
VerificationReport report_from_json(std::string_view text);

/// Human-readable summary.
std::string to_text(const VerificationReport& report);

}  // namespace jacring
