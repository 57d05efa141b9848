#include "jacring/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "jacring/errors.hpp"

namespace jacring {

using nlohmann::ordered_json;

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "skipped";
}

std::optional<CheckStatus> parse_check_status(std::string_view text) {
  if (text == "pass") return CheckStatus::Pass;
  if (text == "fail") return CheckStatus::Fail;
  if (text == "skipped") return CheckStatus::Skipped;
  return std::nullopt;
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

bool VerificationReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

bool VerificationReport::all_passed() const { return !failure && !any_failed(); }

namespace {

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <class T>
std::optional<T> optional_from(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

std::string to_json(const VerificationReport& report) {
  ordered_json doc;
  const auto& in = report.input;
  doc["input"] = {{"mode", in.mode},
                  {"f", optional_json(in.f)},
                  {"generators", in.generators},
                  {"degrees", in.degrees},
                  {"distinguished", optional_json(in.distinguished)},
                  {"seed", in.seed},
                  {"bound", optional_json(in.bound)}};
  doc["ring"] = {{"characteristic", report.ring.characteristic},
                 {"variables", report.ring.variables},
                 {"order", report.ring.order}};
  doc["tau"] = optional_json(report.tau);
  doc["sigma"] = optional_json(report.sigma);
  auto h0 = ordered_json::array();
  for (const auto& [k, v] : report.h0) h0.push_back({k, v});
  doc["h0"] = std::move(h0);
  auto checks = ordered_json::array();
  auto timings = ordered_json::object();
  for (const auto& c : report.checks) {
    auto witnesses = ordered_json::array();
    for (const auto& w : c.witnesses) {
      witnesses.push_back({{"degree", optional_json(w.degree)},
                           {"lhs", optional_json(w.lhs)},
                           {"rhs", optional_json(w.rhs)},
                           {"note", w.note}});
    }
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"witnesses", std::move(witnesses)},
                      {"detail", c.detail}});
    timings[c.name] = c.elapsed_ms;
  }
  doc["checks"] = std::move(checks);
  doc["warnings"] = report.warnings;
  if (report.failure) {
    doc["failure"] = {{"stage", report.failure->stage},
                      {"message", report.failure->message},
                      {"precondition", report.failure->precondition}};
  } else {
    doc["failure"] = nullptr;
  }
  if (report.include_timings) doc["timings"] = std::move(timings);
  return doc.dump(2) + "\n";
}

VerificationReport report_from_json(std::string_view text) {
  VerificationReport report;
  try {
    const ordered_json doc = ordered_json::parse(text);
    const auto& in = doc.at("input");
    report.input.mode = in.at("mode").get<std::string>();
    report.input.f = optional_from<std::string>(in, "f");
    report.input.generators = in.at("generators").get<std::vector<std::string>>();
    report.input.degrees = in.at("degrees").get<std::vector<int>>();
    report.input.distinguished = optional_from<std::size_t>(in, "distinguished");
    report.input.seed = in.at("seed").get<std::uint64_t>();
    report.input.bound = optional_from<int>(in, "bound");
    const auto& ring = doc.at("ring");
    report.ring.characteristic = ring.at("characteristic").get<std::uint32_t>();
    report.ring.variables = ring.at("variables").get<std::vector<std::string>>();
    report.ring.order = ring.at("order").get<std::string>();
    report.tau = optional_from<int>(doc, "tau");
    report.sigma = optional_from<int>(doc, "sigma");
    for (const auto& entry : doc.at("h0")) {
      report.h0.emplace_back(entry.at(0).get<int>(), entry.at(1).get<std::int64_t>());
    }
    const ordered_json* timings = doc.contains("timings") ? &doc.at("timings") : nullptr;
    report.include_timings = timings != nullptr;
    for (const auto& c : doc.at("checks")) {
      CheckResult check;
      check.name = c.at("name").get<std::string>();
      const auto status = parse_check_status(c.at("status").get<std::string>());
      if (!status) throw Error("unknown check status in report");
      check.status = *status;
      for (const auto& w : c.at("witnesses")) {
        check.witnesses.push_back({optional_from<int>(w, "degree"), optional_from<std::int64_t>(w, "lhs"),
                                   optional_from<std::int64_t>(w, "rhs"), w.at("note").get<std::string>()});
      }
      check.detail = c.at("detail").get<std::string>();
      if (timings && timings->contains(check.name)) check.elapsed_ms = timings->at(check.name).get<double>();
      report.checks.push_back(std::move(check));
    }
    report.warnings = doc.at("warnings").get<std::vector<std::string>>();
    if (doc.contains("failure") && !doc.at("failure").is_null()) {
      const auto& f = doc.at("failure");
      report.failure = StageFailure{f.at("stage").get<std::string>(), f.at("message").get<std::string>(),
                                    f.at("precondition").get<bool>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  return report;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  if (report.input.f) {
    out << "f = " << *report.input.f << "\n";
  }
  out << "I = (";
  for (std::size_t i = 0; i < report.input.generators.size(); ++i) {
    out << (i ? ", " : "") << report.input.generators[i];
  }
  out << ")\n";
  out << "ring: char " << report.ring.characteristic << ", " << report.ring.order << ", vars";
  for (const auto& v : report.ring.variables) out << ' ' << v;
  out << "\n";
  if (report.tau) out << "tau = " << *report.tau << ", sigma = " << *report.sigma << "\n";
  if (!report.h0.empty()) {
    out << "h0:";
    bool any = false;
    for (const auto& [k, v] : report.h0) {
      if (v == 0) continue;
      out << ' ' << k << ':' << v;
      any = true;
    }
    if (!any) out << " 0";
    out << "\n";
  }
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  for (const auto& c : report.checks) {
    out << to_string(c.status) << "  " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    if (report.include_timings) out << "  " << static_cast<long long>(c.elapsed_ms) << " ms";
    out << "\n";
    for (const auto& w : c.witnesses) {
      out << "    ";
      if (w.degree) out << "degree " << *w.degree << ": ";
      if (w.lhs) out << *w.lhs << " vs " << (w.rhs ? std::to_string(*w.rhs) : "?") << " ";
      out << w.note << "\n";
    }
  }
  if (report.failure) out << "failed at " << report.failure->stage << ": " << report.failure->message << "\n";
  return out.str();
}

}  // namespace jacring
