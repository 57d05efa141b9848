#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "jacring/errors.hpp"
#include "jacring/linkage.hpp"

namespace jacring::tools {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> basis_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.groebner().elements()) out.push_back(to_string(ideal.ring(), g));
  return out;
}

void print_list(std::ostream& out, const std::string& title, const std::vector<std::string>& items) {
  out << title << " (" << items.size() << "):\n";
  for (const auto& s : items) out << "  " << s << "\n";
}

Ideal input_ideal(const Problem& problem) {
  if (problem.f) return jacobian_ideal(problem.ring, *problem.f).ideal;
  return Ideal(problem.ring, problem.gens);
}

int max_degree(const Ideal& ideal) {
  int d = 0;
  for (const auto& g : ideal.generators()) d = std::max(d, g.degree(ideal.ring()));
  return d;
}

// The default degree bound, using sigma when the ideal has n + 1 generators.
int bound_for(const Problem& problem, const Ideal& ideal) {
  if (problem.bound) return *problem.bound;
  const std::size_t nv = ideal.ring().num_vars();
  int sigma = 0;
  if (ideal.generators().size() == nv) {
    std::vector<int> degrees;
    for (const auto& g : ideal.generators()) degrees.push_back(std::max(1, g.degree(ideal.ring())));
    sigma = socle_degree(degrees, static_cast<int>(nv) - 1);
  }
  return default_degree_bound(sigma, max_degree(ideal), nv);
}

ordered_json header(const std::string& command, const Problem& problem) {
  return {{"command", command},
          {"source", problem.source},
          {"ring",
           {{"characteristic", problem.ring->characteristic()},
            {"variables", problem.ring->variable_names()},
            {"order", std::string(to_string(problem.ring->order()))}}}};
}

int cmd_gb(const Problem& problem, std::ostream& out, ordered_json& doc) {
  const Ideal ideal = input_ideal(problem);
  const auto basis = basis_strings(ideal);
  print_list(out, "reduced Groebner basis", basis);
  doc["basis"] = basis;
  return kExitOk;
}

int cmd_hilbert(const Problem& problem, std::ostream& out, ordered_json& doc) {
  const Ideal ideal = input_ideal(problem);
  const int bound = bound_for(problem, ideal);
  const HilbertSeries hs = hilbert_series(ideal);
  out << "numerator:";
  for (auto c : hs.numerator()) out << ' ' << c;
  out << "\n";
  doc["numerator"] = hs.numerator();
  if (ideal.is_unit()) {
    out << "unit ideal\n";
    doc["krull_dim"] = nullptr;
  } else {
    out << "krull dim: " << hs.krull_dim() << "\nmultiplicity: " << hs.multiplicity() << "\n";
    doc["krull_dim"] = hs.krull_dim();
    doc["multiplicity"] = hs.multiplicity();
  }
  auto table = ordered_json::array();
  out << "degree  dim (S/I)_k\n";
  for (int k = 0; k <= bound; ++k) {
    out << k << "  " << hs.dimension(k) << "\n";
    table.push_back({k, hs.dimension(k)});
  }
  doc["table"] = std::move(table);
  return kExitOk;
}

int cmd_saturate(const Problem& problem, std::ostream& out, ordered_json& doc) {
  const SaturationResult sat = saturate(input_ideal(problem));
  const auto basis = basis_strings(sat.ideal);
  out << "iterations: " << sat.iterations << "\n";
  print_list(out, "saturation", basis);
  doc["iterations"] = sat.iterations;
  doc["basis"] = basis;
  return kExitOk;
}

int cmd_colon(const Problem& problem, std::ostream& out, ordered_json& doc) {
  if (!problem.divisor) throw PreconditionError("colon needs a 'divisor:' entry");
  const Ideal quotient = colon(input_ideal(problem), *problem.divisor);
  const auto basis = basis_strings(quotient);
  print_list(out, "colon ideal", basis);
  doc["divisor"] = to_string(*problem.ring, *problem.divisor);
  doc["basis"] = basis;
  return kExitOk;
}

int cmd_jacobian(const Problem& problem, std::ostream& out, ordered_json& doc) {
  if (!problem.f) throw PreconditionError("jacobian needs 'f:'");
  const JacobianIdeal jac = jacobian_ideal(problem.ring, *problem.f);
  std::vector<std::string> partials;
  for (const auto& g : jac.ideal.generators()) partials.push_back(to_string(*problem.ring, g));
  print_list(out, "partial derivatives", partials);
  doc["degree"] = jac.degree;
  doc["partials"] = partials;
  auto warnings = ordered_json::array();
  for (auto i : jac.zero_partials) {
    warnings.push_back("partial derivative by " + problem.ring->variable_names()[i] + " is identically zero");
  }
  if (jac.characteristic_divides_degree) warnings.push_back("the characteristic divides the degree");
  for (const auto& w : warnings) out << "warning: " << w.get<std::string>() << "\n";
  doc["warnings"] = std::move(warnings);
  return kExitOk;
}

int cmd_h0(const Problem& problem, std::ostream& out, ordered_json& doc) {
  const Ideal ideal = input_ideal(problem);
  const std::size_t nv = problem.ring->num_vars();
  if (ideal.generators().size() != nv) {
    throw PreconditionError("need n + 1 = " + std::to_string(nv) + " generators, got " +
                            std::to_string(ideal.generators().size()));
  }
  if (ideal.is_unit()) throw PreconditionError("the ideal is the unit ideal");
  if (krull_dim(ideal) > 1) throw PreconditionError("dim Proj(S/I) > 0");
  std::vector<int> degrees;
  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) throw PreconditionError("generators must be nonzero");
    degrees.push_back(g.degree(ideal.ring()));
  }
  const int sigma = socle_degree(degrees, static_cast<int>(nv) - 1);
  const int bound = bound_for(problem, ideal);
  const GradedDims h = local_cohomology_h0(ideal, saturate(ideal).ideal, bound);
  const SelfDuality sd = check_self_duality(h, sigma);
  out << "sigma = " << sigma << "\n";
  out << "degree  dim H0_k\n";
  auto table = ordered_json::array();
  for (const auto& [k, v] : h.table) {
    out << k << "  " << v << "\n";
    table.push_back({k, v});
  }
  out << "self-dual: " << (sd.self_dual ? "yes" : "no");
  if (!sd.self_dual) out << " (h(" << *sd.witness << ") = " << sd.lhs << ", h(sigma - " << *sd.witness << ") = " << sd.rhs << ")";
  out << "\n";
  doc["sigma"] = sigma;
  doc["h0"] = std::move(table);
  doc["self_dual"] = sd.self_dual;
  return sd.self_dual ? kExitOk : kExitCheckFailed;
}

int cmd_linkage(const Problem& problem, std::ostream& out, ordered_json& doc) {
  const Ideal ideal = input_ideal(problem);
  const std::size_t distinguished = problem.distinguished.value_or(default_distinguished(ideal));
  const QuasiCI quasi = extract_regular_sequence(ideal, distinguished, problem.seed);
  const LinkageData link = linked_ideal(quasi, problem.bound);
  std::vector<std::string> j;
  for (const auto& g : quasi.cci_J.generators()) j.push_back(to_string(*problem.ring, g));
  out << "f0 = " << to_string(*problem.ring, quasi.f0) << "\n";
  out << "tau = " << link.tau << ", sigma = " << link.sigma << ", attempts = " << quasi.attempts << "\n";
  print_list(out, "J", j);
  print_list(out, "I^s", basis_strings(link.i_sat));
  print_list(out, "K' = (J : I^s)", basis_strings(link.k_prime));
  const CheckResult inv = verify_linkage_involution(link);
  out << "(J : K') = I^s: " << (inv.status == CheckStatus::Pass ? "yes" : "no") << "\n";
  doc["f0"] = to_string(*problem.ring, quasi.f0);
  doc["tau"] = link.tau;
  doc["sigma"] = link.sigma;
  doc["attempts"] = quasi.attempts;
  doc["J"] = j;
  doc["saturation"] = basis_strings(link.i_sat);
  doc["linked"] = basis_strings(link.k_prime);
  doc["involution"] = inv.status == CheckStatus::Pass;
  return inv.status == CheckStatus::Pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

bool is_command(const std::string& name) {
  static const char* names[] = {"gb", "hilbert", "saturate", "colon", "jacobian", "h0", "linkage", "verify"};
  return std::find(std::begin(names), std::end(names), name) != std::end(names);
}

int run_on_problem(const std::string& command, const Problem& problem, const CommandOptions& options,
                   std::ostream& out, std::ostream& err, std::string* json) {
  try {
    if (command == "verify") {
      PipelineOptions po;
      po.distinguished = problem.distinguished;
      po.seed = problem.seed;
      po.bound = problem.bound;
      po.oracle = options.oracle;
      po.timings = options.timings;
      PipelineInput input = problem.f ? PipelineInput(*problem.f) : PipelineInput(problem.gens);
      const VerificationReport report = full_report(problem.ring, input, po);
      out << to_text(report);
      if (json) *json = to_json(report);
      if (report.failure) return report.failure->precondition ? kExitUsage : kExitCheckFailed;
      return report.any_failed() ? kExitCheckFailed : kExitOk;
    }
    ordered_json doc = header(command, problem);
    int code = kExitOk;
    if (command == "gb") code = cmd_gb(problem, out, doc);
    else if (command == "hilbert") code = cmd_hilbert(problem, out, doc);
    else if (command == "saturate") code = cmd_saturate(problem, out, doc);
    else if (command == "colon") code = cmd_colon(problem, out, doc);
    else if (command == "jacobian") code = cmd_jacobian(problem, out, doc);
    else if (command == "h0") code = cmd_h0(problem, out, doc);
    else if (command == "linkage") code = cmd_linkage(problem, out, doc);
    else throw PreconditionError("unknown command '" + command + "'");
    if (json) *json = doc.dump(2) + "\n";
    return code;
  } catch (const PreconditionError& e) {
    err << problem.source << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonHomogeneousError& e) {
    err << problem.source << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << problem.source << ": " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  if (!is_command(options.command)) {
    err << "unknown command '" << options.command << "'\n";
    return kExitUsage;
  }
  const std::size_t count = options.files.size();
  const bool json_dir = options.json_path && count > 1;
  if (json_dir) std::filesystem::create_directories(*options.json_path);

  struct Outcome {
    std::string out, err, json;
    int code = kExitOk;
  };
  std::vector<Outcome> outcomes(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      std::ostringstream o, e;
      Outcome& result = outcomes[i];
      try {
        const Problem problem = load_problem(options.files[i], options.overrides);
        result.code = run_on_problem(options.command, problem, options, o, e,
                                     options.json_path ? &result.json : nullptr);
      } catch (const ProblemFileError& ex) {
        e << ex.what() << "\n";
        result.code = kExitUsage;
      } catch (const std::exception& ex) {
        e << options.files[i] << ": " << ex.what() << "\n";
        result.code = kExitUsage;
      }
      result.out = o.str();
      result.err = e.str();
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(options.jobs, 1)), 1, count);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kExitOk;
  for (std::size_t i = 0; i < count; ++i) {
    if (count > 1) out << "== " << options.files[i] << "\n";
    out << outcomes[i].out;
    err << outcomes[i].err;
    code = std::max(code, outcomes[i].code);
    if (options.json_path && !outcomes[i].json.empty()) {
      std::filesystem::path target = *options.json_path;
      if (json_dir) target /= std::filesystem::path(options.files[i]).stem().string() + ".json";
      std::ofstream file(target, std::ios::binary);
      if (!file) {
        err << "cannot write " << target.string() << "\n";
        code = kExitUsage;
        continue;
      }
      file << outcomes[i].json;
    }
  }
  return code;
}

}  // namespace jacring::tools
