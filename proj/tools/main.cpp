#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "jacring/ring.hpp"

int main(int argc, char** argv) {
  using namespace jacring::tools;
  CLI::App app{"Jacobian rings, local cohomology and linkage over F_p and Q"};
  app.set_help_all_flag("--help-all");

  CommandOptions options;
  std::optional<std::uint32_t> characteristic;
  std::optional<std::string> order;
  std::optional<int> bound;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> distinguished;

  app.add_option("command", options.command, "gb | hilbert | saturate | colon | jacobian | h0 | linkage | verify")
      ->required();
  app.add_option("files", options.files, "problem files")->required()->check(CLI::ExistingFile);
  app.add_option("--char", characteristic, "characteristic: a prime below 2^31, or 0 for Q");
  app.add_option("--order", order, "monomial order")->check(CLI::IsMember({"grevlex", "grlex"}));
  app.add_option("--bound", bound, "largest degree in graded tables")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "seed for the regular-sequence search");
  app.add_option("--distinguished", distinguished, "index of the generator f_0");
  app.add_option("--json", options.json_path, "write the JSON report here (a directory for several files)");
  app.add_flag("--oracle", options.oracle, "cross-check every dimension against Macaulay matrices");
  app.add_flag("--timings", options.timings, "include per-check timings in the report");
  app.add_option("--jobs,-j", options.jobs, "files processed concurrently")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!is_command(options.command)) {
    std::cerr << "unknown command '" << options.command << "'\n";
    return kExitUsage;
  }
  options.overrides.characteristic = characteristic;
  if (order) options.overrides.order = jacring::parse_order(*order);
  options.overrides.bound = bound;
  options.overrides.seed = seed;
  options.overrides.distinguished = distinguished;
  return run_command(options, std::cout, std::cerr);
}
