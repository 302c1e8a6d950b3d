// Command-line front end: bhn {build|verify|growth|oracle} [options].
#include <fstream>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "bhn/cli.hpp"
#include "bhn/error.hpp"

namespace {

bhn::cli::ProfileSpec resolve_profile(const std::string& value) {
  if (value == "toy" || value == "builtin") return bhn::cli::ProfileSpec::preset(value);
  if (!std::filesystem::exists(value))
    throw bhn::ConfigError("profile must be 'toy', 'builtin' or a path to a profile JSON file");
  std::ifstream in(value);
  try {
    return bhn::cli::ProfileSpec::from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw bhn::ConfigError(std::string("profile file is not valid JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized B.H. Neumann groups: sequences, word problem and residual finiteness bounds"};
  app.require_subcommand(1);

  std::string config_path, profile, format;
  std::optional<std::int64_t> n, budget_ms;
  std::optional<std::uint64_t> seed;
  bool print_config = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--profile", profile, "toy, builtin, or a profile JSON file");
    sub->add_option("--n", n, "index / length bound")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "seed for random words");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--budget-ms", budget_ms, "wall-clock budget in milliseconds")->check(CLI::NonNegativeNumber);
    sub->add_flag("--print-config", print_config, "print the resolved configuration as JSON and exit");
  };
  for (const char* name : {"build", "verify", "growth", "oracle"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
  }
  app.get_subcommand("build")->description("sequence table f, d, q, r with certificates");
  app.get_subcommand("verify")->description("generation, radii, commuting, locality and witness checks");
  app.get_subcommand("growth")->description("bound tables for residual finiteness growth");
  app.get_subcommand("oracle")->description("balls, pairwise oracle, injectivity and witnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    bhn::cli::RunConfig config;
    if (!config_path.empty()) config = bhn::cli::RunConfig::load(config_path);
    config.command = bhn::cli::parse_command(app.get_subcommands().front()->get_name());
    if (!profile.empty()) config.profile = resolve_profile(profile);
    if (n) config.n = *n;
    if (seed) config.seed = *seed;
    if (!format.empty()) config.format = bhn::cli::parse_format(format);
    if (budget_ms) config.budget_ms = *budget_ms;
    config.profile.to_profile();

    if (print_config) {
      std::cout << config.to_json().dump(2) << '\n';
      return 0;
    }
    return bhn::cli::run(config, std::cout);
  } catch (const bhn::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const bhn::Error& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
