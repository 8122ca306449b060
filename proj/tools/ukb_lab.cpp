#include "CLI11.hpp"
#include "ukb/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"uniform Kahler bundle laboratory"};
  app.require_subcommand(1);

  ukb::RunConfig config;
  const std::vector<std::string> commands = {
      "decompose", "ideals",  "gns",   "distance",
      "gelfand",   "star",    "norm",  "hereditary-classify",
      "theta",     "xi",      "sphere", "subbundle-check",
      "verify-all"};
  for (const std::string& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", config.input_path, "input spec (JSON)");
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--samples", config.samples, "sample count")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-eq", config.tol.tol_eq, "comparison tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", config.output, "report path (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.tol.rng_seed = config.seed;
  return ukb::run_cli(config);
}
