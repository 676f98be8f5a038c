#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "oscillometer/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Seminorms and distances to little spaces for six function spaces"};
  app.require_subcommand(1);

  oscillometer::cli::Invocation inv;
  std::string config, out = ".";
  std::optional<std::uint64_t> seed;
  for (const char* name : {"norm", "distance", "check"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config, "run configuration (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output directory");
    sub->add_option("--seed", seed, "seed for randomized checks");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : oscillometer::cli::config_error;
  }

  inv.command = app.get_subcommands().front()->get_name();
  inv.config = config;
  inv.out_dir = out;
  inv.seed = seed;
  return oscillometer::cli::run(inv, std::cerr);
}
