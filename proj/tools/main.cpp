#include <string>

#include <CLI11.hpp>

#include "linarg/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"difference equations with linear arguments over Banach algebras"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  std::string seed;

  for (const char* name : {"simulate", "reduce", "check", "scan", "axioms"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_path, "artifact output path");
    sub->add_option("--format", format, "csv|json (simulate artifact)");
    sub->add_option("--seed", seed, "override the config seed");
  }

  CLI11_PARSE(app, argc, argv);

  return linarg::run_command(app.get_subcommands().front()->get_name(),
                             config_path, out_path, format, seed);
}
