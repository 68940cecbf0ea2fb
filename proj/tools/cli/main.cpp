#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "cli.hpp"

using splitcircle::cli::Command;
using splitcircle::cli::Format;
using splitcircle::cli::JobConfig;

int main(int argc, char** argv) {
  CLI::App app{"Certified splitting-circle root finder for complex polynomials"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  JobConfig config;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  const std::pair<const char*, const char*> commands[] = {
      {"factor", "Factor into linear factors"},     {"roots", "Approximate all roots"},
      {"count", "Count roots in |z| < radius"},     {"modmax", "Largest root modulus"},
      {"modmin", "Smallest root modulus"},          {"mod", "k-th smallest root modulus"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    const std::string cmd = name;
    sub->add_option("input", config.input_path, "Coefficient file, '-' for stdin")->required();
    sub->add_option("--bits", config.precision_bits, "Working precision in bits")->capture_default_str();
    sub->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");
    sub->add_option("--output,-o", config.output_path, "Write the result to this path");
    if (cmd == "factor" || cmd == "roots") {
      sub->add_option("--eps", config.eps, "Relative residual bound")->capture_default_str();
    } else {
      sub->add_option("--tau", config.tau, "Log-radius tolerance")->capture_default_str();
    }
    if (cmd == "count") sub->add_option("--radius", config.disk_radius, "Disk radius")->capture_default_str();
    if (cmd == "mod") sub->add_option("--k", config.k_index, "Modulus index, 1-based")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::map<std::string, Command> by_name{{"factor", Command::factor}, {"roots", Command::roots},
                                               {"count", Command::count},   {"modmax", Command::modmax},
                                               {"modmin", Command::modmin}, {"mod", Command::mod}};
  config.command = by_name.at(app.get_subcommands().front()->get_name());
  return splitcircle::cli::run(config, std::cin, std::cout, std::cerr);
}
