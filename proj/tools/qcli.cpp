#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "qseries/cli/commands.hpp"
#include "qseries/errors.hpp"

namespace {

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_config(const std::string& path)
{
  if (path == "-")
    return slurp(std::cin);
  std::ifstream in(path);
  if (!in)
    throw qseries::ConfigurationError("cannot open config file '" + path + "'");
  return slurp(in);
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Computations in q-commutative power series rings"};
  std::string command;
  std::string config_path;
  int precision = 0;
  std::string output = "json";
  std::vector<std::string> args;

  std::string names;
  for (const auto& n : qseries::cli::command_names())
    names += (names.empty() ? "" : ", ") + n;
  app.add_option("subcommand", command, "One of: " + names)->required();
  app.add_option("args", args, "Subcommand arguments; '-' reads a series from stdin");
  app.add_option("-c,--config", config_path, "Ring configuration (JSON); '-' reads stdin")->required();
  app.add_option("-p,--precision", precision, "Truncation degree d (default 8 or the config value)")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", output, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.positionals_at_end(false);
  CLI11_PARSE(app, argc, argv);

  try {
    bool stdin_used = config_path == "-";
    qseries::cli::RingConfig cfg = qseries::cli::parse_config(read_config(config_path));
    if (precision > 0)
      cfg.precision = precision;
    for (auto& a : args) {
      if (a != "-")
        continue;
      if (stdin_used)
        throw qseries::ConfigurationError("stdin can supply only one input");
      stdin_used = true;
      std::string text = slurp(std::cin);
      while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.pop_back();
      a = text;
    }
    const auto format = qseries::cli::parse_output_format(output);
    const auto result = qseries::cli::run_command(command, cfg, args);
    std::cout << qseries::cli::render(result, format, command);
    return 0;
  }
  catch (const qseries::cli::CommandError& e) {
    std::cerr << "qcli " << e.what() << "\n";
    return 2;
  }
  catch (const std::exception& e) {
    std::cerr << "qcli " << command << ": " << e.what() << "\n";
    return 2;
  }
}
