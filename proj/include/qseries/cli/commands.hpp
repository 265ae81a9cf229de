#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qseries/cli/config.hpp"
#include "qseries/spectrum.hpp"

namespace qseries::cli {

enum class OutputFormat { Json, Text, Dot };

OutputFormat parse_output_format(const std::string& name);

struct CommandResult {
  nlohmann::json document;
  std::string summary;
  // Only set by commands with a graph view.
  std::string dot;
};

// Raised for any failure inside a subcommand; what() starts with the
// subcommand name.
class CommandError : public std::runtime_error {
public:
  CommandError(const std::string& command, const std::string& message)
      : std::runtime_error(command + ": " + message), command_(command)
  {
  }
  const std::string& command() const noexcept { return command_; }

private:
  std::string command_;
};

const std::vector<std::string>& command_names();

CommandResult run_command(const std::string& command, const RingConfig& cfg, const std::vector<std::string>& args);

std::string render(const CommandResult& result, OutputFormat format, const std::string& command);

nlohmann::json report_to_json(const SpectrumReport& report);
nlohmann::json series_to_json(const QMatrix& q, const LaurentElem& a);

} // namespace qseries::cli
