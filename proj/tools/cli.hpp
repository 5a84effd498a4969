#pragma once

#include "glinf/weights.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace glinf::cli {

enum class ExitCode : int { Ok = 0, Violation = 1, Usage = 2 };

enum class Format { Table, Json, Csv };

struct RunConfig {
  std::string command;
  std::optional<HighestWeight> lambda;
  std::optional<HighestWeight> mu;
  unsigned m_max = 6;
  std::optional<std::size_t> n_override;
  std::string output;  // empty: standard output
  Format format = Format::Table;
  std::uint64_t seed = 42;
  bool validate = false;
  bool reduced = false;
  std::string fixture;  // oracle-check: write the module fixture here
  bool inject_mutation = false;
};

/// Throws std::invalid_argument (usage error) when the config breaks the
/// m cap, the rank bound or a command's required inputs.
void validate_config(const RunConfig& cfg);

/// Executes one subcommand, writing the formatted result to `out`.
ExitCode execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace glinf::cli
