#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace latcomp::cli {

struct CommandResult {
  int exit_code = 0;             // 0 ok, 1 fail, 2 usage, 3 input, 4 budget
  std::string report;            // human-readable text
  nlohmann::ordered_json payload;  // machine-readable form
  bool json_mode = false;
};

/// Parses and executes one command line (without the program name).
CommandResult run(const std::vector<std::string>& args);

/// Prints the result (payload when --json was given) and returns the code.
int main_entry(int argc, char** argv);

}  // namespace latcomp::cli
