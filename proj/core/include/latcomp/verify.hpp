#pragma once

#include <string>
#include <vector>

namespace latcomp::verify {

struct CriterionResult {
  std::string id;
  std::string scope;
  bool pass = false;
  std::string detail;
};

struct Options {
  bool heavy = false;  // include the opt-in large free-algebra closure
  int jobs = 1;
};

/// Suite sections, in execution order.
std::vector<std::string> scopes();

/// Runs the verification suite for one scope (or "all"); throws BadParams
/// on an unknown scope. Results are deterministic, byte for byte, for any
/// job count.
std::vector<CriterionResult> run(const std::string& scope, const Options& opts = {});

}  // namespace latcomp::verify
