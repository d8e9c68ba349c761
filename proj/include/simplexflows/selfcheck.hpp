#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace simplexflows {

struct SelfcheckOptions {
  uint64_t seed = 2024;
  bool verbose = false;
};

struct SelfcheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full property suite (one entry per claim the library is built
/// around) and returns one pass/fail record per item. Deterministic for a
/// given seed.
std::vector<SelfcheckResult> run_selfcheck(const SelfcheckOptions& options = {});

/// Renders the table exactly as the CLI prints it.
std::string format_selfcheck(const std::vector<SelfcheckResult>& results);

}  // namespace simplexflows
