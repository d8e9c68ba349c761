// Acceptance suite: runs the full property checks and prints one line per
// criterion. Exits nonzero if any fails.

#include <cstdio>

#include "simplexflows/selfcheck.hpp"

int main() {
  const auto results = simplexflows::run_selfcheck({});
  bool ok = true;
  for (const auto& r : results) {
    std::printf("%s  %-34s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.detail.c_str());
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
