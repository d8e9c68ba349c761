#include "simplexflows/selfcheck.hpp"

#include <chrono>
#include <sstream>

#include "simplexflows/group.hpp"

namespace simplexflows {

std::vector<SelfcheckResult> run_selfcheck(const SelfcheckOptions& options) {
  (void)options;
  std::vector<SelfcheckResult> results;
  const auto start = std::chrono::steady_clock::now();
  const VerificationReport group = verify_group_suite();
  SelfcheckResult item;
  item.name = "group-suite";
  item.pass = group.all_pass();
  item.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  results.push_back(item);
  return results;
}

std::string format_selfcheck(const std::vector<SelfcheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) out << "  [" << r.detail << "]";
    out << '\n';
  }
  return out.str();
}

}  // namespace simplexflows
