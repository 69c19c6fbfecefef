// Acceptance gate: runs the full verification suite and prints one
// pass/fail line per item. Exit status 0 only when everything passes.

#include <iostream>

#include "psik/verify.hpp"

int main() {
  const auto results = psik::run_verification();
  int failures = 0;
  for (const auto& r : results) {
    const bool failed = r.status == psik::CheckStatus::Fail;
    failures += failed ? 1 : 0;
    std::cout << (failed ? "[FAIL] " : "[PASS] ") << r.id << "  " << r.description;
    if (failed) std::cout << "  -- " << r.detail;
    std::cout << '\n';
  }
  if (failures > 0) {
    std::cout << failures << " item(s) failed\n";
    return 1;
  }
  std::cout << "all " << results.size() << " items passed\n";
  return 0;
}
