// Runs the acceptance criteria and prints one line per criterion.
// Exit status is 0 only when every criterion passes, unless --report-only.

#include <chrono>
#include <cstring>
#include <iostream>

#include "hb/checks.hpp"

int main(int argc, char** argv) {
  const bool report_only = argc > 1 && std::strcmp(argv[1], "--report-only") == 0;
  int index = 0, failed = 0;
  for (auto& c : hb::acceptance_checks()) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    hb::CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {c.name, false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.pass) ++failed;
    std::cout << "[" << (r.pass ? "PASS" : "FAIL") << "] " << index << " " << c.name << " (" << secs << " s): " << r.detail
              << std::endl;
  }
  std::cout << failed << " of " << index << " criteria failed" << std::endl;
  return report_only || failed == 0 ? 0 : 1;
}
