/* Runs the end-to-end verification suite and prints one line per claim,
 * with the evidence lines shown for any claim that fails.  Exit status is
 * nonzero when any claim fails.
 */
#include "nlie/reproduce.hpp"

#include <chrono>
#include <cstdio>

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<nlie::ClaimResult> results = nlie::run_reproduction_suite();
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);

  int failed = 0;
  for (const nlie::ClaimResult& c : results) {
    std::printf("%s %d - %s\n", c.pass ? "ok" : "not ok", c.number,
                c.label.c_str());
    if (!c.pass) {
      ++failed;
      for (const std::string& line : c.details)
        std::printf("  %s\n", line.c_str());
    }
  }
  std::fprintf(stderr, "verification suite: %d/%d claims passed in %ld ms\n",
               static_cast<int>(results.size()) - failed,
               static_cast<int>(results.size()),
               static_cast<long>(elapsed.count()));
  return failed == 0 ? 0 : 1;
}
