// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "morlog/verify/acceptance.hpp"

#ifndef MORLOG_CLI_PATH
#error "MORLOG_CLI_PATH must point at the morlog executable"
#endif

int main() {
  const uint64_t seed = 20240501;
  int failed = 0;
  for (const auto& r : morlog::verify::run_acceptance(seed)) {
    std::printf("%s criterion %d: %s [%s] (%.2f s) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.anchor.c_str(), r.seconds, r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::fflush(stdout);

  const std::string cmd = std::string(MORLOG_CLI_PATH) + " selftest --format text > /dev/null";
  auto start = std::chrono::steady_clock::now();
  int status = std::system(cmd.c_str());
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = status == 0 && seconds < 300;
  std::printf("%s criterion 14: selftest exits 0 within 5 minutes (%.2f s, status %d)\n", ok ? "PASS" : "FAIL",
              seconds, status);
  if (!ok) ++failed;
  return failed == 0 ? 0 : 1;
}
