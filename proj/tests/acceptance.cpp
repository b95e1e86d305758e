// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit status is the number of
// failed criteria.

#include <cstdio>
#include <string>

#include "semicross/verify.hpp"

int main(int argc, char** argv) {
  semicross::RunConfig cfg;
  if (argc > 1) cfg.seed = std::stoull(argv[1]);

  int failures = 0;
  double total = 0.0;
  const auto progress = [&](const semicross::CheckResult& r) {
    std::printf("[%s] %-32s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failures;
    total += r.seconds;
  };

  semicross::run_verification(cfg, /*acceptance_only=*/true, progress);
  std::printf("%d of 10 acceptance criteria failed (%.1fs total)\n", failures, total);
  return failures;
}
