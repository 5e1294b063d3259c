// SPDX-License-Identifier: Apache-2.0
//
// Prints one line per acceptance criterion and exits nonzero if any fails.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "delaylab/verification.hpp"

int main(int argc, char** argv) {
  delaylab::VerifyOptions o;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--workers") == 0) o.workers = std::strtoul(argv[i + 1], nullptr, 10);
    if (std::strcmp(argv[i], "--seed") == 0) o.seed = std::strtoull(argv[i + 1], nullptr, 10);
  }
  const auto rows = delaylab::run_acceptance(o);
  int failed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::printf("criterion %2zu %-24s %s  %s\n", i + 1, rows[i].name.c_str(),
                rows[i].passed ? "PASS" : "FAIL", rows[i].detail.c_str());
    failed += rows[i].passed ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", rows.size() - static_cast<std::size_t>(failed), rows.size());
  return failed == 0 ? 0 : 1;
}
