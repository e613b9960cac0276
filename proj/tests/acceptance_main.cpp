// Acceptance suite: runs the built-in verification checklist and prints one
// pass/fail line per criterion. Exit code 0 iff every executed check passed.
//
//   itriple_acceptance [--only <check-name>]

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <string>

#include "itriple/verify.hpp"

int main(int argc, char **argv) {
  std::string only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--only <check-name>]\n", argv[0]);
      return 1;
    }
  }

  itriple::Config cfg;
  std::vector<itriple::CheckResult> results;
  try {
    results = itriple::run_paper_checks(cfg, only);
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  bool all_pass = true;
  for (const auto &r : results) {
    all_pass = all_pass && r.pass;
    std::printf("%s %s (%.0f ms): %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.millis,
                r.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n",
              static_cast<std::size_t>(
                  std::count_if(results.begin(), results.end(),
                                [](const auto &r) { return r.pass; })),
              results.size());
  return all_pass ? 0 : 1;
}
