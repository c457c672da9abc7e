// Runs the acceptance criteria and prints one [PASS]/[FAIL] line per criterion.
// Usage: acceptance [-v] [id ...]
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "intspec/acceptance.hpp"

int main(int argc, char** argv)
{
  bool verbose = false;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "-v")) verbose = true;
    else only.push_back(std::stoi(argv[i]));
  }
  int failed = 0;
  intspec::run_acceptance(only, [&](const intspec::CriterionResult& r) {
    std::printf("[%s] %d %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
    if (verbose || !r.pass)
      for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  });
  return failed ? 1 : 0;
}
