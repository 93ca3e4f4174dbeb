#include <cstdio>
#include <cstdlib>
#include <string>

#include "stabpoly/catalog.hpp"
#include "stabpoly/verify.hpp"

using namespace stabpoly;

int main(int argc, char** argv) {
  VerifyContext ctx;
  int first = 1, last = 10;
  if (argc > 1) first = last = criterion_id(argv[1]);
  if (!first) {
    std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
    return 2;
  }
  if (const char* path = std::getenv("STABPOLY_CATALOG")) ctx.set_catalog(load_catalog(path));
  int failed = 0;
  for (int id = first; id <= last; ++id) {
    const CriterionResult r = run_criterion(id, ctx);
    failed += !r.passed;
    std::printf("criterion %2d %s  %s (%.1fs): %s\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
