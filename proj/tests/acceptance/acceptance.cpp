// Desk acceptance suite: one line per criterion, then a determinism
// re-check across two full suite runs.
#include <cstdio>
#include <string>

#include "u21/verify.hpp"

int main(int argc, char** argv) {
  u21::verify::Options opt;
  if (argc > 1) opt.seed = std::stoull(argv[1]);
  auto s = u21::verify::run("desk", opt);
  int failures = 0;
  for (const auto& r : s.criteria) {
    std::printf("%s %-4s %-32s %7.2fs", r.ok() ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(), r.seconds);
    if (r.limit_seconds > 0) std::printf(" (limit %.0fs)", r.limit_seconds);
    std::printf("\n");
    for (const auto& d : r.diffs) std::printf("     %s\n", d.c_str());
    failures += !r.ok();
  }
  std::printf("%d of %zu criteria failed\n", failures, s.criteria.size());
  return failures == 0 ? 0 : 1;
}
