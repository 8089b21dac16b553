#include <cstdio>
#include <cstring>

#include "zs/acceptance.hpp"

// Usage: acceptance [group-or-number] [--show-rows]
int main(int argc, char** argv) {
  zs::AcceptanceOptions opt;
  bool rows = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--show-rows") == 0) rows = true;
    else opt.only = argv[i];
  }
  int failed = 0;
  for (const auto& r : zs::runAcceptance(opt)) {
    std::printf("%s criterion %d [%s] %s: %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.group.c_str(),
                r.title.c_str(), r.detail.c_str(), r.seconds);
    for (const auto& row : r.rows)
      if (rows || !row.pass)
        std::printf("    %s %s: computed %s, expected %s\n", row.pass ? "ok  " : "FAIL", row.quantity.c_str(),
                    row.computed.c_str(), row.expected.c_str());
    failed += !r.pass;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
