#include <cstdio>
#include <cstdlib>
#include <string>

#include "hgreedy/acceptance.hpp"

int main(int argc, char** argv) {
  hgreedy::acceptance::Options opt;
  opt.threads = hgreedy::default_threads();
  if (const char* s = std::getenv("HG_SEED")) opt.seed = std::stoull(s);
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  int failed = 0;
  const auto results = hgreedy::acceptance::run_all(opt, ids, [&](const auto& r) {
    std::printf("%s\n", hgreedy::acceptance::format_line(r).c_str());
    std::fflush(stdout);
    failed += !r.passed;
  });
  std::printf("%zu/%zu criteria passed\n", results.size() - static_cast<std::size_t>(failed), results.size());
  return failed == 0 ? 0 : 1;
}
