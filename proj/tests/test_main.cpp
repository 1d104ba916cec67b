#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "support.hpp"

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      lnd::test::seed() = std::stoull(argv[i] + 7);
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      lnd::test::seed() = std::stoull(argv[++i]);
    } else {
      rest.push_back(argv[i]);
    }
  }
  doctest::Context ctx;
  ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
