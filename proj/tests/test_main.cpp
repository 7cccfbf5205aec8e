#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include <gtest/gtest.h>

#include "support.hpp"

namespace {
std::uint64_t run_seed = 20240611;
}

std::uint64_t twistlab::testing::seed() { return run_seed; }

// Accepts --seed N / --seed=N (or TWISTLAB_SEED) besides the usual gtest flags.
int main(int argc, char** argv) {
  if (const char* env = std::getenv("TWISTLAB_SEED")) run_seed = std::stoull(env);
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc)
      run_seed = std::stoull(argv[++i]);
    else if (a.rfind("--seed=", 0) == 0)
      run_seed = std::stoull(a.substr(7));
    else
      argv[out++] = argv[i];
  }
  argc = out;
  std::cout << "seed " << run_seed << "\n";
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
