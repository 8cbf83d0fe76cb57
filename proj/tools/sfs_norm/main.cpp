#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::optional<std::string> env;
  if (const char* v = std::getenv("SFS_NORM_MU_WINDOW")) env = v;
  return sfs::cli::run(args, std::cout, std::cerr, env);
}
