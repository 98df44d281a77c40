#include <iostream>
#include <string>
#include <vector>

#include "derangebij/cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return derangebij::cli::run(args, std::cout, std::cerr);
}
