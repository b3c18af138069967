#include <iostream>

#include "braidsplit/cli/commands.hpp"

int main(int argc, char **argv)
{
  return braidsplit::cli::run_main(argc, argv, std::cout, std::cerr);
}
