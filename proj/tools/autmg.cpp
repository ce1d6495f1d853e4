#include <iostream>
#include <string>
#include <vector>

#include "autmg/cli.hpp"

int main(int argc, char** argv)
{
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = autmg::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
