#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "cotv_cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto res = cotv::cli::run(args, [] {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  });
  std::cout << res.out;
  std::cerr << res.err;
  return res.code;
}
