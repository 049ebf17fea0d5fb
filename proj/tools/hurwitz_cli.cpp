#include <iostream>

#include "hurwitz/cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv, argv + argc);
  auto const result = hurwitz::cli::run(args);
  if (result.exit_code == hurwitz::cli::exit_code::usage)
    std::cerr << result.text;
  else if (result.json_output)
    std::cout << result.payload.dump(2) << "\n";
  else
    std::cout << result.text;
  return result.exit_code;
}
