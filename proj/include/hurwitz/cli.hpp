#ifndef HURWITZ_CLI_HPP
#define HURWITZ_CLI_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/json_io.hpp"

namespace hurwitz::cli
{

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int negative = 3;
inline constexpr int budget = 4;
inline constexpr int usage = 64;
} // namespace exit_code

struct CommandResult
{
  int exit_code = exit_code::ok;
  json payload;       // null for usage errors and help
  std::string text;   // human-readable rendering or usage text
  bool json_output = false;
};

// Exit code implied by a payload "status" value.
int exit_code_for_status(std::string_view status);

// argv[0] is the program name.
CommandResult run(std::vector<std::string> const &argv);

} // namespace hurwitz::cli

#endif
