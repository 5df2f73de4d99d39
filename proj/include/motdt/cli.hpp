#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace motdt {

// Exit codes: 0 ok, 2 input error, 3 mathematical inconsistency,
// 1 unexpected internal failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMath = 3;

struct CliConfig {
  std::string subcommand;
  std::string potential;
  int order = 8;
  bool order_given = false;  // --order or MOTDT_ORDER
  std::string format = "text";
  std::string file;
  std::string out;
  bool inverse = false;
  std::string suite = "all";
  std::uint64_t seed = 42;
  long max_d = 8;
};

int cmd_dt(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_resolution(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_sym(const CliConfig& c, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace motdt
