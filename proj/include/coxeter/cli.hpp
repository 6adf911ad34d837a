#ifndef COXETER_CLI_HPP_
#define COXETER_CLI_HPP_

// Command-line front end. Every subcommand prints one JSON envelope
//   {"status": ok|error|undecided, "command": ..., "payload": {...}, "diagnostics": [...]}
// on `out` and returns the process exit code.

#include <iosfwd>
#include <string>
#include <vector>

namespace coxeter::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitUndecided = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxeter::cli

#endif  // COXETER_CLI_HPP_
