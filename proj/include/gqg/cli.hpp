#ifndef GQG_CLI_HPP
#define GQG_CLI_HPP

// Command dispatch for the `gqg` tool:
//
//   gqg synth <scrofulous|w1|w1-sandwich|trotter-suzuki|naive|ohta>
//       --theta <deg> [--branch principal|mirrored] [--phase <deg>]
//       [--out dsl|json]
//   gqg analyze <file|-> [--n0 x,y,z]
//   gqg sweep <file|-> --target <dsl|auto> --eps-min <f> --eps-max <f>
//       --points <n> [--csv <path>]
//   gqg verify <file|-> [--n0 x,y,z]
//
// Data goes to `out`, diagnostics to `err`.

#include <iosfwd>
#include <string>
#include <vector>

namespace gqg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kParse = 3,
};

/// `args` excludes the program name.
int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

} // namespace gqg::cli

#endif // GQG_CLI_HPP
