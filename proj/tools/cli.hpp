#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitpre::cli {

  // Exit codes shared by the subcommands.
  enum Exit : int {
    ok              = 0,
    failure         = 1,  // parse error, failed law, or "distinct"
    size_mismatch   = 2,  // also: any error of proofeq
    bound_exceeded  = 3,
  };

  // Runs the command line tool on args (without the program name).
  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace splitpre::cli
