#ifndef ARFSEMI_CLI_HPP_
#define ARFSEMI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "arfsemi/semigroup.hpp"

namespace arfsemi::cli {

  enum exit_code : int { ok = 0, domain_failure = 1, usage_failure = 2 };

  //! Parses "a,b,c" (whitespace anywhere is ignored).  Throws input_error on
  //! an empty list, an empty item, or a non-integer item.
  std::vector<integer> parse_list(std::string const& text);

  //! Runs one command.  \p args excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace arfsemi::cli

#endif  // ARFSEMI_CLI_HPP_
