#ifndef ZDGRAPH_CLI_HPP_
#define ZDGRAPH_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace zdg::cli {

  //! Exit codes.
  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_error        = 1;  // usage or construction
  inline constexpr int exit_check_failed = 2;

  //! Entry point of the zdgraph tool. `args` excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace zdg::cli

#endif  // ZDGRAPH_CLI_HPP_
