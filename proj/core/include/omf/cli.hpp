#ifndef OMF_CLI_HPP
#define OMF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace omf {

/// Run the om-factor command line. Returns the process exit code:
/// 0 success, 1 user error, 2 internal invariant failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace omf

#endif
