#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rexosc {

// Entry point shared by the rexosc binary and the CLI tests.  Returns the
// process exit code: 0 on success (and all requested checks passing), 1 on
// domain or verification failure, 2 on usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rexosc
