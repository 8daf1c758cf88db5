#pragma once

#include <ostream>

namespace splitoct {

// Full command-line front end. Returns the process exit code:
//   0  success (including expected findings)
//   1  unexpected mismatch or internal error
//   2  usage error
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace splitoct
