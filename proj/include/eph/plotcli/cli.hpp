#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eph::plot {

// Exit codes: 0 success, 1 verification failure or runtime error, 2 bad flags.
int cli_main(const std::vector<std::string> &args, std::ostream &out,
             std::ostream &err);
int cli_main(int argc, char **argv);

} // namespace eph::plot
