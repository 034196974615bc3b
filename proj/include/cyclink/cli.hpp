#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclink::cli {

// Exit codes: 0 success (undefined values are reported in-band), 2 malformed
// input or usage, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclink::cli
