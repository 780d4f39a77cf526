#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ntf::cli {

// Runs one command. Payload goes to `out`, diagnostics to `err`.
// Exit status: 0 success, 1 usage or runtime error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ntf::cli
