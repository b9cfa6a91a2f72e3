#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arp::cli {

// Full command-line surface. Returns the process exit status:
//   0 success, 1 verify found a counterexample, 2 usage error,
//   3 out-of-range / refused input.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace arp::cli
