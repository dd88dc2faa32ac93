#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mdeform::cli {

/// Exit codes: 0 success, 1 a verification failed (witness on err), 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdeform::cli
