#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qrep/error.hpp"

namespace qrep {

// Exit statuses: 0 ok, 1 usage, 2 parse error, 3 precondition, 4 field guard.
int exit_code_for(ErrorCode code);

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrep
