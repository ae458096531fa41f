#pragma once

#include <iosfwd>

namespace crnx {

// Exit codes: 0 completed (any verdict), 2 input error, 3 cap exceeded.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crnx
