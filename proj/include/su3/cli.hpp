#pragma once

#include <iosfwd>

namespace su3 {

/// Entry point of su3tool. Returns 0 on success, 1 on validation failures and
/// 2 on argument errors; diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace su3
