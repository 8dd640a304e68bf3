#pragma once

#include <ostream>

namespace pdc::cli {

/// Entry point of the pdcsq tool. Returns the process exit code:
/// 0 success, 2 usage, 3 domain/validity, 4 solver failure, 5 I/O.
/// Errors go to `err` as one line: "<CODE>: <message>".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdc::cli
