#pragma once

#include <ostream>

namespace lpakk::cli {

/// Exit codes: 0 success, 1 domain error (bad input data, failed self-test),
/// 2 usage error. Diagnostics go to `err` as "error: <code>: <message>".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpakk::cli
