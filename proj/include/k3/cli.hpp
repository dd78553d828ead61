#pragma once

#include <ostream>

namespace k3::cli {

// Runs the k3sixteen command line. Returns 0 on success, 1 when --check finds
// a mismatch, 2 on usage, parse or library errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace k3::cli
