#pragma once

#include <iosfwd>

namespace subnetrel::cli {

// Parses argv and executes one command, writing the serialized result to out
// and diagnostics to err.
//
// Exit codes: 0 success (including verification mismatches without --strict),
// 1 bad arguments, 2 mismatch under verify --strict, 3 capacity exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace subnetrel::cli
