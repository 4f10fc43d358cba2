#pragma once

namespace speczeta::cli {

// Parses and executes one command-line invocation.  Returns 0 on success,
// 1 when a verification run reports failing checks, and 2 on usage errors
// (unknown flags, out-of-range indices, parity mismatches, and the like).
int run(int argc, char** argv);

}  // namespace speczeta::cli
