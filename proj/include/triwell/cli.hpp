#pragma once

namespace triwell {

// Exit codes: 0 success, 1 invalid arguments, 2 bad matrix or state file,
// 3 unwritable output path, 4 GHZ-type outcome found by the no-go scan.
int run_cli(int argc, const char* const* argv);

}  // namespace triwell
