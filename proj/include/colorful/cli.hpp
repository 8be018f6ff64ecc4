#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace colorful::cli {

/// Runs the command-line driver on args (program name excluded), writing
/// results to out and diagnostics to err. Returns the process exit status:
/// 0 on success, nonzero on invalid input or any verification mismatch.
/// Successful commands write their output in one piece, so error paths never
/// leave partial tables behind.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace colorful::cli
