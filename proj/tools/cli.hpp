#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "toricgp/io/json.hpp"

namespace toricgp::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kBudgetExceeded = 3;

// Runs one command line (args[0] is the program name). Reports go to out,
// diagnostics to err.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

// Human-readable rendering of any JSON document produced by run().
std::string render_text(const io::Json &doc);

} // namespace toricgp::cli
