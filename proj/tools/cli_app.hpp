#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eao::cli {

/// Runs one command line (without the program name). JSON results go to
/// `out`; diagnostics and timings go to `err`. Returns the exit status:
/// 0 success, 1 domain error or failed verification, 2 malformed input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace eao::cli
