#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gvkit::cli {

/// Runs one command. `args` excludes the program name. Input is read from
/// --input (or `in` when absent or "-"), output goes to --output (or `out`),
/// errors are written to `err` as a JSON object. Returns the exit status:
/// 0 success, 1 malformed input or failed precondition, 2 failed residual or
/// integrality check.
int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

} // namespace gvkit::cli
