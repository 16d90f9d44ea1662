#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace smallcancel {

/// Runs one command line (without the program name). Reports go to `out`
/// unless --out is given; diagnostics and usage text go to `err`.
/// Returns 0 Holds/success, 1 Violated, 2 Inconclusive, 3 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace smallcancel
