#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "smallcancel/complex.hpp"
#include "smallcancel/report.hpp"

namespace smallcancel {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Checks closedness and immersion of every boundary word and, when
/// `require_embedded` is set, that no boundary visits a vertex twice.
CheckReport validate_complex(const TwoComplex& X, bool require_embedded);

/// Parses the line-based complex format without validating boundary words.
ComplexDescription parse_complex(std::string_view text);

/// Parses and validates (immersed, closed boundary words). Throws ParseError or
/// ValidationError.
TwoComplex load_complex(std::string_view text);
TwoComplex load_complex_file(const std::string& path);

/// Canonical form: sections vertex/edge/face, each sorted by identifier.
std::string serialize(const TwoComplex& X);

bool is_identifier(std::string_view token);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace smallcancel
