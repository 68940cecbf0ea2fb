#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "splitcircle/poly.hpp"

namespace splitcircle::cli {

enum class Command { factor, roots, count, modmax, modmin, mod };
enum class Format { text, json };

struct JobConfig {
  Command command = Command::roots;
  std::string eps = "1e-20";
  unsigned precision_bits = 128;
  std::string disk_radius = "1";  ///< count only
  int k_index = 1;                ///< mod only
  double tau = 0.01;              ///< count, modmax, modmin, mod
  std::string input_path = "-";   ///< "-" reads stdin
  std::string output_path;        ///< empty writes to the output stream
  Format format = Format::text;
};

/// Malformed polynomial text. line() is 1-based, 0 when no single line is at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// One coefficient per line as "re im", ascending degree; '#' starts a
/// comment. Decimals are rounded to nearest at `bits`.
Poly parse_poly(std::string_view text, unsigned bits);

/// Runs one job. Returns 0 on success, 1 on usage or parse errors and 2 on
/// numerical failure; diagnostics go to `err`.
int run(const JobConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace splitcircle::cli
