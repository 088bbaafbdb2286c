#pragma once

// Plain-text formats.
//
// Cone file: a header line `n dim count kind` (kind H or V) followed by
// `count` lines of `dim` integers in pair order 12, 13, ..., (n-1)n. Lines
// starting with '#' and blank lines are ignored.
//
// B-vector file: one integer n-vector per line.
// Graph file: `n m`, then m lines `i j` with 1-based vertices.

#include "hypercone/cone.hpp"
#include "hypercone/hypermetric.hpp"

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace hypercone {

/// Unreadable or malformed input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

using Cone = std::variant<HCone, VCone>;

Cone read_cone(std::istream& in, const std::string& source = "<input>");
Cone read_cone_file(const std::string& path);

void write_cone(std::ostream& out, const HCone& c);
void write_cone(std::ostream& out, const VCone& c);
void write_cone(std::ostream& out, const Cone& c);

/// A single pair-indexed vector: either a bare line of integers or a cone
/// file holding exactly one vector.
IntVector read_vector(std::istream& in, const std::string& source = "<input>");

std::vector<BVector> read_bvectors(std::istream& in, const std::string& source = "<input>");
SimpleGraph read_graph(std::istream& in, const std::string& source = "<input>");

/// Opens `path` for reading; throws InputError if it cannot.
std::ifstream open_input(const std::string& path);

}  // namespace hypercone
