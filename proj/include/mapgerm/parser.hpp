#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapgerm/germ.hpp"

namespace mapgerm {

/// Syntax or semantic error in germ input, positioned at a 1-based line and column.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

struct GermExpression {
  std::string source;
  MapGerm germ;
  std::vector<std::string> variables;
};

/// Parses "(expr, expr, ...)" over + - * / ^, integer literals and
/// identifiers. Without `variables` they are inferred in order of first
/// appearance; with it, any other identifier is an error. Division is only
/// allowed by a nonzero constant.
GermExpression parse_germ(const std::string& text, const std::vector<std::string>& variables = {});

/// A single polynomial expression over the given variables.
Poly parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

/// Splits "x,y,z" into names, trimming blanks.
std::vector<std::string> split_names(const std::string& list);

}  // namespace mapgerm
