#pragma once

// Presentation files and result.amx reports.
//
// File layout (blank lines allowed between logical lines):
//   n
//   n lines of n integers: row i = coordinates of e_i^(12)
//   m [comment]
//   m lines of 3n^2 integers in the standard basis of E(3)
//   anything else (ignored)

#include <cstddef>
#include <string>
#include <string_view>

#include "manin/operad.hpp"

namespace manin {

enum class ParseErrorKind {
  missing_header,
  non_integer,
  token_count,
  negative_count,
  missing_lines,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  /// 1-based; one past the last line for premature end of input.
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

struct ParsedOperad {
  OperadPresentation presentation;
  std::string comment;            // text after m on the count line
  std::size_t supplied_rank = 0;  // rank of the listed relations before S3 closure

  bool closure_enlarged() const { return presentation.relations().dim() != supplied_rank; }
};

/// Throws ParseError on malformed text and InvalidActionError (prefixed
/// with the line of n) when the matrix is not an involution.
ParsedOperad parse_operad_file(std::string_view text, std::string label = {});
OperadPresentation parse_operad(std::string_view text, std::string label = {});

/// Inverse of parse_operad. Throws Error when the action matrix is not integral.
std::string write_operad(const OperadPresentation& p, std::string_view comment = {});

/// Human-readable report in TeX markup.
std::string write_amx(const OperadPresentation& p);

/// One relation as "+1(id)\otimes_{S_2}(a_{1}\otimes a_{1}) -1(13)...".
std::string amx_relation(const OperadPresentation& p, std::span<const Integer> v);

}  // namespace manin
