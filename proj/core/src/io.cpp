#include "manin/io.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace manin {

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next line that is not blank, or nullopt at end of input.
  std::optional<Line> next() {
    while (offset_ < text_.size()) {
      std::size_t end = text_.find('\n', offset_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(offset_, end - offset_);
      offset_ = end + 1;
      ++number_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.find_first_not_of(" \t\f\v") != std::string_view::npos) return Line{number_, line};
    }
    return std::nullopt;
  }

  std::size_t eof_line() const { return number_ + 1; }

 private:
  std::string_view text_;
  std::size_t offset_ = 0;
  std::size_t number_ = 0;
};

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Integer parse_integer(std::string_view token, std::size_t line) {
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  bool ok = start < token.size();
  for (std::size_t i = start; ok && i < token.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(token[i])) != 0;
  if (!ok) {
    throw ParseError(ParseErrorKind::non_integer, line, "expected an integer, got '" + std::string(token) + "'");
  }
  return Integer(std::string(token.substr(token[0] == '+' ? 1 : 0)), 10);
}

std::vector<Integer> parse_row(const Line& line, std::size_t expected, const char* what) {
  const auto tokens = split_tokens(line.text);
  if (tokens.size() != expected) {
    std::ostringstream os;
    os << what << " has " << tokens.size() << " entries, expected " << expected;
    throw ParseError(ParseErrorKind::token_count, line.number, os.str());
  }
  std::vector<Integer> row;
  row.reserve(expected);
  for (auto t : tokens) row.push_back(parse_integer(t, line.number));
  return row;
}

Line require_line(LineReader& reader, const char* what) {
  auto line = reader.next();
  if (!line) {
    throw ParseError(ParseErrorKind::missing_lines, reader.eof_line(), std::string("unexpected end of input, expected ") + what);
  }
  return *line;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\f\v");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\f\v");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t to_size(const Integer& v, std::size_t line, const char* what) {
  if (sgn(v) < 0) throw ParseError(ParseErrorKind::negative_count, line, std::string(what) + " must be nonnegative");
  if (!v.fits_ulong_p()) throw ParseError(ParseErrorKind::non_integer, line, std::string(what) + " is too large");
  return static_cast<std::size_t>(v.get_ui());
}

}  // namespace

ParsedOperad parse_operad_file(std::string_view text, std::string label) {
  LineReader reader(text);

  const Line header = [&] {
    auto l = reader.next();
    if (!l) throw ParseError(ParseErrorKind::missing_header, 1, "empty input, expected dim E");
    return *l;
  }();
  const std::size_t n = to_size(parse_row(header, 1, "header")[0], header.number, "dim E");

  IntMatrix action(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = parse_row(require_line(reader, "an action matrix row"), n, "action matrix row");
    std::copy(row.begin(), row.end(), action.row(i).begin());
  }

  const Line count_line = require_line(reader, "the number of relations");
  const auto count_tokens = split_tokens(count_line.text);
  const std::size_t m = to_size(parse_integer(count_tokens.front(), count_line.number), count_line.number,
                                "number of relations");
  std::string comment;
  {
    const auto tail = count_line.text.substr(count_line.text.find(count_tokens.front()) + count_tokens.front().size());
    comment = trim(tail);
  }
  if (n == 0 && m != 0) {
    throw ParseError(ParseErrorKind::token_count, count_line.number, "dim E = 0 admits no relation rows");
  }

  std::vector<IntVector> rows;
  rows.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    rows.push_back(parse_row(require_line(reader, "a relation row"), e3_dim(n), "relation row"));
  }

  if (label.empty()) label = comment;
  try {
    Validation v = validate_presentation(n, action, rows, std::move(label));
    return {std::move(v.presentation), std::move(comment), v.supplied_rank};
  } catch (const InvalidActionError& e) {
    throw InvalidActionError("line " + std::to_string(header.number) + ": " + e.what());
  }
}

OperadPresentation parse_operad(std::string_view text, std::string label) {
  return parse_operad_file(text, std::move(label)).presentation;
}

std::string write_operad(const OperadPresentation& p, std::string_view comment) {
  if (!is_integral(p.action())) throw Error("write_operad: action matrix has non-integer entries");
  std::ostringstream os;
  os << p.n() << '\n';
  for (std::size_t i = 0; i < p.n(); ++i) {
    for (std::size_t j = 0; j < p.n(); ++j) os << (j ? " " : "") << p.action()(i, j).get_num();
    os << '\n';
  }
  std::string flat_comment(comment);
  for (auto& c : flat_comment) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  os << p.relations().dim();
  if (!flat_comment.empty()) os << ' ' << flat_comment;
  os << '\n';
  for (const auto& r : p.relations().rows()) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
    os << '\n';
  }
  return os.str();
}

std::string amx_relation(const OperadPresentation& p, std::span<const Integer> v) {
  if (v.size() != e3_dim(p.n())) throw DimensionError("amx_relation: vector length is not 3n^2");
  std::ostringstream os;
  bool first = true;
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (sgn(v[pos]) == 0) continue;
    const E3Index b = E3Index::from_flat(p.n(), pos);
    if (!first) os << ' ';
    os << (sgn(v[pos]) > 0 ? "+" : "-") << abs(v[pos]) << '(' << coset_name(b.rho) << ")\\otimes_{S_2}(a_{" << b.p
       << "}\\otimes a_{" << b.q << "})";
    first = false;
  }
  return os.str();
}

std::string write_amx(const OperadPresentation& p) {
  std::ostringstream os;
  os << "Space of operations $E$: $a_{1}, \\dots , a_{" << p.n() << "}$\n\n";
  os << "$S_2$ acts by:\n$$\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < p.n(); ++i) {
    for (std::size_t j = 0; j < p.n(); ++j) os << (j ? " & " : "") << p.action()(i, j).get_str();
    os << " \\\\\n";
  }
  os << "\\end{pmatrix} $$\n";
  if (p.relations().empty()) return os.str();
  os << "Relations:\n";
  for (const auto& r : p.relations().rows()) os << "\n$" << amx_relation(p, r) << " $\n";
  return os.str();
}

}  // namespace manin
