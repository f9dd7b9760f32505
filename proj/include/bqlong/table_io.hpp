#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bqlong/biquandle.hpp"

// Plain-text operation tables:
//
//   biquandle v1
//   n=<int>
//   up:
//   <n lines of n indices, row a column b = a^b>
//   down:
//   <n lines of n indices, row a column b = a_b>
//   names:            (optional)
//   <n lines "<index> <display-name>">

namespace bqlong {

inline void write_table(std::ostream& out, const OperationTables& t) {
  t.validate_shape();
  out << "biquandle v1\n" << "n=" << t.n << "\n";
  auto rows = [&](const char* label, const std::vector<Element>& table) {
    out << label << ":\n";
    for (std::size_t a = 0; a < t.n; ++a) {
      for (std::size_t b = 0; b < t.n; ++b) out << (b ? " " : "") << table[a * t.n + b];
      out << "\n";
    }
  };
  rows("up", t.up);
  rows("down", t.down);
  if (!t.names.empty()) {
    out << "names:\n";
    for (std::size_t i = 0; i < t.n; ++i) out << i << " " << t.names[i] << "\n";
  }
}

inline std::string write_table(const OperationTables& t) {
  std::ostringstream out;
  write_table(out, t);
  return out.str();
}

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  std::string expect(const std::string& what) {
    std::string line;
    if (!next(line)) throw TableFormatError("unexpected end of file, expected " + what, number_ + 1);
    return line;
  }

  std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

inline std::size_t parse_index(const std::string& token, std::size_t line) {
  if (token.empty() || token.size() > 9 ||
      token.find_first_not_of("0123456789") != std::string::npos) {
    throw TableFormatError("expected a non-negative integer, got '" + token + "'", line);
  }
  return std::stoul(token);
}

inline std::vector<Element> read_rows(LineReader& reader, std::size_t n, const char* label) {
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    std::istringstream row(reader.expect(std::string(label) + " row " + std::to_string(a)));
    std::string token;
    std::size_t count = 0;
    while (row >> token) {
      const std::size_t v = parse_index(token, reader.number());
      if (v >= n) {
        throw TableFormatError(std::string(label) + " entry " + token + " out of range [0, " +
                                   std::to_string(n) + ")",
                               reader.number());
      }
      if (++count > n) {
        throw TableFormatError(std::string(label) + " row has more than " + std::to_string(n) +
                                   " entries",
                               reader.number());
      }
      table.push_back(static_cast<Element>(v));
    }
    if (count < n) {
      throw TableFormatError(std::string(label) + " row has " + std::to_string(count) +
                                 " entries, expected " + std::to_string(n),
                             reader.number());
    }
  }
  return table;
}

}  // namespace detail

/// Reads the format written by `write_table`. Throws TableFormatError with the
/// offending line number on any deviation, including trailing content.
inline OperationTables read_table(std::istream& in) {
  detail::LineReader reader(in);
  if (reader.expect("header") != "biquandle v1") {
    throw TableFormatError("expected header 'biquandle v1'", reader.number());
  }
  const std::string size_line = reader.expect("n=<int>");
  if (size_line.rfind("n=", 0) != 0) throw TableFormatError("expected 'n=<int>'", reader.number());
  OperationTables t;
  t.n = detail::parse_index(size_line.substr(2), reader.number());
  if (t.n == 0) throw TableFormatError("n must be positive", reader.number());

  if (reader.expect("'up:'") != "up:") throw TableFormatError("expected 'up:'", reader.number());
  t.up = detail::read_rows(reader, t.n, "up");
  if (reader.expect("'down:'") != "down:") {
    throw TableFormatError("expected 'down:'", reader.number());
  }
  t.down = detail::read_rows(reader, t.n, "down");

  std::string line;
  if (!reader.next(line)) return t;
  if (line != "names:") throw TableFormatError("unexpected content after tables", reader.number());
  t.names.assign(t.n, {});
  std::vector<bool> seen(t.n, false);
  for (std::size_t i = 0; i < t.n; ++i) {
    const std::string entry = reader.expect("name line");
    const auto space = entry.find(' ');
    if (space == std::string::npos || space + 1 >= entry.size()) {
      throw TableFormatError("expected '<index> <display-name>'", reader.number());
    }
    const std::size_t index = detail::parse_index(entry.substr(0, space), reader.number());
    if (index >= t.n) throw TableFormatError("name index out of range", reader.number());
    if (seen[index]) throw TableFormatError("duplicate name index", reader.number());
    seen[index] = true;
    t.names[index] = entry.substr(space + 1);
  }
  if (reader.next(line)) throw TableFormatError("unexpected content after names", reader.number());
  return t;
}

inline OperationTables read_table(const std::string& text) {
  std::istringstream in(text);
  return read_table(in);
}

}  // namespace bqlong
