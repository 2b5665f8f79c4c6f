#ifndef QSEP_TEXT_FORMAT_HPP
#define QSEP_TEXT_FORMAT_HPP

#include <charconv>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "relation.hpp"

namespace qsep {

class ParseError : public Error {
 public:
  using Error::Error;
};

// Cayley table text format:
//   - lines whose first non-blank character is '#' are comments
//   - the first token is the order n, followed by n*n whitespace-separated
//     0-based entries in row-major order
// A file may hold several tables back to back (as `enumerate` prints them).

namespace detail {

  // Integer tokens of the text with comment lines removed.
  inline std::vector<long long> integer_tokens(std::string_view text) {
    std::vector<long long> out;
    std::size_t            line_no = 0;
    while (!text.empty()) {
      ++line_no;
      auto const       eol  = text.find('\n');
      std::string_view line = text.substr(0, eol);
      text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
      auto const first = line.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || line[first] == '#') {
        continue;
      }
      std::size_t pos = first;
      while (pos < line.size()) {
        pos = line.find_first_not_of(" \t\r", pos);
        if (pos == std::string_view::npos) {
          break;
        }
        auto end = line.find_first_of(" \t\r", pos);
        if (end == std::string_view::npos) {
          end = line.size();
        }
        auto const tok = line.substr(pos, end - pos);
        long long  v   = 0;
        auto [p, ec]   = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size()) {
          throw ParseError("line " + std::to_string(line_no) + ": unexpected token '"
                           + std::string(tok) + "'");
        }
        out.push_back(v);
        pos = end;
      }
    }
    return out;
  }

  inline CayleyTable table_from_tokens(std::vector<long long> const& tok, std::size_t& pos) {
    long long const n = tok[pos++];
    if (n <= 0) {
      throw ParseError("order must be positive, got " + std::to_string(n));
    }
    auto const count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (tok.size() - pos < count) {
      throw ParseError("order " + std::to_string(n) + " needs " + std::to_string(count)
                       + " entries, found " + std::to_string(tok.size() - pos));
    }
    std::vector<long long> grid(tok.begin() + static_cast<std::ptrdiff_t>(pos),
                                tok.begin() + static_cast<std::ptrdiff_t>(pos + count));
    pos += count;
    return validate(static_cast<std::size_t>(n), grid);
  }

}  // namespace detail

// Exactly one table; anything after it is an error.
[[nodiscard]] inline CayleyTable parse_table(std::string_view text) {
  auto const  tok = detail::integer_tokens(text);
  std::size_t pos = 0;
  if (tok.empty()) {
    throw ParseError("no table found");
  }
  auto table = detail::table_from_tokens(tok, pos);
  if (pos != tok.size()) {
    throw ParseError("trailing data after table: " + std::to_string(tok.size() - pos)
                     + " extra entries");
  }
  return table;
}

[[nodiscard]] inline std::vector<CayleyTable> parse_table_stream(std::string_view text) {
  auto const               tok = detail::integer_tokens(text);
  std::vector<CayleyTable> out;
  std::size_t              pos = 0;
  while (pos < tok.size()) {
    out.push_back(detail::table_from_tokens(tok, pos));
  }
  return out;
}

[[nodiscard]] inline std::string format_table(CayleyTable const& s) {
  std::ostringstream os;
  os << s.size() << '\n';
  for (element_id i = 0; i < s.size(); ++i) {
    for (element_id j = 0; j < s.size(); ++j) {
      os << (j == 0 ? "" : " ") << s(i, j);
    }
    os << '\n';
  }
  return os.str();
}

// Relation text format: one "x y" pair per line, '#' comment lines.
[[nodiscard]] inline BinaryRelation parse_relation(std::string_view text, std::size_t n) {
  auto const tok = detail::integer_tokens(text);
  if (tok.size() % 2 != 0) {
    throw ParseError("relation has an odd number of entries");
  }
  BinaryRelation r(n);
  for (std::size_t k = 0; k < tok.size(); k += 2) {
    for (auto v : {tok[k], tok[k + 1]}) {
      if (v < 0 || static_cast<unsigned long long>(v) >= n) {
        throw ParseError("relation entry " + std::to_string(v) + " is out of range for order "
                         + std::to_string(n));
      }
    }
    r.insert(static_cast<element_id>(tok[k]), static_cast<element_id>(tok[k + 1]));
  }
  return r;
}

[[nodiscard]] inline std::string format_relation(BinaryRelation const& r) {
  std::ostringstream os;
  for (auto [x, y] : r.pairs()) {
    os << x << ' ' << y << '\n';
  }
  return os.str();
}

}  // namespace qsep

#endif  // QSEP_TEXT_FORMAT_HPP
