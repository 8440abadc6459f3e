#pragma once

// Minimal CSV plumbing shared by the dataset and result files: comma
// separated, fields containing separators are double-quoted.

#include <qgl/error.hpp>

#include <boost/tokenizer.hpp>
#include <fmt/format.h>

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgl::csv {

/// Reals are written with 12 significant digits.
inline std::string real(double x) { return fmt::format("{:.12g}", x); }

inline std::string real(const std::optional<double>& x) { return x ? real(*x) : std::string(); }

inline std::string quoted(std::string_view s) { return fmt::format("\"{}\"", s); }

inline std::vector<std::string> split(const std::string& line) {
  // The escape character is one that never occurs in our files.
  boost::escaped_list_separator<char> separator('\x01', ',', '"');
  boost::tokenizer<boost::escaped_list_separator<char>> tokens(line, separator);
  return {tokens.begin(), tokens.end()};
}

inline std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += fields[i];
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, std::string_view column) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(Errc::schema, fmt::format("column '{}': cannot parse '{}'", column, text));
  }
  return value;
}

inline std::optional<double> parse_optional_real(std::string_view text, std::string_view column) {
  if (text.empty()) return std::nullopt;
  return parse_number<double>(text, column);
}

inline bool parse_bool(std::string_view text, std::string_view column) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw Error(Errc::schema, fmt::format("column '{}': expected true/false, got '{}'", column, text));
}

/// Whitespace-separated integers.
inline std::vector<int> parse_ints(std::string_view text, std::string_view column) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) out.push_back(parse_number<int>(text.substr(i, j - i), column));
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> split_on(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline void expect_header(const std::vector<std::string>& got, const std::vector<std::string>& expected,
                          std::string_view schema) {
  for (std::size_t i = 0; i < std::max(got.size(), expected.size()); ++i) {
    const std::string g = i < got.size() ? got[i] : std::string("<missing>");
    const std::string e = i < expected.size() ? expected[i] : std::string("<none>");
    if (g != e) {
      throw Error(Errc::schema, fmt::format("{}: column {} is '{}', expected '{}'", schema, i + 1, g, e));
    }
  }
}

}  // namespace qgl::csv
