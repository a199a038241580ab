#include "conefold/parsing.hpp"

#include <charconv>
#include <cmath>

namespace conefold {
namespace detail {

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_double(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

bool parse_int(std::string_view token, int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

double parse_double_or_throw(std::string_view token, const std::string& origin,
                             int line) {
  double v;
  if (!parse_double(token, v))
    throw ParseError(origin, line, "expected a number, got '" + std::string(token) + "'");
  return v;
}

int parse_int_or_throw(std::string_view token, const std::string& origin, int line) {
  int v;
  if (!parse_int(token, v))
    throw ParseError(origin, line, "expected an integer, got '" + std::string(token) + "'");
  return v;
}

}  // namespace detail
}  // namespace conefold
