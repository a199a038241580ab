#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conefold {

// File-format error with origin:line context baked into what().
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& origin, int line, const std::string& message)
      : std::runtime_error(origin + ":" + std::to_string(line) + ": " + message),
        line_number_(line) {}

  int line_number() const { return line_number_; }

 private:
  int line_number_;
};

namespace detail {

std::string_view strip_comment(std::string_view line);
std::string_view trim(std::string_view s);
std::vector<std::string_view> split_ws(std::string_view s);

// Strict full-token conversions; the bool forms report failure, the throwing
// forms wrap it in a ParseError.
bool parse_double(std::string_view token, double& out);
bool parse_int(std::string_view token, int& out);
double parse_double_or_throw(std::string_view token, const std::string& origin,
                             int line);
int parse_int_or_throw(std::string_view token, const std::string& origin,
                       int line);

}  // namespace detail

}  // namespace conefold
