#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cli {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numbers, pi, + - * /, parentheses and implicit products such as 8pi/9.
double eval_expr(std::string_view text);

// Comma-separated items; an item is a value, an inclusive a:b:step range,\n// or '...' continuing the preceding two values up to the next one.
std::vector<double> parse_list(const std::vector<std::string>& items);

}  // namespace cli
