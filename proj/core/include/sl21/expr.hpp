#pragma once

#include <string>
#include <vector>

#include "sl21/jet.hpp"

namespace sl21 {

// Small expression language over jet arithmetic for user-supplied functions:
// numbers, the imaginary unit i, pi, named variables, + - * / ^ with the
// usual precedence, parentheses, and exp/log/sin/cos/sqrt/pow/re/im/conj.
// `variables` fixes both the admissible names and the argument order of the
// resulting map.
SmoothMap parse_expression(const std::string& text, const std::vector<std::string>& variables);

}  // namespace sl21
