#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "goncarov/poly.hpp"

namespace gonc {

// Parses polynomial expressions over the variable alphabet, e.g.
// "x^2 + (w2 - 2*z1)*x", "a+2*b", "-3/2". Supports + - * / ^ and parentheses;
// division only by nonzero constants.
MultiPoly parse_poly(std::string_view text);

// "k=v,k=v" pairs; the key "all" is kept verbatim for the caller to expand.
std::vector<std::pair<std::string, std::string>> parse_assignments(std::string_view text);

} // namespace gonc
