#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pbci/algebra.hpp"

namespace pbci {

// Algebra text format:
//
//   # comment
//   elements: a b x y g 1
//   unit: 1
//   arrow:
//   <n rows of n names, row = left operand, in elements order>
//   squig:
//   <n rows likewise>
//
// Blank lines and lines starting with '#' are ignored. Throws ParseError.
Algebra parse_algebra(std::string_view text);

// Inverse of parse_algebra: single spaces between names, '\n' line ends, no
// comments. parse_algebra(format_algebra(a)) == a.
std::string format_algebra(const Algebra& a);

Algebra read_algebra(const std::filesystem::path& path);
void write_algebra(const std::filesystem::path& path, const Algebra& a);

}  // namespace pbci
