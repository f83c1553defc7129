// Small parsing helpers shared by the text syntaxes.

#ifndef VERTEXKERNEL_SRC_TEXT_UTIL_HPP
#define VERTEXKERNEL_SRC_TEXT_UTIL_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vk::detail
{

std::string trim(std::string_view s);

std::string strip_spaces(std::string_view s);

/// Splits "a + b - c" at top-level '+'/'-' into (sign, term) pairs. Signs
/// inside (), [] or {} belong to the term.
std::vector<std::pair<int, std::string>> split_terms(std::string_view text);

/// Splits "coeff·body" / "coeff*body"; returns ("", body) when absent.
std::pair<std::string, std::string> split_coefficient(const std::string &term);

} // namespace vk::detail

#endif
