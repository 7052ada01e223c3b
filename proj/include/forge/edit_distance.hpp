#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace forge {

// Levenshtein distance over code points.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t edit_distance(std::string_view a, std::string_view b);

}  // namespace forge
