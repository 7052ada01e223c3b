#pragma once

#include <string>
#include <string_view>

namespace forge::utf8 {

// Invalid sequences decode to U+FFFD so every function here is total.
std::u32string decode(std::string_view s);
std::string encode(std::u32string_view s);
std::string encode(char32_t c);
std::size_t length(std::string_view s);

bool is_bangla_consonant(char32_t c);
bool is_dependent_vowel(char32_t c);
bool is_bangla_combining(char32_t c);

}  // namespace forge::utf8
