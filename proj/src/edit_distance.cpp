#include "forge/edit_distance.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "forge/utf8.hpp"

namespace forge {

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
    if (a.size() < b.size()) std::swap(a, b);
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] != b[j - 1])});
            diag = up;
        }
    }
    return row[b.size()];
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    return edit_distance(utf8::decode(a), utf8::decode(b));
}

}  // namespace forge
