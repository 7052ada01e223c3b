#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace forge {

// splitmix64 stream. The standard distributions are implementation-defined,
// so bounded draws are done here to keep outputs identical across toolchains.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    template <class T>
    const T& choice(const std::vector<T>& v) {
        if (v.empty()) throw std::invalid_argument("choice from empty list");
        return v[index(v.size())];
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
    }

private:
    std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t x);
std::uint64_t hash_bytes(std::string_view s, std::uint64_t seed = 0);
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

}  // namespace forge
