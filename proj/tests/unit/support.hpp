#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include "forge/lexicon.hpp"
#include "forge/normalize.hpp"

namespace forge::testing {

inline const std::string kData = FORGE_DATA_DIR;

inline const LexiconBundle& bundle() {
    static const LexiconBundle lex = LexiconBundle::load(ResourcePaths::in_directory(kData));
    return lex;
}

inline CleanSentence sent(const std::string& text) { return normalize_sentence(text, "test"); }

// Scratch directory removed when the object goes out of scope.
struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) {
        path = std::filesystem::temp_directory_path() /
               (tag + "_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        auto p = path / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }
};

}  // namespace forge::testing
