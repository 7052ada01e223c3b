#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace forge {

struct RawDocument {
    std::string text;
    std::string source_id;
};

struct Token {
    std::string surface;
    std::size_t start = 0;  // code points
    std::size_t end = 0;    // exclusive
    bool is_punct = false;
};

struct CleanSentence {
    std::string text;
    std::vector<Token> tokens;
    std::string source_id;

    std::size_t word_count() const;
};

// Marks are kept longest-first so matching can stop at the first hit.
class PunctuationInventory {
public:
    PunctuationInventory();
    explicit PunctuationInventory(std::vector<std::string> marks);
    static PunctuationInventory load(const std::string& path);

    const std::vector<std::u32string>& marks() const { return marks_; }
    std::vector<std::string> mark_strings() const;
    bool is_mark(std::string_view s) const;
    bool is_terminator(std::string_view s) const;
    // Length of the longest non-hyphen mark starting at t[i], or 0.
    std::size_t match_at(const std::u32string& t, std::size_t i) const;

private:
    std::vector<std::u32string> marks_;
};

const PunctuationInventory& default_punctuation();

std::string clean_unicode(std::string_view text);
// Folds precomposed nukta letters and two-part vowel signs into one spelling.
std::string canonical_bangla(std::string_view text);
std::string separate_punctuation(std::string_view text,
                                 const PunctuationInventory& inv = default_punctuation());
std::vector<CleanSentence> split_sentences(const RawDocument& doc,
                                           const PunctuationInventory& inv = default_punctuation());

// Full normalization of one sentence without splitting at terminators.
CleanSentence normalize_sentence(std::string_view text, std::string source_id = {},
                                 const PunctuationInventory& inv = default_punctuation());
CleanSentence make_sentence(const std::vector<std::string>& surfaces, std::string source_id = {},
                            const PunctuationInventory& inv = default_punctuation());
std::vector<std::string> surfaces(const CleanSentence& s);
std::string join_tokens(const std::vector<std::string>& surfaces);

}  // namespace forge
