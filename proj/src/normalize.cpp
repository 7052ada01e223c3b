#include "forge/normalize.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "forge/utf8.hpp"

namespace forge {

namespace {

constexpr char32_t kSpaceVariants[] = {0x00A0, 0x1680, 0x180E, 0x2000, 0x200A,
                                       0x202F, 0x205F, 0x3000};
constexpr char32_t kZwnj = 0x200C;

bool is_space_variant(char32_t c) {
    return std::find(std::begin(kSpaceVariants), std::end(kSpaceVariants), c) !=
           std::end(kSpaceVariants);
}

std::u32string collapse_spaces(const std::u32string& t) {
    std::u32string out;
    out.reserve(t.size());
    for (char32_t c : t) {
        if (c == U' ' && (out.empty() || out.back() == U' ')) continue;
        out.push_back(c);
    }
    if (!out.empty() && out.back() == U' ') out.pop_back();
    return out;
}

std::vector<std::string> split_on_spaces(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// A combining mark cannot open a token; drop it rather than glue it elsewhere.
std::string strip_orphan_marks(const std::string& tok) {
    auto t = utf8::decode(tok);
    std::size_t k = 0;
    while (k < t.size() && utf8::is_bangla_combining(t[k])) ++k;
    return k == 0 ? tok : utf8::encode(std::u32string_view(t).substr(k));
}

std::vector<std::string> prepare_tokens(std::string_view text, const PunctuationInventory& inv) {
    std::string flat(text);
    for (char& c : flat)
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    auto separated = separate_punctuation(canonical_bangla(clean_unicode(flat)), inv);
    std::vector<std::string> out;
    for (auto& tok : split_on_spaces(separated)) {
        auto fixed = strip_orphan_marks(tok);
        if (!fixed.empty()) out.push_back(std::move(fixed));
    }
    return out;
}

}  // namespace

std::size_t CleanSentence::word_count() const {
    return static_cast<std::size_t>(
        std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return !t.is_punct; }));
}

PunctuationInventory::PunctuationInventory()
    : PunctuationInventory({"...", "!..", "!|", "!-", "-", "।", "?", "!", ",", ";"}) {}

PunctuationInventory::PunctuationInventory(std::vector<std::string> marks) {
    for (auto& m : marks)
        if (!m.empty()) marks_.push_back(utf8::decode(m));
    std::stable_sort(marks_.begin(), marks_.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    marks_.erase(std::unique(marks_.begin(), marks_.end()), marks_.end());
}

PunctuationInventory PunctuationInventory::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open punctuation file " + path);
    std::vector<std::string> marks;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        marks.push_back(line);
    }
    if (marks.empty()) throw std::runtime_error("empty punctuation file " + path);
    return PunctuationInventory(std::move(marks));
}

std::vector<std::string> PunctuationInventory::mark_strings() const {
    std::vector<std::string> out;
    for (auto& m : marks_) out.push_back(utf8::encode(m));
    return out;
}

bool PunctuationInventory::is_mark(std::string_view s) const {
    auto t = utf8::decode(s);
    return std::find(marks_.begin(), marks_.end(), t) != marks_.end();
}

bool PunctuationInventory::is_terminator(std::string_view s) const {
    if (s == "।" || s == "?" || s == "!") return true;
    return s.size() > 1 && s[0] == '!' && is_mark(s);
}

std::size_t PunctuationInventory::match_at(const std::u32string& t, std::size_t i) const {
    for (auto& m : marks_) {
        if (m == U"-") continue;
        if (t.compare(i, m.size(), m) == 0) return m.size();
    }
    return 0;
}

const PunctuationInventory& default_punctuation() {
    static const PunctuationInventory inv;
    return inv;
}

std::string clean_unicode(std::string_view text) {
    auto t = utf8::decode(text);
    std::u32string out;
    out.reserve(t.size());
    for (char32_t c : t) {
        if (c == kZwnj) continue;
        out.push_back(is_space_variant(c) ? U' ' : c);
    }
    return utf8::encode(collapse_spaces(out));
}

std::string canonical_bangla(std::string_view text) {
    auto t = utf8::decode(text);
    std::u32string out;
    out.reserve(t.size() + 4);
    for (std::size_t i = 0; i < t.size(); ++i) {
        char32_t c = t[i];
        switch (c) {
            case 0x09DC: out += U"\u09A1\u09BC"; continue;
            case 0x09DD: out += U"\u09A2\u09BC"; continue;
            case 0x09DF: out += U"\u09AF\u09BC"; continue;
            default: break;
        }
        if (c == 0x09C7 && i + 1 < t.size() && (t[i + 1] == 0x09BE || t[i + 1] == 0x09D7)) {
            out.push_back(t[i + 1] == 0x09BE ? 0x09CB : 0x09CC);
            ++i;
            continue;
        }
        out.push_back(c);
    }
    return utf8::encode(out);
}

std::string separate_punctuation(std::string_view text, const PunctuationInventory& inv) {
    auto t = utf8::decode(text);
    const std::size_t n = t.size();
    // 0 = text, 1 = start of a mark, 2 = inside a mark
    std::vector<std::uint8_t> role(n, 0);
    for (std::size_t i = 0; i < n;) {
        std::size_t len = inv.match_at(t, i);
        if (len == 0) {
            ++i;
            continue;
        }
        role[i] = 1;
        for (std::size_t k = 1; k < len; ++k) role[i + k] = 2;
        i += len;
    }
    // A lone hyphen is a mark only next to a space, an edge or another mark.
    if (inv.is_mark("-")) {
        auto loose = [&](std::ptrdiff_t j) {
            return j < 0 || j >= static_cast<std::ptrdiff_t>(n) || t[j] == U' ' || role[j] != 0;
        };
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (t[i] != U'-' || role[i] != 0) continue;
                auto p = static_cast<std::ptrdiff_t>(i);
                if (loose(p - 1) || loose(p + 1)) {
                    role[i] = 1;
                    changed = true;
                }
            }
        }
    }
    std::u32string out;
    out.reserve(n + n / 2);
    for (std::size_t i = 0; i < n; ++i) {
        if (role[i] == 1) out.push_back(U' ');
        out.push_back(t[i]);
        bool mark_ends = role[i] != 0 && (i + 1 == n || role[i + 1] != 2);
        if (mark_ends) out.push_back(U' ');
    }
    return utf8::encode(collapse_spaces(out));
}

CleanSentence make_sentence(const std::vector<std::string>& surfaces, std::string source_id,
                            const PunctuationInventory& inv) {
    CleanSentence s;
    s.source_id = std::move(source_id);
    std::size_t pos = 0;
    for (const auto& surf : surfaces) {
        if (!s.tokens.empty()) {
            s.text += ' ';
            ++pos;
        }
        Token tok;
        tok.surface = surf;
        tok.start = pos;
        pos += utf8::length(surf);
        tok.end = pos;
        tok.is_punct = inv.is_mark(surf);
        s.text += surf;
        s.tokens.push_back(std::move(tok));
    }
    return s;
}

std::vector<CleanSentence> split_sentences(const RawDocument& doc, const PunctuationInventory& inv) {
    std::vector<CleanSentence> out;
    std::vector<std::string> cur;
    for (auto& tok : prepare_tokens(doc.text, inv)) {
        bool term = inv.is_terminator(tok);
        cur.push_back(std::move(tok));
        if (term) {
            out.push_back(make_sentence(cur, doc.source_id, inv));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(make_sentence(cur, doc.source_id, inv));
    return out;
}

CleanSentence normalize_sentence(std::string_view text, std::string source_id,
                                 const PunctuationInventory& inv) {
    return make_sentence(prepare_tokens(text, inv), std::move(source_id), inv);
}

std::vector<std::string> surfaces(const CleanSentence& s) {
    std::vector<std::string> out;
    out.reserve(s.tokens.size());
    for (auto& t : s.tokens) out.push_back(t.surface);
    return out;
}

std::string join_tokens(const std::vector<std::string>& surfaces) {
    std::string out;
    for (const auto& s : surfaces) {
        if (!out.empty()) out += ' ';
        out += s;
    }
    return out;
}

}  // namespace forge
