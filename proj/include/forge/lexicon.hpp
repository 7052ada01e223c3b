#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace forge {

enum class Tense { Past, Present, Future };
enum class Person { First, Second, Third };
// Aspect is an extra key column so one lemma can hold several forms per tense.
enum class Aspect { Simple, Continuous, Perfect, Habitual };

std::string_view id_of(Tense t);
std::string_view id_of(Person p);
std::string_view id_of(Aspect a);

struct VerbCell {
    std::string lemma;
    Tense tense = Tense::Present;
    Person person = Person::First;
    Aspect aspect = Aspect::Simple;

    auto key() const { return std::tie(lemma, tense, person, aspect); }
    bool operator<(const VerbCell& o) const { return key() < o.key(); }
    bool operator==(const VerbCell& o) const { return key() == o.key(); }
};

class LexiconError : public std::runtime_error {
public:
    enum class Kind { MalformedRow, DuplicateKey, EmptyResource, UnknownWord, Io };
    LexiconError(Kind kind, std::string file, std::size_t line, std::string key);

    Kind kind;
    std::string file;
    std::size_t line;
    std::string key;
};

std::string_view id_of(LexiconError::Kind k);

// One-to-one map between two disjoint columns.
class PairMap {
public:
    bool insert(const std::string& left, const std::string& right);
    const std::string* partner(std::string_view w) const;
    bool in_left(std::string_view w) const { return left_.count(std::string(w)) > 0; }
    bool in_right(std::string_view w) const { return right_.count(std::string(w)) > 0; }
    bool contains(std::string_view w) const { return in_left(w) || in_right(w); }
    std::size_t size() const { return order_.size(); }
    const std::vector<std::pair<std::string, std::string>>& pairs() const { return order_; }

private:
    std::unordered_map<std::string, std::string> left_, right_;
    std::vector<std::pair<std::string, std::string>> order_;
};

struct ResourcePaths {
    std::string wordlist;
    std::string homonyms;
    std::string verbs;
    std::string pronoun_numbers;
    std::string genders;
    std::string noun_adjectives;
    std::string registers;

    static ResourcePaths in_directory(const std::string& dir);
};

struct ResourceCounts {
    std::size_t words = 0;
    std::size_t homonyms = 0;
    std::size_t verb_forms = 0;
    std::size_t verb_lemmas = 0;
    std::size_t pronoun_pairs = 0;
    std::size_t gender_pairs = 0;
    std::size_t noun_adj_pairs = 0;
    std::size_t register_verbs = 0;
    std::size_t register_pronouns = 0;
};

enum class Register { Sadhu, Calita };

class LexiconBundle {
public:
    static LexiconBundle load(const ResourcePaths& paths);

    bool is_dictionary_word(std::string_view w) const;
    std::vector<VerbCell> find_verb(std::string_view surface) const;
    const std::string* verb_form(const VerbCell& cell) const;
    const std::vector<std::string>& homonyms_of(std::string_view w) const;
    bool is_pronoun(std::string_view w) const { return pronoun_frozen_.count(std::string(w)) > 0; }
    std::optional<Register> register_of(std::string_view w) const;
    const std::string* register_partner(std::string_view w) const;

    const std::unordered_set<std::string>& words() const { return words_; }
    const std::vector<std::string>& sorted_words() const { return sorted_words_; }
    const std::set<std::pair<std::string, std::string>>& homonym_pairs() const { return homonym_pairs_; }
    const std::map<VerbCell, std::string>& paradigm() const { return paradigm_; }
    const PairMap& pronoun_numbers() const { return pronoun_numbers_; }
    const PairMap& genders() const { return genders_; }
    const PairMap& noun_adjectives() const { return noun_adjectives_; }
    const PairMap& register_verbs() const { return register_verbs_; }
    const PairMap& register_pronouns() const { return register_pronouns_; }
    const ResourceCounts& counts() const { return counts_; }

    // Words linked to w by any table other than the wordlist and homonyms.
    std::set<std::string> related_forms(std::string_view w) const;

private:
    std::unordered_set<std::string> words_;
    std::vector<std::string> sorted_words_;
    std::set<std::pair<std::string, std::string>> homonym_pairs_;
    std::unordered_map<std::string, std::vector<std::string>> homonym_index_;
    std::map<VerbCell, std::string> paradigm_;
    std::unordered_map<std::string, std::vector<VerbCell>> verb_index_;
    PairMap pronoun_numbers_, genders_, noun_adjectives_, register_verbs_, register_pronouns_;
    std::unordered_set<std::string> pronoun_frozen_;
    ResourceCounts counts_;
};

}  // namespace forge
