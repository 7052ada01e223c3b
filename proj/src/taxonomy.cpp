#include "forge/taxonomy.hpp"

#include <algorithm>
#include <vector>

namespace forge {

BroadClass broad_of(FinerClass c) {
    switch (c) {
        case FinerClass::SpellingNonDictionary:
        case FinerClass::SpellingDictionary: return BroadClass::Spelling;
        case FinerClass::Tense:
        case FinerClass::Person:
        case FinerClass::Number:
        case FinerClass::Gender:
        case FinerClass::Case:
        case FinerClass::PartsOfSpeech:
        case FinerClass::MissingWord: return BroadClass::Word;
        case FinerClass::GurucandaliDosa: return BroadClass::GurucandaliDosa;
        case FinerClass::Punctuation: return BroadClass::Punctuation;
        case FinerClass::Semantic: return BroadClass::Semantic;
        case FinerClass::Correct: return BroadClass::Correct;
    }
    return BroadClass::Correct;
}

std::string project(FinerClass c, TaskLevel level) {
    switch (level) {
        case TaskLevel::Binary: return c == FinerClass::Correct ? "correct" : "wrong";
        case TaskLevel::Broad: return std::string(id_of(broad_of(c)));
        case TaskLevel::Finer: return std::string(id_of(c));
    }
    return {};
}

std::string_view id_of(FinerClass c) {
    switch (c) {
        case FinerClass::SpellingNonDictionary: return "spelling_non_dictionary";
        case FinerClass::SpellingDictionary: return "spelling_dictionary";
        case FinerClass::Tense: return "tense";
        case FinerClass::Person: return "person";
        case FinerClass::Number: return "number";
        case FinerClass::Gender: return "gender";
        case FinerClass::Case: return "case";
        case FinerClass::PartsOfSpeech: return "pos";
        case FinerClass::MissingWord: return "missing_word";
        case FinerClass::GurucandaliDosa: return "gurucandali";
        case FinerClass::Punctuation: return "punctuation";
        case FinerClass::Semantic: return "semantic";
        case FinerClass::Correct: return "correct";
    }
    return {};
}

std::string_view id_of(BroadClass c) {
    switch (c) {
        case BroadClass::Spelling: return "spelling";
        case BroadClass::Word: return "word";
        case BroadClass::GurucandaliDosa: return "gurucandali";
        case BroadClass::Punctuation: return "punctuation";
        case BroadClass::Semantic: return "semantic";
        case BroadClass::Correct: return "correct";
    }
    return {};
}

std::string_view id_of(TaskLevel l) {
    switch (l) {
        case TaskLevel::Binary: return "binary";
        case TaskLevel::Broad: return "broad";
        case TaskLevel::Finer: return "finer";
    }
    return {};
}

std::string_view display_name(FinerClass c) {
    switch (c) {
        case FinerClass::SpellingNonDictionary: return "Spelling (non-dictionary word)";
        case FinerClass::SpellingDictionary: return "Spelling (dictionary word)";
        case FinerClass::Tense: return "Tense";
        case FinerClass::Person: return "Person";
        case FinerClass::Number: return "Number";
        case FinerClass::Gender: return "Gender";
        case FinerClass::Case: return "Case";
        case FinerClass::PartsOfSpeech: return "Parts of speech";
        case FinerClass::MissingWord: return "Missing word";
        case FinerClass::GurucandaliDosa: return "Gurucandali dosa";
        case FinerClass::Punctuation: return "Punctuation";
        case FinerClass::Semantic: return "Semantic";
        case FinerClass::Correct: return "Correct";
    }
    return {};
}

std::string_view display_name(BroadClass c) {
    switch (c) {
        case BroadClass::Spelling: return "Spelling";
        case BroadClass::Word: return "Word";
        case BroadClass::GurucandaliDosa: return "Gurucandali dosa";
        case BroadClass::Punctuation: return "Punctuation";
        case BroadClass::Semantic: return "Semantic";
        case BroadClass::Correct: return "Correct";
    }
    return {};
}

std::optional<FinerClass> finer_from_id(std::string_view id) {
    for (auto c : kAllFiner)
        if (id_of(c) == id) return c;
    return std::nullopt;
}

std::optional<BroadClass> broad_from_id(std::string_view id) {
    for (auto c : kAllBroad)
        if (id_of(c) == id) return c;
    return std::nullopt;
}

std::optional<TaskLevel> level_from_id(std::string_view id) {
    for (auto l : {TaskLevel::Binary, TaskLevel::Broad, TaskLevel::Finer})
        if (id_of(l) == id) return l;
    return std::nullopt;
}

std::vector<std::string> labels_for(TaskLevel level) {
    std::vector<std::string> out;
    for (auto c : kAllFiner) {
        auto label = project(c, level);
        if (std::find(out.begin(), out.end(), label) == out.end()) out.push_back(label);
    }
    return out;
}

bool is_valid_label(std::string_view label, TaskLevel level) {
    auto all = labels_for(level);
    return std::find(all.begin(), all.end(), label) != all.end();
}

}  // namespace forge
