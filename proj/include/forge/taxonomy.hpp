#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

enum class FinerClass {
    SpellingNonDictionary,
    SpellingDictionary,
    Tense,
    Person,
    Number,
    Gender,
    Case,
    PartsOfSpeech,
    MissingWord,
    GurucandaliDosa,
    Punctuation,
    Semantic,
    Correct,
};

enum class BroadClass { Spelling, Word, GurucandaliDosa, Punctuation, Semantic, Correct };

enum class TaskLevel { Binary, Broad, Finer };

inline constexpr std::array<FinerClass, 13> kAllFiner = {
    FinerClass::SpellingNonDictionary, FinerClass::SpellingDictionary, FinerClass::Tense,
    FinerClass::Person,                FinerClass::Number,             FinerClass::Gender,
    FinerClass::Case,                  FinerClass::PartsOfSpeech,      FinerClass::MissingWord,
    FinerClass::GurucandaliDosa,       FinerClass::Punctuation,        FinerClass::Semantic,
    FinerClass::Correct,
};

inline constexpr std::array<BroadClass, 6> kAllBroad = {
    BroadClass::Spelling,    BroadClass::Word,     BroadClass::GurucandaliDosa,
    BroadClass::Punctuation, BroadClass::Semantic, BroadClass::Correct,
};

BroadClass broad_of(FinerClass c);
std::string project(FinerClass c, TaskLevel level);

std::string_view id_of(FinerClass c);
std::string_view id_of(BroadClass c);
std::string_view id_of(TaskLevel l);
std::string_view display_name(FinerClass c);
std::string_view display_name(BroadClass c);

std::optional<FinerClass> finer_from_id(std::string_view id);
std::optional<BroadClass> broad_from_id(std::string_view id);
std::optional<TaskLevel> level_from_id(std::string_view id);

// Every label string that can appear at a level, in canonical order.
std::vector<std::string> labels_for(TaskLevel level);
bool is_valid_label(std::string_view label, TaskLevel level);

}  // namespace forge
