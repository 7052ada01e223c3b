#include <gtest/gtest.h>

#include <set>

#include "forge/taxonomy.hpp"

using namespace forge;

TEST(Taxonomy, BroadOfExamples) {
    EXPECT_EQ(broad_of(FinerClass::Tense), BroadClass::Word);
    EXPECT_EQ(broad_of(FinerClass::Correct), BroadClass::Correct);
    EXPECT_EQ(broad_of(FinerClass::SpellingDictionary), BroadClass::Spelling);
    EXPECT_EQ(broad_of(FinerClass::MissingWord), BroadClass::Word);
    EXPECT_EQ(broad_of(FinerClass::GurucandaliDosa), BroadClass::GurucandaliDosa);
}

TEST(Taxonomy, ProjectExamples) {
    EXPECT_EQ(project(FinerClass::Person, TaskLevel::Binary), "wrong");
    EXPECT_EQ(project(FinerClass::Person, TaskLevel::Broad), "word");
    EXPECT_EQ(project(FinerClass::Correct, TaskLevel::Binary), "correct");
    EXPECT_EQ(project(FinerClass::PartsOfSpeech, TaskLevel::Finer), "pos");
}

TEST(Taxonomy, ProjectionCardinalities) {
    for (auto [level, n] : {std::pair{TaskLevel::Binary, 2u}, {TaskLevel::Broad, 6u}, {TaskLevel::Finer, 13u}}) {
        std::set<std::string> out;
        for (auto c : kAllFiner) out.insert(project(c, level));
        EXPECT_EQ(out.size(), n);
        EXPECT_EQ(labels_for(level).size(), n);
    }
}

TEST(Taxonomy, BroadOfIsSurjective) {
    std::set<BroadClass> seen;
    for (auto c : kAllFiner) seen.insert(broad_of(c));
    EXPECT_EQ(seen.size(), kAllBroad.size());
}

TEST(Taxonomy, IdsRoundTrip) {
    for (auto c : kAllFiner) EXPECT_EQ(finer_from_id(id_of(c)), c);
    for (auto b : kAllBroad) EXPECT_EQ(broad_from_id(id_of(b)), b);
    EXPECT_FALSE(finer_from_id("Tense").has_value());
    EXPECT_TRUE(is_valid_label("wrong", TaskLevel::Binary));
    EXPECT_FALSE(is_valid_label("tense", TaskLevel::Broad));
}
