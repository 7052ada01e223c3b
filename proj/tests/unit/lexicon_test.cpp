#include <gtest/gtest.h>

#include <set>

#include "forge/lexicon.hpp"
#include "support.hpp"

using namespace forge;
using forge::testing::bundle;
using forge::testing::kData;
using forge::testing::TempDir;

TEST(Lexicon, BundledCounts) {
    const auto& c = bundle().counts();
    EXPECT_EQ(c.homonyms, 300u);
    EXPECT_EQ(c.verb_forms, 470u);
    EXPECT_EQ(c.verb_lemmas, 24u);
    EXPECT_EQ(c.pronoun_pairs, 23u);
    EXPECT_EQ(c.gender_pairs, 350u);
    EXPECT_EQ(c.noun_adj_pairs, 350u);
}

TEST(Lexicon, FindVerb) {
    auto cells = bundle().find_verb("করি");
    ASSERT_FALSE(cells.empty());
    bool first_present = false;
    for (auto& c : cells) first_present |= c.tense == Tense::Present && c.person == Person::First;
    EXPECT_TRUE(first_present);
    bool third = false;
    for (auto& c : bundle().find_verb("করে")) third |= c.tense == Tense::Present && c.person == Person::Third;
    EXPECT_TRUE(third);
    EXPECT_TRUE(bundle().find_verb(canonical_bangla("বাড়ি")).empty());
}

TEST(Lexicon, DictionaryMembership) {
    EXPECT_TRUE(bundle().is_dictionary_word("কাজ"));
    EXPECT_FALSE(bundle().is_dictionary_word("কাব"));
    EXPECT_FALSE(bundle().is_dictionary_word(""));
}

TEST(Lexicon, HomonymsAreDictionaryWords) {
    for (auto& [a, b] : bundle().homonym_pairs()) {
        EXPECT_TRUE(bundle().is_dictionary_word(a)) << a;
        EXPECT_TRUE(bundle().is_dictionary_word(b)) << b;
        EXPECT_NE(a, b);
    }
}

TEST(Lexicon, HomonymLookupIsSymmetric) {
    for (auto& [a, b] : bundle().homonym_pairs()) {
        auto& ha = bundle().homonyms_of(a);
        auto& hb = bundle().homonyms_of(b);
        EXPECT_NE(std::find(ha.begin(), ha.end(), b), ha.end());
        EXPECT_NE(std::find(hb.begin(), hb.end(), a), hb.end());
    }
}

TEST(Lexicon, ReverseIndexConsistent) {
    for (auto& [cell, form] : bundle().paradigm()) {
        auto cells = bundle().find_verb(form);
        EXPECT_NE(std::find(cells.begin(), cells.end(), cell), cells.end()) << form;
        for (auto& c : cells) EXPECT_EQ(*bundle().verb_form(c), form);
    }
}

TEST(Lexicon, RegisterColumnsDisjoint) {
    std::set<std::string> sadhu, calita;
    for (auto* m : {&bundle().register_verbs(), &bundle().register_pronouns()})
        for (auto& [s, c] : m->pairs()) {
            sadhu.insert(s);
            calita.insert(c);
        }
    for (auto& s : sadhu) EXPECT_EQ(calita.count(s), 0u) << s;
    EXPECT_EQ(bundle().register_of("ইহা"), Register::Sadhu);
    EXPECT_EQ(bundle().register_of("এটা"), Register::Calita);
    EXPECT_EQ(*bundle().register_partner("এটা"), "ইহা");
}

TEST(Lexicon, PairMapsBijectiveWithoutSelfPairs) {
    for (auto* m : {&bundle().pronoun_numbers(), &bundle().genders(), &bundle().noun_adjectives()})
        for (auto& [l, r] : m->pairs()) {
            EXPECT_NE(l, r);
            EXPECT_EQ(*m->partner(l), r);
            EXPECT_EQ(*m->partner(r), l);
            EXPECT_FALSE(m->in_right(l));
        }
}

TEST(Lexicon, PronounsAreFrozen) {
    EXPECT_TRUE(bundle().is_pronoun("আমি"));
    EXPECT_TRUE(bundle().is_pronoun("আমরা"));
    EXPECT_TRUE(bundle().is_pronoun("ইহা"));
    EXPECT_FALSE(bundle().is_pronoun("কাজ"));
}

TEST(PairMap, RejectsConflicts) {
    PairMap m;
    EXPECT_TRUE(m.insert("a", "b"));
    EXPECT_FALSE(m.insert("a", "c"));
    EXPECT_FALSE(m.insert("b", "d"));
    EXPECT_FALSE(m.insert("x", "x"));
    EXPECT_EQ(m.size(), 1u);
}

namespace {

LexiconError::Kind load_error(const ResourcePaths& p) {
    try {
        LexiconBundle::load(p);
    } catch (const LexiconError& e) {
        return e.kind;
    }
    ADD_FAILURE() << "load succeeded";
    return LexiconError::Kind::Io;
}

}  // namespace

TEST(LexiconErrors, DuplicateVerbCell) {
    TempDir dir("lexdup");
    auto p = ResourcePaths::in_directory(kData);
    p.verbs = dir.file("verbs.tsv", "কর্\tpresent\t1\tকরি\nকর্\tpresent\t1\tকরিই\n");
    EXPECT_EQ(load_error(p), LexiconError::Kind::DuplicateKey);
}

TEST(LexiconErrors, EmptyHomonymFile) {
    TempDir dir("lexempty");
    auto p = ResourcePaths::in_directory(kData);
    p.homonyms = dir.file("homonyms.tsv", "# nothing\n");
    EXPECT_EQ(load_error(p), LexiconError::Kind::EmptyResource);
}

TEST(LexiconErrors, MalformedRowCarriesLine) {
    TempDir dir("lexbad");
    auto p = ResourcePaths::in_directory(kData);
    p.genders = dir.file("genders.tsv", "বাবা\tমা\nভাই\n");
    try {
        LexiconBundle::load(p);
        FAIL();
    } catch (const LexiconError& e) {
        EXPECT_EQ(e.kind, LexiconError::Kind::MalformedRow);
        EXPECT_EQ(e.line, 2u);
    }
}

TEST(LexiconErrors, MissingFile) {
    auto p = ResourcePaths::in_directory(kData);
    p.registers = "/nonexistent/registers.tsv";
    EXPECT_EQ(load_error(p), LexiconError::Kind::Io);
}
