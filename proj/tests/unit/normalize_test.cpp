#include <gtest/gtest.h>

#include <random>

#include "forge/normalize.hpp"
#include "forge/utf8.hpp"
#include "support.hpp"

using namespace forge;

TEST(CleanUnicode, NoBreakSpaceBecomesSpace) {
    EXPECT_EQ(clean_unicode("আমি\u00A0কাজ"), "আমি কাজ");
}

TEST(CleanUnicode, EmptyInput) { EXPECT_EQ(clean_unicode(""), ""); }

TEST(CleanUnicode, ZwnjRemovedAndSpacesCollapsed) {
    EXPECT_EQ(clean_unicode("ক\u200Cখ  গ"), "কখ গ");
}

TEST(CleanUnicode, EverySpaceVariantMapsToOneSpace) {
    for (char32_t c : {0x00A0, 0x1680, 0x180E, 0x2000, 0x200A, 0x202F, 0x205F, 0x3000}) {
        std::u32string in = U"ক";
        in.push_back(c);
        in += U" খ";
        EXPECT_EQ(clean_unicode(utf8::encode(in)), "ক খ") << std::hex << unsigned(c);
    }
}

TEST(CleanUnicode, TrimsEdges) { EXPECT_EQ(clean_unicode("\u3000 ক\u00A0 "), "ক"); }

TEST(CleanUnicode, IdempotentOnRandomStrings) {
    std::mt19937 gen(5);
    std::u32string alphabet = U"কখগ া ি্ \u200C\u3000\u00A0\t-।";
    for (int i = 0; i < 2000; ++i) {
        std::u32string s;
        for (int k = gen() % 20; k > 0; --k) s.push_back(alphabet[gen() % alphabet.size()]);
        auto once = clean_unicode(utf8::encode(s));
        EXPECT_EQ(clean_unicode(once), once);
    }
}

TEST(SeparatePunctuation, Danda) { EXPECT_EQ(separate_punctuation("করেছিলাম।"), "করেছিলাম ।"); }

TEST(SeparatePunctuation, MultiCharacterMarkStaysWhole) {
    EXPECT_EQ(separate_punctuation("করব!.."), "করব !..");
    EXPECT_EQ(separate_punctuation("কী!|"), "কী !|");
    EXPECT_EQ(separate_punctuation("যাও!-"), "যাও !-");
    EXPECT_EQ(separate_punctuation("তারপর..."), "তারপর ...");
}

TEST(SeparatePunctuation, NoPunctuation) { EXPECT_EQ(separate_punctuation("ক"), "ক"); }

TEST(SeparatePunctuation, HyphenInsideWordKept) {
    EXPECT_EQ(separate_punctuation("মা-বাবা এসেছেন"), "মা-বাবা এসেছেন");
    EXPECT_EQ(separate_punctuation("ক - খ"), "ক - খ");
    EXPECT_EQ(separate_punctuation("শেষে -"), "শেষে -");
}

TEST(SeparatePunctuation, Idempotent) {
    for (std::string s : {"ক,খ;গ?", "আমি!..তুমি", "মা-বাবা।", "…!|!-"}) {
        auto once = separate_punctuation(clean_unicode(s));
        EXPECT_EQ(separate_punctuation(once), once) << s;
    }
}

TEST(SplitSentences, TwoSentences) {
    auto out = split_sentences({"আমি কাজ করি। তুমি যাও।", "doc"});
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0].tokens.size(), 4u);
    EXPECT_EQ(out[1].tokens.size(), 3u);
    EXPECT_EQ(out[0].tokens.back().surface, "।");
    EXPECT_TRUE(out[0].tokens.back().is_punct);
    EXPECT_EQ(out[1].source_id, "doc");
}

TEST(SplitSentences, NoTerminator) {
    auto out = split_sentences({"আমি কাজ করি", "doc"});
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].tokens.size(), 3u);
    EXPECT_FALSE(out[0].tokens.back().is_punct);
}

TEST(SplitSentences, PunctuationOnly) {
    auto out = split_sentences({"।", "doc"});
    ASSERT_EQ(out.size(), 1u);
    ASSERT_EQ(out[0].tokens.size(), 1u);
    EXPECT_EQ(out[0].tokens[0].surface, "।");
    EXPECT_EQ(out[0].word_count(), 0u);
}

TEST(SplitSentences, MultiCharacterTerminator) {
    auto out = split_sentences({"কী সুন্দর!.. আবার দেখব?", "doc"});
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0].tokens.back().surface, "!..");
}

TEST(Tokens, OffsetsAreCodePointsAndTileText) {
    auto s = forge::testing::sent("আমি  কাজ করি।");
    EXPECT_EQ(s.text, "আমি কাজ করি ।");
    auto cps = utf8::decode(s.text);
    for (auto& t : s.tokens) {
        EXPECT_LT(t.start, t.end);
        EXPECT_EQ(utf8::encode(cps.substr(t.start, t.end - t.start)), t.surface);
    }
    EXPECT_EQ(join_tokens(surfaces(s)), s.text);
}

TEST(Tokens, NoTokenStartsWithCombiningMark) {
    auto s = forge::testing::sent("ক াখ ্গ");
    for (auto& t : s.tokens) EXPECT_FALSE(utf8::is_bangla_combining(utf8::decode(t.surface)[0]));
}

TEST(Canonical, NuktaLettersDecompose) {
    EXPECT_EQ(canonical_bangla("\u09DC"), "\u09A1\u09BC");
    EXPECT_EQ(canonical_bangla("\u09DD"), "\u09A2\u09BC");
    EXPECT_EQ(canonical_bangla("\u09DF"), "\u09AF\u09BC");
    EXPECT_EQ(canonical_bangla("\u0995\u09C7\u09BE"), "\u0995\u09CB");
    EXPECT_EQ(canonical_bangla("\u0995\u09C7\u09D7"), "\u0995\u09CC");
}

TEST(PunctuationInventory, LoadsBundledFileLongestFirst) {
    auto inv = PunctuationInventory::load(forge::testing::kData + "/punctuation.txt");
    EXPECT_TRUE(inv.is_mark("!.."));
    EXPECT_TRUE(inv.is_mark("-"));
    EXPECT_TRUE(inv.is_terminator("!|"));
    EXPECT_FALSE(inv.is_terminator(","));
    auto t = utf8::decode("!..");
    EXPECT_EQ(inv.match_at(t, 0), 3u);
}
