#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "forge/config.hpp"
#include "forge/edit_distance.hpp"
#include "forge/random.hpp"
#include "forge/utf8.hpp"

using namespace forge;

namespace {

// Exponential recursive definition, fine for short strings.
std::size_t naive(const std::u32string& a, const std::u32string& b) {
    if (a.empty()) return b.size();
    if (b.empty()) return a.size();
    auto ta = a.substr(1), tb = b.substr(1);
    if (a[0] == b[0]) return naive(ta, tb);
    return 1 + std::min({naive(ta, b), naive(a, tb), naive(ta, tb)});
}

}  // namespace

TEST(EditDistance, Examples) {
    EXPECT_EQ(edit_distance(std::string_view("কাজ"), std::string_view("কাজ")), 0u);
    EXPECT_EQ(edit_distance(std::string_view("কাজ"), std::string_view("কাব")), 1u);
    auto a = utf8::decode("বাড়ি"), b = utf8::decode("বারি");
    EXPECT_EQ(edit_distance(a, b), naive(a, b));
}

TEST(EditDistance, MatchesNaiveRecursion) {
    RandomSource rng(3);
    std::u32string alpha = U"কখগা";
    for (int i = 0; i < 300; ++i) {
        std::u32string a, b;
        for (auto n = rng.below(6); n; --n) a.push_back(alpha[rng.index(alpha.size())]);
        for (auto n = rng.below(6); n; --n) b.push_back(alpha[rng.index(alpha.size())]);
        EXPECT_EQ(edit_distance(a, b), naive(a, b));
    }
}

TEST(Utf8, RoundTripAndInvalidInput) {
    std::string s = "আমি abc";
    EXPECT_EQ(utf8::encode(utf8::decode(s)), s);
    EXPECT_EQ(utf8::length(s), 7u);
    EXPECT_EQ(utf8::decode("\xFF")[0], U'\uFFFD');
}

TEST(RandomSource, SameSeedSameSequence) {
    RandomSource a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        auto x = a.next();
        EXPECT_EQ(x, b.next());
        differs |= x != c.next();
    }
    EXPECT_TRUE(differs);
}

TEST(RandomSource, BelowIsInRangeAndCoversIt) {
    RandomSource r(1);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        auto x = r.below(7);
        EXPECT_LT(x, 7u);
        seen.insert(x);
    }
    EXPECT_EQ(seen.size(), 7u);
    EXPECT_THROW(r.choice(std::vector<int>{}), std::invalid_argument);
}

TEST(RandomSource, DerivedSeedsDependOnEveryPart) {
    EXPECT_EQ(derive_seed({1, 2, 3}), derive_seed({1, 2, 3}));
    EXPECT_NE(derive_seed({1, 2, 3}), derive_seed({1, 3, 2}));
    EXPECT_NE(derive_seed({1, 2}), derive_seed({1, 2, 0}));
    EXPECT_NE(hash_bytes("a", 1), hash_bytes("a", 2));
}

TEST(FlatToml, ParsesSectionsAndTypes) {
    auto t = FlatToml::parse(R"(
seed = 7  # comment
name = "a # b"
ratio = 0.5
big = 18_426
on = true
files = ["x.tsv", "y.tsv"]
[quotas]
tense = 3
)");
    EXPECT_EQ(t.get_int("seed"), 7);
    EXPECT_EQ(t.get_string("name"), "a # b");
    EXPECT_DOUBLE_EQ(*t.get_number("ratio"), 0.5);
    EXPECT_EQ(t.get_int("big"), 18426);
    EXPECT_EQ(t.get_bool("on"), true);
    EXPECT_EQ(t.get_strings("files")->size(), 2u);
    EXPECT_EQ(t.get_int("quotas.tense"), 3);
    EXPECT_FALSE(t.get_int("missing").has_value());
    EXPECT_THROW(t.get_int("name"), ConfigError);
}

TEST(FlatToml, RejectsBadInput) {
    EXPECT_THROW(FlatToml::parse("a = \n"), ConfigError);
    EXPECT_THROW(FlatToml::parse("a = 1\na = 2\n"), ConfigError);
    EXPECT_THROW(FlatToml::parse("[open\n"), ConfigError);
    EXPECT_THROW(FlatToml::parse("novalue\n"), ConfigError);
}
