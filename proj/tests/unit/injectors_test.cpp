#include <gtest/gtest.h>

#include "forge/edit_distance.hpp"
#include "forge/injectors.hpp"
#include "forge/utf8.hpp"
#include "support.hpp"

using namespace forge;
using forge::testing::bundle;
using forge::testing::sent;

namespace {

InjectionOutcome outcome(const InjectionResult& r) {
    if (auto* s = std::get_if<Skip>(&r)) {
        ADD_FAILURE() << "skipped: " << id_of(s->reason);
        return {};
    }
    return std::get<InjectionOutcome>(r);
}

SkipReason skip(const InjectionResult& r) {
    if (auto* s = std::get_if<Skip>(&r)) return s->reason;
    ADD_FAILURE() << "produced " << std::get<InjectionOutcome>(r).wrong_text;
    return SkipReason::DegenerateSentence;
}

InjectionPins at(std::size_t token) {
    InjectionPins p;
    p.token = token;
    return p;
}

}  // namespace

TEST(SpellingNonDictionary, PinnedSubstitution) {
    RandomSource rng(1);
    auto p = at(2);
    p.edits = std::vector<EditOp>{{EditOp::Kind::Substitute, 2, U'ব'}};
    auto o = outcome(inject_spelling_non_dictionary(sent("আমি কারখানায় কাজ করি ।"), bundle(), rng, {}, p));
    EXPECT_EQ(o.wrong_text, "আমি কারখানায় কাব করি ।");
    EXPECT_EQ(o.finer, FinerClass::SpellingNonDictionary);
    EXPECT_EQ(o.span_start, 2u);
    EXPECT_EQ(o.span_end, 3u);
}

TEST(SpellingNonDictionary, PunctuationOnlySkips) {
    RandomSource rng(1);
    EXPECT_EQ(skip(inject_spelling_non_dictionary(sent("। ?"), bundle(), rng)),
              SkipReason::NoTargetWord);
}

TEST(SpellingNonDictionary, RandomOutputsAreNearNonWords) {
    auto gold = sent("আমি কারখানায় কাজ করি ।");
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RandomSource rng(seed);
        auto r = inject_spelling_non_dictionary(gold, bundle(), rng);
        auto* o = std::get_if<InjectionOutcome>(&r);
        if (!o) continue;
        auto wrong = surfaces(sent(o->wrong_text));
        auto right = surfaces(gold);
        ASSERT_EQ(wrong.size(), right.size());
        auto i = o->span_start;
        auto d = edit_distance(wrong[i], right[i]);
        EXPECT_TRUE(d == 1 || d == 2) << wrong[i];
        EXPECT_FALSE(bundle().is_dictionary_word(wrong[i])) << wrong[i];
    }
}

TEST(SpellingDictionary, HomonymPair) {
    RandomSource rng(1);
    auto p = at(2);
    p.fallback = false;
    p.replacement = canonical_bangla("বারি");
    auto o = outcome(inject_spelling_dictionary(sent("আমি কাল বাড়ি যাব ।"), bundle(), rng, {}, p));
    EXPECT_EQ(o.wrong_text, canonical_bangla("আমি কাল বারি যাব ।"));
    EXPECT_EQ(o.finer, FinerClass::SpellingDictionary);
}

TEST(SpellingDictionary, FallbackFindsNearbyWord) {
    RandomSource rng(1);
    auto p = at(2);
    p.fallback = true;
    p.replacement = canonical_bangla("শাড়ি");
    auto o = outcome(inject_spelling_dictionary(sent("আমি কাল বাড়ি যাব ।"), bundle(), rng, {}, p));
    EXPECT_EQ(o.wrong_text, canonical_bangla("আমি কাল শাড়ি যাব ।"));
}

TEST(SpellingDictionary, NoHomonymWithoutFallbackSkips) {
    RandomSource rng(1);
    InjectorOptions opt;
    opt.dictionary_fallback = false;
    EXPECT_EQ(skip(inject_spelling_dictionary(sent("। ?"), bundle(), rng, opt)),
              SkipReason::NoTargetWord);
}

TEST(Tense, PastToFuture) {
    RandomSource rng(1);
    auto p = at(3);
    p.tense = Tense::Future;
    p.replacement = "করব";
    auto o = outcome(inject_tense(sent("আমি গতকাল পড়াশোনা করেছিলাম ।"), bundle(), rng, {}, p));
    EXPECT_EQ(o.wrong_text, canonical_bangla("আমি গতকাল পড়াশোনা করব ।"));
    EXPECT_EQ(o.finer, FinerClass::Tense);
}

TEST(Tense, VerblessSkips) {
    RandomSource rng(1);
    EXPECT_EQ(skip(inject_tense(sent("হিমালয়ের সৌন্দর্য অবিস্মরণীয় ।"), bundle(), rng)),
              SkipReason::NoTargetWord);
}

TEST(Person, FirstToThird) {
    RandomSource rng(1);
    auto p = at(3);
    p.person = Person::Third;
    p.replacement = "করে";
    auto o = outcome(inject_person(sent("আমি কারখানায় কাজ করি ।"), bundle(), rng, {}, p));
    EXPECT_EQ(o.wrong_text, "আমি কারখানায় কাজ করে ।");
}

TEST(Person, VerblessSkips) {
    RandomSource rng(1);
    EXPECT_EQ(skip(inject_person(sent("হিমালয়ের সৌন্দর্য অবিস্মরণীয় ।"), bundle(), rng)),
              SkipReason::NoTargetWord);
}

TEST(Number, PluralToSingular) {
    RandomSource rng(1);
    auto o = outcome(inject_number(sent("আমরা এখানে চারজন থাকি ।"), bundle(), rng));
    EXPECT_EQ(o.wrong_text, "আমি এখানে চারজন থাকি ।");
}

TEST(Number, PronounFreeSkips) {
    RandomSource rng(1);
    EXPECT_EQ(skip(inject_number(sent("হিমালয়ের সৌন্দর্য অবিস্মরণীয় ।"), bundle(), rng)),
              SkipReason::NoTargetWord);
}

TEST(Gender, MasculineToFeminine) {
    RandomSource rng(1);
    auto o = outcome(inject_gender(sent("উত্তম একজন অসাধারণ অভিনেতা ।"), bundle(), rng, {}, at(3)));
    EXPECT_EQ(o.wrong_text, "উত্তম একজন অসাধারণ অভিনেত্রী ।");
}

TEST(Gender, FeminineToMasculineIsValidByDefault) {
    auto gold = sent("সুচিত্রা একজন অসাধারণ অভিনেত্রী ।");
    RandomSource rng(1);
    EXPECT_EQ(skip(inject_gender(gold, bundle(), rng)), SkipReason::WouldBeValid);
    InjectorOptions opt;
    opt.allow_feminine_to_masculine = true;
    auto o = outcome(inject_gender(gold, bundle(), rng, opt));
    EXPECT_EQ(o.wrong_text, "সুচিত্রা একজন অসাধারণ অভিনেতা ।");
}

TEST(Pos, NounToAdjective) {
    RandomSource rng(1);
    auto o = outcome(inject_pos(sent("হিমালয়ের সৌন্দর্য অবিস্মরণীয় ।"), bundle(), rng, {}, at(1)));
    EXPECT_EQ(o.wrong_text, canonical_bangla("হিমালয়ের সুন্দর অবিস্মরণীয় ।"));
}

TEST(Pos, NoPairSkips) {
    RandomSource rng(1);
    EXPECT_EQ(skip(inject_pos(sent("আমি কাল যাব ।"), bundle(), rng)), SkipReason::NoTargetWord);
}

TEST(MissingWord, DeletesVerb) {
    RandomSource rng(1);
    auto o = outcome(inject_missing_word(sent("আমি কাল বাড়ি যাব ।"), bundle(), rng, {}, at(3)));
    EXPECT_EQ(o.wrong_text, canonical_bangla("আমি কাল বাড়ি ।"));
    EXPECT_EQ(o.span_start, 3u);
    EXPECT_EQ(o.span_end, 3u);
}

TEST(MissingWord, ShortSentenceIsDegenerate) {
    RandomSource rng(1);
    EXPECT_EQ(skip(inject_missing_word(sent("আমি যাব ।"), bundle(), rng)),
              SkipReason::DegenerateSentence);
}

TEST(Punctuation, WrongMark) {
    RandomSource rng(1);
    auto p = at(4);
    p.punct_mode = PunctMode::WrongMark;
    p.mark = "?";
    auto o = outcome(inject_punctuation(sent("আমি গতকাল পড়াশোনা করেছিলাম ।"), rng, {}, p));
    EXPECT_EQ(o.wrong_text, "আমি গতকাল পড়াশোনা করেছিলাম ?");
}

TEST(Punctuation, MissingMark) {
    RandomSource rng(1);
    auto p = at(4);
    p.punct_mode = PunctMode::MissingMark;
    auto o = outcome(inject_punctuation(sent("আমি গতকাল পড়াশোনা করেছিলাম ।"), rng, {}, p));
    EXPECT_EQ(o.wrong_text, "আমি গতকাল পড়াশোনা করেছিলাম");
}

TEST(Gurucandali, ConvertsOneOfTwo) {
    RandomSource rng(1);
    InjectionPins p;
    p.convert = std::vector<std::size_t>{1};
    auto o = outcome(inject_gurucandali(sent("নন্দবাবু এটা লক্ষ্য করেছেন ।"), bundle(), rng, {}, p));
    EXPECT_EQ(o.wrong_text, "নন্দবাবু ইহা লক্ষ্য করেছেন ।");
    EXPECT_EQ(o.finer, FinerClass::GurucandaliDosa);
}

TEST(Gurucandali, SingleRegisterTokenSkips) {
    RandomSource rng(1);
    EXPECT_EQ(skip(inject_gurucandali(sent("নন্দবাবু এটা জানে ।"), bundle(), rng)),
              SkipReason::NoTargetWord);
}

TEST(Handcrafted, CaseRowSpansChangedToken) {
    auto r = ingest_handcrafted({{"আমি রান্নাঘরকে ভাত খাই।", "আমি রান্নাঘরে ভাত খাই।", FinerClass::Case, true}});
    ASSERT_EQ(r.outcomes.size(), 1u);
    EXPECT_EQ(r.outcomes[0].span_start, 1u);
    EXPECT_EQ(r.outcomes[0].span_end, 2u);
    EXPECT_EQ(r.outcomes[0].wrong_text, "আমি রান্নাঘরকে ভাত খাই ।");
    EXPECT_FALSE(r.outcomes[0].needs_validation);
}

TEST(Handcrafted, SemanticRowIsAccepted) {
    auto r = ingest_handcrafted(
        {{"মানস আকাশ খেতে ভালোবাসে।", "মানস মাছ খেতে ভালোবাসে।", FinerClass::Semantic, false}});
    ASSERT_EQ(r.outcomes.size(), 1u);
    EXPECT_EQ(r.outcomes[0].finer, FinerClass::Semantic);
    EXPECT_TRUE(r.outcomes[0].needs_validation);
}

TEST(Handcrafted, EqualTextsRejected) {
    auto r = ingest_handcrafted({{"আমি যাই।", "আমি যাই।", FinerClass::Case, true}});
    EXPECT_TRUE(r.outcomes.empty());
    ASSERT_EQ(r.rejected.size(), 1u);
    EXPECT_EQ(r.rejected[0].index, 0u);
}

TEST(Injectors, SameSeedSameOutcome) {
    auto gold = sent("আমি কারখানায় কাজ করি ।");
    for (auto c : {FinerClass::SpellingNonDictionary, FinerClass::SpellingDictionary,
                   FinerClass::Person, FinerClass::MissingWord}) {
        RandomSource a(9), b(9);
        auto inj = injector_for(c);
        ASSERT_NE(inj, nullptr);
        auto ra = inj(gold, bundle(), a, {}, {});
        auto rb = inj(gold, bundle(), b, {}, {});
        ASSERT_EQ(ra.index(), rb.index());
        if (auto* o = std::get_if<InjectionOutcome>(&ra))
            EXPECT_EQ(o->wrong_text, std::get<InjectionOutcome>(rb).wrong_text);
    }
}

// Random token sequences never crash and never produce an outcome that fails its audit.
TEST(Injectors, FuzzRandomTokenSequences) {
    std::vector<std::string> vocab = {"আমি", "করি", "করে", "এটা", "ইহা", "করিতেছে", "অভিনেতা",
                                      "সৌন্দর্য", "আমরা", "বাড়ি", "।", "?", "!", ",", "-", "কাজ",
                                      "কখগ", "x"};
    RandomSource pick(2024);
    std::size_t outcomes = 0;
    for (int i = 0; i < 10000; ++i) {
        std::vector<std::string> toks;
        for (auto n = pick.below(8); n; --n) toks.push_back(pick.choice(vocab));
        auto gold = make_sentence(toks, "fuzz");
        auto c = static_cast<FinerClass>(pick.below(13));
        auto inj = injector_for(c);
        if (!inj) continue;
        RandomSource rng(static_cast<std::uint64_t>(i));
        auto r = inj(gold, bundle(), rng, {}, {});
        if (auto* o = std::get_if<InjectionOutcome>(&r)) {
            ++outcomes;
            EXPECT_NE(o->wrong_text, o->correct_text);
            auto bad = audit_outcome(*o, gold, bundle());
            EXPECT_FALSE(bad.has_value()) << *bad << " in " << o->wrong_text;
        }
    }
    EXPECT_GT(outcomes, 0u);
}
