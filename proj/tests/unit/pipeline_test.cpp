#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "forge/config.hpp"
#include "forge/pipeline.hpp"
#include "support.hpp"

using namespace forge;
using forge::testing::kData;
using forge::testing::TempDir;

namespace {

GenerationConfig small_config() {
    GenerationConfig cfg;
    cfg.master_seed = 11;
    cfg.gold_path = kData + "/gold_100.txt";
    cfg.lexicon_dir = kData;
    cfg.include_correct = false;
    cfg.threads = 2;
    return cfg;
}

std::map<FinerClass, std::size_t> count_by_class(const std::vector<CorpusRecord>& rs) {
    std::map<FinerClass, std::size_t> n;
    for (auto& r : rs) ++n[r.finer];
    return n;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Config, ParsesKeysAndResolvesRelativePaths) {
    TempDir dir("cfg");
    auto path = dir.file("gen.toml", R"(master_seed = 99
gold = "gold.txt"
lexicon_dir = "/abs/lex"
handcrafted = ["a.tsv", "sub/b.tsv"]
include_correct = false
threads = 3
[options]
case_rule = true
dictionary_fallback = false
[quotas]
tense = 17
punctuation = 100
)");
    auto cfg = GenerationConfig::load(path);
    EXPECT_EQ(cfg.master_seed, 99u);
    EXPECT_EQ(cfg.gold_path, (dir.path / "gold.txt").string());
    EXPECT_EQ(cfg.lexicon_dir, "/abs/lex");
    ASSERT_EQ(cfg.handcrafted_paths.size(), 2u);
    EXPECT_EQ(cfg.handcrafted_paths[1], (dir.path / "sub/b.tsv").string());
    EXPECT_FALSE(cfg.include_correct);
    EXPECT_EQ(cfg.threads, 3u);
    EXPECT_TRUE(cfg.injector.case_rule);
    EXPECT_FALSE(cfg.injector.dictionary_fallback);
    EXPECT_EQ(cfg.quotas.at(FinerClass::Tense), 17u);
    EXPECT_EQ(cfg.quotas.at(FinerClass::Punctuation), 100u);
}

TEST(Config, RejectsUnknownQuotaClass) {
    TempDir dir("cfgbad");
    auto path = dir.file("gen.toml", "[quotas]\nspelling = 3\n");
    EXPECT_THROW(GenerationConfig::load(path), ConfigError);
}

TEST(Quotas, ScaleWithGoldSize) {
    GenerationConfig cfg;
    cfg.reference_gold = 18426;
    cfg.quotas[FinerClass::SpellingNonDictionary] = 9213;
    cfg.quotas[FinerClass::Tense] = 3071;
    auto q = resolve_quotas(cfg, 1000);
    EXPECT_EQ(q[FinerClass::SpellingNonDictionary], 500u);
    EXPECT_EQ(q[FinerClass::Tense], 167u);
}

TEST(BuildCorpus, ZeroQuotasGiveGoldAsCorrect) {
    auto cfg = small_config();
    cfg.include_correct = true;
    auto corpus = build_corpus(cfg);
    auto gold = load_gold(cfg.gold_path);
    ASSERT_EQ(corpus.records.size(), gold.size());
    std::multiset<std::string> want, got;
    for (auto& g : gold) want.insert(g.text);
    for (auto& r : corpus.records) {
        EXPECT_EQ(r.finer, FinerClass::Correct);
        EXPECT_EQ(r.wrong, r.correct);
        got.insert(r.correct);
    }
    EXPECT_EQ(got, want);
}

TEST(BuildCorpus, MeetsQuotasOrReportsShortfall) {
    auto cfg = small_config();
    cfg.quotas = {{FinerClass::SpellingNonDictionary, 50}, {FinerClass::Punctuation, 100},
                  {FinerClass::Tense, 17}};
    auto corpus = build_corpus(cfg);
    auto n = count_by_class(corpus.records);
    for (auto& [c, q] : cfg.quotas) {
        auto& rep = corpus.report.classes.at(c);
        EXPECT_EQ(rep.achieved, n[c]);
        if (n[c] < q) {
            EXPECT_TRUE(rep.exhausted) << id_of(c);
            bool warned = false;
            for (auto& w : corpus.report.warnings) warned |= w.find(std::string(id_of(c))) != std::string::npos;
            EXPECT_TRUE(warned) << id_of(c);
        } else {
            EXPECT_EQ(n[c], q) << id_of(c);
        }
    }
    EXPECT_EQ(n[FinerClass::SpellingNonDictionary], 50u);
    EXPECT_EQ(n[FinerClass::Tense], 17u);
    std::set<std::string> ids;
    for (auto& r : corpus.records) {
        EXPECT_TRUE(ids.insert(r.id).second);
        EXPECT_NE(r.wrong, r.correct);
    }
}

TEST(BuildCorpus, IndependentOfThreadCount) {
    auto cfg = small_config();
    cfg.quotas = {{FinerClass::SpellingNonDictionary, 60}, {FinerClass::MissingWord, 40},
                  {FinerClass::GurucandaliDosa, 30}};
    cfg.threads = 1;
    auto a = build_corpus(cfg);
    cfg.threads = 4;
    auto b = build_corpus(cfg);
    EXPECT_EQ(a.records, b.records);
    cfg.master_seed = 12;
    EXPECT_NE(build_corpus(cfg).records, a.records);
}

TEST(Jsonl, RoundTripAndFieldOrder) {
    auto cfg = small_config();
    cfg.quotas = {{FinerClass::Tense, 3}};
    auto records = build_corpus(cfg).records;
    ASSERT_EQ(records.size(), 3u);
    TempDir dir("jsonl");
    auto path = (dir.path / "c.jsonl").string();
    write_jsonl(records, path);
    auto text = slurp(path);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
    EXPECT_EQ(read_jsonl(path), records);
    EXPECT_EQ(text.rfind("{\"id\":", 0), 0u);
    auto first = nlohmann::ordered_json::parse(text.substr(0, text.find('\n')));
    std::vector<std::string> keys;
    for (auto& [k, v] : first.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"id", "source_id", "wrong", "correct", "finer", "broad",
                                              "span_start", "span_end", "injector", "needs_validation"}));
}

TEST(Jsonl, EmptyCorpusIsEmptyFile) {
    TempDir dir("jsonl0");
    auto path = (dir.path / "e.jsonl").string();
    write_jsonl({}, path);
    EXPECT_EQ(slurp(path), "");
    EXPECT_TRUE(read_jsonl(path).empty());
}

TEST(Alpaca, CorrectionOutputIsGold) {
    CorpusRecord t{"1", "gold:0", "আমি গতকাল পড়াশোনা করব ।", "আমি গতকাল পড়াশোনা করেছিলাম ।",
                   FinerClass::Tense, 3, 4, "tense", false};
    CorpusRecord c{"2", "gold:1", "আমি যাই ।", "আমি যাই ।", FinerClass::Correct, 0, 0, "", false};
    auto corr = alpaca_json({t, c}, AlpacaTask::Correction);
    ASSERT_EQ(corr.size(), 1u);
    EXPECT_EQ(corr[0]["instruction"], kCorrectionPrompt);
    EXPECT_EQ(corr[0]["input"], t.wrong);
    EXPECT_EQ(corr[0]["output"], t.correct);
    auto det = alpaca_json({t, c}, AlpacaTask::Detection);
    ASSERT_EQ(det.size(), 2u);
    EXPECT_EQ(det[0]["output"], "wrong");
    EXPECT_EQ(det[1]["output"], "correct");
    EXPECT_EQ(det[1]["instruction"], kDetectionPrompt);
}

TEST(Stats, EmptyIsZero) {
    auto s = corpus_stats(std::vector<CorpusRecord>{});
    EXPECT_EQ(s.total_errors, 0u);
    EXPECT_EQ(StatsReport::format_percent(s.percent(0)), "0.00");
}

TEST(Stats, SurveyPercentagesSumToHundred) {
    auto s = corpus_stats(load_survey_counts(kData + "/manual_survey.tsv"));
    EXPECT_EQ(s.total_errors, 302u);
    EXPECT_EQ(StatsReport::format_percent(s.percent(s.counts.at(FinerClass::SpellingNonDictionary))), "41.39");
    long double sum = 0;
    for (auto& [c, n] : s.counts) sum += std::stold(StatsReport::format_percent(s.percent(n)));
    EXPECT_NEAR(static_cast<double>(sum), 100.0, 0.05);
}

TEST(Stats, CorrectRecordsAreNotErrors) {
    CorpusRecord c{"2", "g", "a", "a", FinerClass::Correct, 0, 0, "", false};
    CorpusRecord p{"3", "g", "a", "a ।", FinerClass::Punctuation, 1, 1, "punctuation", false};
    auto s = corpus_stats(std::vector<CorpusRecord>{c, p});
    EXPECT_EQ(s.total_errors, 1u);
    EXPECT_EQ(StatsReport::format_percent(s.percent(1)), "100.00");
}
