#include <gtest/gtest.h>

#include <cmath>

#include "forge/metrics.hpp"

using namespace forge;

namespace {

GoldLabels gold_of(const std::vector<FinerClass>& labels) {
    GoldLabels g;
    for (std::size_t i = 0; i < labels.size(); ++i) g["r" + std::to_string(i)] = labels[i];
    return g;
}

PredictionSet preds_of(const std::vector<std::string>& labels, TaskLevel level) {
    PredictionSet p;
    p.level = level;
    for (std::size_t i = 0; i < labels.size(); ++i) p.entries["r" + std::to_string(i)] = labels[i];
    return p;
}

MetricsError::Kind error_of(const GoldLabels& g, const PredictionSet& p) {
    try {
        score(g, p);
    } catch (const MetricsError& e) {
        return e.kind;
    }
    ADD_FAILURE() << "no error";
    return MetricsError::Kind::EmptyInput;
}

constexpr auto A = FinerClass::Tense;
constexpr auto B = FinerClass::Person;
constexpr auto C = FinerClass::Number;

}  // namespace

TEST(Score, PerfectPredictor) {
    auto g = gold_of({A, B, C, FinerClass::Correct});
    auto r = score(g, preds_of({"tense", "person", "number", "correct"}, TaskLevel::Finer));
    EXPECT_DOUBLE_EQ(static_cast<double>(r.macro_f1), 1.0);
}

TEST(Score, HandComputedThreeClass) {
    auto r = score(gold_of({A, A, B, C}), preds_of({"tense", "person", "person", "number"}, TaskLevel::Finer));
    EXPECT_NEAR(static_cast<double>(r.per_class["tense"].f1), 2.0 / 3, 1e-12);
    EXPECT_NEAR(static_cast<double>(r.per_class["person"].f1), 2.0 / 3, 1e-12);
    EXPECT_NEAR(static_cast<double>(r.per_class["number"].f1), 1.0, 1e-12);
    EXPECT_NEAR(static_cast<double>(r.macro_f1), 7.0 / 9, 1e-12);
    EXPECT_EQ(r.confusion["tense"]["person"], 1u);
    EXPECT_EQ(r.per_class.size(), 3u);
}

TEST(Score, ConstantPredictorOnBalancedBinary) {
    for (std::size_t n : {1u, 5u, 50u}) {
        std::vector<FinerClass> g;
        std::vector<std::string> p;
        for (std::size_t i = 0; i < n; ++i) {
            g.push_back(FinerClass::Correct);
            g.push_back(A);
            p.push_back("wrong");
            p.push_back("wrong");
        }
        auto r = score(gold_of(g), preds_of(p, TaskLevel::Binary));
        EXPECT_NEAR(static_cast<double>(r.macro_f1), 1.0 / 3, 1e-12) << n;
    }
}

TEST(Score, BroadLevelProjectsGold) {
    auto r = score(gold_of({A, FinerClass::SpellingDictionary}), preds_of({"word", "spelling"}, TaskLevel::Broad));
    EXPECT_DOUBLE_EQ(static_cast<double>(r.macro_f1), 1.0);
}

TEST(Score, Errors) {
    auto g = gold_of({A, B});
    EXPECT_EQ(error_of(g, preds_of({"tense", "person", "number"}, TaskLevel::Finer)),
              MetricsError::Kind::UnknownId);
    EXPECT_EQ(error_of(g, preds_of({"tense", "word"}, TaskLevel::Finer)),
              MetricsError::Kind::InvalidLabel);
    EXPECT_EQ(error_of(g, preds_of({"tense"}, TaskLevel::Finer)),
              MetricsError::Kind::MissingPrediction);
}

TEST(Score, InvariantUnderRowOrder) {
    auto g = gold_of({A, A, B, C, B, FinerClass::Correct});
    std::vector<std::string> p = {"tense", "person", "person", "tense", "number", "correct"};
    auto base = score(g, preds_of(p, TaskLevel::Finer));
    // Renaming ids permutes rows; map order changes with the new keys.
    GoldLabels g2;
    PredictionSet p2;
    p2.level = TaskLevel::Finer;
    std::size_t i = 0;
    for (auto& [id, c] : g) {
        auto nid = "z" + std::to_string(100 - i++);
        g2[nid] = c;
        p2.entries[nid] = p[std::stoul(id.substr(1))];
    }
    EXPECT_NEAR(static_cast<double>(score(g2, p2).macro_f1), static_cast<double>(base.macro_f1), 1e-15);
    std::size_t total = 0;
    for (auto& [gl, row] : base.confusion)
        for (auto& [pl, n] : row) total += n;
    EXPECT_EQ(total, g.size());
}

TEST(Score, InvariantUnderConsistentRelabeling) {
    auto a = score(gold_of({A, A, B, C}), preds_of({"tense", "person", "person", "number"}, TaskLevel::Finer));
    auto b = score(gold_of({C, C, A, B}), preds_of({"number", "tense", "tense", "person"}, TaskLevel::Finer));
    EXPECT_NEAR(static_cast<double>(a.macro_f1), static_cast<double>(b.macro_f1), 1e-15);
}

TEST(Aggregate, MeanAndPopulationStd) {
    EvalReport x, y;
    x.macro_f1 = 0.5;
    auto one = aggregate({x});
    EXPECT_DOUBLE_EQ(static_cast<double>(one.mean), 0.5);
    EXPECT_DOUBLE_EQ(static_cast<double>(one.std), 0.0);
    x.macro_f1 = 0.4;
    y.macro_f1 = 0.6;
    auto two = aggregate({x, y});
    EXPECT_NEAR(static_cast<double>(two.mean), 0.5, 1e-15);
    EXPECT_NEAR(static_cast<double>(two.std), 0.1, 1e-15);
    auto five = aggregate(std::vector<EvalReport>(5, x));
    EXPECT_DOUBLE_EQ(static_cast<double>(five.std), 0.0);
    EXPECT_THROW(aggregate({}), MetricsError);
}

TEST(HumanReport, PerfectJudgesScoreOne) {
    auto g = gold_of({A, B, C, FinerClass::Correct, FinerClass::Punctuation});
    std::map<std::string, std::map<std::string, FinerClass>> j;
    for (int a = 0; a < 12; ++a)
        for (auto& [id, c] : g) j["ann" + std::to_string(a)][id] = c;
    auto h = human_report(j, g);
    EXPECT_EQ(h.annotators.size(), 12u);
    for (auto level : {TaskLevel::Binary, TaskLevel::Broad, TaskLevel::Finer}) {
        EXPECT_DOUBLE_EQ(static_cast<double>(h.summary[level].mean), 1.0);
        EXPECT_DOUBLE_EQ(static_cast<double>(h.summary[level].max), 1.0);
    }
}

TEST(HumanReport, SingleAnnotatorMatchesScore) {
    auto g = gold_of({A, B, C, FinerClass::Correct});
    std::map<std::string, std::map<std::string, FinerClass>> j;
    for (auto& [id, c] : g) j["solo"][id] = A;
    auto h = human_report(j, g);
    auto direct = score(g, preds_of({"tense", "tense", "tense", "tense"}, TaskLevel::Finer));
    EXPECT_EQ(h.summary[TaskLevel::Finer].mean, direct.macro_f1);
    EXPECT_EQ(h.summary[TaskLevel::Finer].max, direct.macro_f1);
}

TEST(HumanReport, ScoresOnlyJudgedRecords) {
    auto g = gold_of({A, B, C});
    std::map<std::string, std::map<std::string, FinerClass>> j;
    j["partial"]["r0"] = A;
    auto h = human_report(j, g);
    EXPECT_EQ(h.annotators["partial"][TaskLevel::Finer].n_items, 1u);
    EXPECT_DOUBLE_EQ(static_cast<double>(h.summary[TaskLevel::Finer].mean), 1.0);
}

TEST(FormatScore, TwoDecimalPercent) {
    EXPECT_EQ(format_score(7.0L / 9), "77.78");
    EXPECT_EQ(format_score(1.0L), "100.00");
}
