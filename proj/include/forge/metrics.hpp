#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/taxonomy.hpp"
#include "json.hpp"

namespace forge {

struct PredictionSet {
    std::map<std::string, std::string> entries;  // record id -> label at `level`
    TaskLevel level = TaskLevel::Finer;
    std::string run_tag;
};

struct ClassScore {
    long double precision = 0;
    long double recall = 0;
    long double f1 = 0;
    std::size_t support = 0;
    std::size_t predicted = 0;
};

struct EvalReport {
    TaskLevel level = TaskLevel::Finer;
    std::map<std::string, ClassScore> per_class;  // labels in gold or predictions only
    long double macro_f1 = 0;
    std::map<std::string, std::map<std::string, std::size_t>> confusion;  // gold -> pred -> n
    std::string run_tag;
    std::size_t n_items = 0;
};

struct RunAggregate {
    long double mean = 0;
    long double std = 0;
    std::size_t n_runs = 0;
};

class MetricsError : public std::runtime_error {
public:
    enum class Kind { UnknownId, InvalidLabel, MissingPrediction, EmptyInput, LevelMismatch };
    MetricsError(Kind k, std::string id, std::string label = {});
    Kind kind;
    std::string id;
    std::string label;
};
std::string_view id_of(MetricsError::Kind k);

using GoldLabels = std::map<std::string, FinerClass>;

EvalReport score(const GoldLabels& gold, const PredictionSet& preds);
RunAggregate aggregate(const std::vector<EvalReport>& reports);

struct LevelSummary {
    long double mean = 0;
    long double max = 0;
};

struct HumanReport {
    std::map<std::string, std::map<TaskLevel, EvalReport>> annotators;
    std::map<TaskLevel, LevelSummary> summary;
};

// Judgments: annotator -> (record id -> chosen class). Each annotator is
// scored only on the records they judged.
HumanReport human_report(const std::map<std::string, std::map<std::string, FinerClass>>& judgments,
                         const GoldLabels& gold);

// Two decimals in percent, as tables print them.
std::string format_score(long double x);

nlohmann::ordered_json report_json(const EvalReport& r);
nlohmann::ordered_json aggregate_json(const RunAggregate& a);
nlohmann::ordered_json human_report_json(const HumanReport& h);

// UTF-8 TSV `id<TAB>label`.
PredictionSet load_predictions(const std::string& path, TaskLevel level, std::string run_tag = {});

}  // namespace forge
