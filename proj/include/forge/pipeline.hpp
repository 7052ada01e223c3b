#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/injectors.hpp"
#include "forge/lexicon.hpp"
#include "forge/normalize.hpp"
#include "forge/taxonomy.hpp"
#include "json.hpp"

namespace forge {

struct GenerationConfig {
    std::uint64_t master_seed = 1;
    std::map<FinerClass, std::size_t> quotas;
    // When set, every quota is scaled by n_gold / reference_gold and rounded.
    std::optional<double> reference_gold;
    std::string gold_path;
    std::string lexicon_dir;
    std::string punctuation_path;
    std::vector<std::string> handcrafted_paths;
    InjectorOptions injector;
    bool include_correct = true;
    std::size_t max_passes = 10;
    std::size_t threads = 0;  // 0 picks the hardware concurrency

    static GenerationConfig load(const std::string& path);
};

struct CorpusRecord {
    std::string id;
    std::string source_id;
    std::string wrong;
    std::string correct;
    FinerClass finer = FinerClass::Correct;
    std::size_t span_start = 0;
    std::size_t span_end = 0;
    std::string injector;
    bool needs_validation = false;

    BroadClass broad() const { return broad_of(finer); }
    bool operator==(const CorpusRecord&) const = default;
};

struct ClassReport {
    std::size_t wanted = 0;
    std::size_t achieved = 0;
    std::size_t passes = 0;
    bool with_replacement = false;
    bool exhausted = false;
    std::size_t duplicates = 0;
    std::size_t audit_failures = 0;
    std::map<std::string, std::size_t> skips;
};

struct GenerationReport {
    std::size_t gold_sentences = 0;
    ResourceCounts resources;
    std::map<FinerClass, ClassReport> classes;
    std::vector<RejectedRecord> rejected_handcrafted;
    std::vector<std::string> warnings;
};

struct Corpus {
    std::vector<CorpusRecord> records;
    GenerationReport report;
};

struct GenerationInputs {
    std::vector<CleanSentence> gold;
    const LexiconBundle* lexicon = nullptr;
    std::vector<HandcraftedRow> handcrafted;
    std::vector<std::string> handcrafted_sources;  // parallel to handcrafted
};

std::vector<CleanSentence> load_gold(const std::string& path,
                                     const PunctuationInventory& inv = default_punctuation());
std::map<FinerClass, std::size_t> resolve_quotas(const GenerationConfig& cfg, std::size_t n_gold);

Corpus build_corpus(const GenerationConfig& cfg);
Corpus build_corpus(const GenerationConfig& cfg, const GenerationInputs& in);

std::string record_id(std::uint64_t seed, const std::string& source_id, FinerClass c,
                      const std::string& wrong);

nlohmann::ordered_json record_to_json(const CorpusRecord& r);
CorpusRecord record_from_json(const nlohmann::json& j);
std::string to_jsonl(const std::vector<CorpusRecord>& records);
std::vector<CorpusRecord> parse_jsonl(const std::string& text);
void write_jsonl(const std::vector<CorpusRecord>& records, const std::string& path);
std::vector<CorpusRecord> read_jsonl(const std::string& path);
nlohmann::ordered_json report_to_json(const GenerationReport& r);

enum class AlpacaTask { Detection, Correction };
inline constexpr const char* kDetectionPrompt = "বাক্যটি সঠিক অথবা ভুল কিনা তা নির্ধারণ কর।";
inline constexpr const char* kCorrectionPrompt = "সঠিক ব্যাকরণ সংশোধন কর।";
nlohmann::ordered_json alpaca_json(const std::vector<CorpusRecord>& records, AlpacaTask task);

struct StatsReport {
    std::map<FinerClass, std::size_t> counts;
    std::size_t total_errors = 0;

    std::size_t broad_count(BroadClass b) const;
    // Percentage of total errors; 0 when there are none.
    long double percent(std::size_t count) const;
    static std::string format_percent(long double p);
    nlohmann::ordered_json to_json() const;
    std::string to_table() const;
};

StatsReport corpus_stats(const std::vector<CorpusRecord>& records);
StatsReport corpus_stats(const std::map<FinerClass, std::size_t>& counts);
std::map<FinerClass, std::size_t> load_survey_counts(const std::string& path);

}  // namespace forge
