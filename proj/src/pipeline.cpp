#include "forge/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "forge/config.hpp"
#include "forge/random.hpp"

namespace forge {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kChunk = 128;

std::string resolve(const fs::path& base, const std::string& p) {
    if (p.empty()) return p;
    fs::path q(p);
    return q.is_absolute() ? p : (base / q).lexically_normal().string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Deterministic parallel map: results land in input order regardless of
// how work is spread over threads.
template <class F>
std::vector<InjectionResult> parallel_map(std::size_t n, std::size_t threads, F f) {
    std::vector<std::optional<InjectionResult>> slots(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) slots[i] = f(i);
    };
    std::size_t t = std::min(threads, n);
    if (t <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < t; ++k) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    std::vector<InjectionResult> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

CorpusRecord to_record(const InjectionOutcome& o, std::uint64_t seed, std::string source_id) {
    CorpusRecord r;
    r.source_id = std::move(source_id);
    r.wrong = o.wrong_text;
    r.correct = o.correct_text;
    r.finer = o.finer;
    r.span_start = o.span_start;
    r.span_end = o.span_end;
    r.injector = o.injector;
    r.needs_validation = o.needs_validation;
    r.id = record_id(seed, r.source_id, r.finer, r.wrong);
    return r;
}

std::string gold_source(std::size_t i) { return "gold:" + std::to_string(i); }

}  // namespace

GenerationConfig GenerationConfig::load(const std::string& path) {
    auto toml = FlatToml::load(path);
    fs::path base = fs::absolute(path).parent_path();
    GenerationConfig cfg;
    if (auto v = toml.get_int("master_seed")) cfg.master_seed = static_cast<std::uint64_t>(*v);
    if (auto v = toml.get_number("reference_gold")) cfg.reference_gold = *v;
    if (auto v = toml.get_string("gold")) cfg.gold_path = resolve(base, *v);
    if (auto v = toml.get_string("lexicon_dir")) cfg.lexicon_dir = resolve(base, *v);
    if (auto v = toml.get_string("punctuation")) cfg.punctuation_path = resolve(base, *v);
    if (auto v = toml.get_strings("handcrafted"))
        for (auto& p : *v) cfg.handcrafted_paths.push_back(resolve(base, p));
    if (auto v = toml.get_bool("include_correct")) cfg.include_correct = *v;
    if (auto v = toml.get_int("max_passes")) cfg.max_passes = static_cast<std::size_t>(*v);
    if (auto v = toml.get_int("threads")) cfg.threads = static_cast<std::size_t>(*v);

    auto& o = cfg.injector;
    if (auto v = toml.get_int("options.max_retries")) o.max_retries = static_cast<int>(*v);
    if (auto v = toml.get_bool("options.confusion_alphabet")) o.confusion_alphabet = *v;
    if (auto v = toml.get_bool("options.dictionary_fallback")) o.dictionary_fallback = *v;
    if (auto v = toml.get_bool("options.random_deletion")) o.random_deletion = *v;
    if (auto v = toml.get_bool("options.allow_feminine_to_masculine"))
        o.allow_feminine_to_masculine = *v;
    if (auto v = toml.get_bool("options.case_rule")) o.case_rule = *v;

    for (auto& [key, value] : toml.values()) {
        if (key.rfind("quotas.", 0) != 0) continue;
        auto label = key.substr(7);
        auto c = finer_from_id(label);
        if (!c) throw ConfigError(path + ": unknown class in quotas: " + label);
        auto n = toml.get_int(key);
        if (!n || *n < 0) throw ConfigError(path + ": quota must be a non-negative integer");
        cfg.quotas[*c] = static_cast<std::size_t>(*n);
    }
    return cfg;
}

std::vector<CleanSentence> load_gold(const std::string& path, const PunctuationInventory& inv) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gold corpus " + path);
    std::vector<CleanSentence> out;
    std::unordered_set<std::string> seen;
    std::string line;
    while (std::getline(in, line)) {
        for (auto& s : split_sentences({line, "gold"}, inv))
            if (!s.tokens.empty() && seen.insert(s.text).second) out.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i].source_id = gold_source(i);
    return out;
}

std::map<FinerClass, std::size_t> resolve_quotas(const GenerationConfig& cfg, std::size_t n_gold) {
    std::map<FinerClass, std::size_t> out;
    for (auto& [c, q] : cfg.quotas) {
        long double v = static_cast<long double>(q);
        if (cfg.reference_gold && *cfg.reference_gold > 0)
            v = v * static_cast<long double>(n_gold) / static_cast<long double>(*cfg.reference_gold);
        out[c] = static_cast<std::size_t>(std::llround(v));
    }
    if (cfg.include_correct) {
        auto it = out.find(FinerClass::Correct);
        out[FinerClass::Correct] = it == out.end() ? n_gold : std::min(it->second, n_gold);
    } else {
        out.erase(FinerClass::Correct);
    }
    return out;
}

std::string record_id(std::uint64_t seed, const std::string& source_id, FinerClass c,
                      const std::string& wrong) {
    std::string key = source_id;
    key += '\x1f';
    key += id_of(c);
    key += '\x1f';
    key += wrong;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(hash_bytes(key, seed)));
    return buf;
}

Corpus build_corpus(const GenerationConfig& cfg) {
    auto inv = cfg.punctuation_path.empty() ? default_punctuation()
                                            : PunctuationInventory::load(cfg.punctuation_path);
    auto lex = LexiconBundle::load(ResourcePaths::in_directory(cfg.lexicon_dir));
    GenerationInputs in;
    in.gold = load_gold(cfg.gold_path, inv);
    in.lexicon = &lex;
    for (auto& p : cfg.handcrafted_paths) {
        auto rows = load_handcrafted(p);
        auto stem = fs::path(p).stem().string();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            in.handcrafted.push_back(rows[i]);
            in.handcrafted_sources.push_back(stem + ":" + std::to_string(i + 1));
        }
    }
    GenerationConfig local = cfg;
    local.injector.punctuation = &inv;
    return build_corpus(local, in);
}

Corpus build_corpus(const GenerationConfig& cfg, const GenerationInputs& in) {
    if (!in.lexicon) throw std::invalid_argument("generation needs a lexicon");
    if (in.gold.empty()) throw std::runtime_error("gold corpus is empty after normalization");
    const auto& lex = *in.lexicon;
    const auto& gold = in.gold;
    const std::size_t threads =
        cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    Corpus corpus;
    auto& report = corpus.report;
    report.gold_sentences = gold.size();
    report.resources = lex.counts();

    std::unordered_set<std::string> gold_texts;
    for (auto& g : gold) gold_texts.insert(g.text);
    auto quotas = resolve_quotas(cfg, gold.size());

    HandcraftedResult hand = ingest_handcrafted(in.handcrafted, cfg.injector.inventory());
    report.rejected_handcrafted = hand.rejected;

    for (auto& [cls, wanted] : quotas) {
        auto& cr = report.classes[cls];
        cr.wanted = wanted;
        std::unordered_set<std::string> seen;
        std::vector<CorpusRecord> accepted;
        const auto class_key = static_cast<std::uint64_t>(cls);

        auto offer = [&](const InjectionOutcome& o, const CleanSentence* g, std::string source) {
            if (gold_texts.count(o.wrong_text)) {
                ++cr.skips[std::string(id_of(SkipReason::WouldBeValid))];
                return;
            }
            if (seen.count(o.wrong_text)) {
                ++cr.duplicates;
                return;
            }
            if (g && audit_outcome(o, *g, lex, cfg.injector)) {
                ++cr.audit_failures;
                return;
            }
            seen.insert(o.wrong_text);
            accepted.push_back(to_record(o, cfg.master_seed, std::move(source)));
        };

        if (cls == FinerClass::Correct) {
            std::vector<std::size_t> order(gold.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            if (wanted < gold.size()) {
                RandomSource rng(derive_seed({cfg.master_seed, class_key, 0}));
                rng.shuffle(order);
                order.resize(wanted);
            }
            for (auto i : order) {
                CorpusRecord r;
                r.source_id = gold[i].source_id;
                r.wrong = r.correct = gold[i].text;
                r.finer = FinerClass::Correct;
                r.injector = "gold";
                r.id = record_id(cfg.master_seed, r.source_id, r.finer, r.wrong);
                accepted.push_back(std::move(r));
            }
            cr.passes = 1;
        } else if (Injector inj = injector_for(cls)) {
            for (std::size_t pass = 0; pass < std::max<std::size_t>(1, cfg.max_passes); ++pass) {
                if (accepted.size() >= wanted) break;
                std::size_t before = accepted.size();
                ++cr.passes;
                if (pass > 0) cr.with_replacement = true;
                std::vector<std::size_t> order(gold.size());
                for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                RandomSource perm(derive_seed({cfg.master_seed, class_key, pass, 0xC0FFEE}));
                perm.shuffle(order);
                for (std::size_t c0 = 0; c0 < order.size() && accepted.size() < wanted; c0 += kChunk) {
                    std::size_t n = std::min(kChunk, order.size() - c0);
                    auto results = parallel_map(n, threads, [&](std::size_t k) {
                        std::size_t gi = order[c0 + k];
                        RandomSource rng(derive_seed({cfg.master_seed, class_key, pass, gi}));
                        return inj(gold[gi], lex, rng, cfg.injector, {});
                    });
                    for (std::size_t k = 0; k < n && accepted.size() < wanted; ++k) {
                        std::size_t gi = order[c0 + k];
                        if (auto* skip = std::get_if<Skip>(&results[k])) {
                            ++cr.skips[std::string(id_of(skip->reason))];
                            continue;
                        }
                        offer(std::get<InjectionOutcome>(results[k]), &gold[gi], gold[gi].source_id);
                    }
                }
                if (accepted.size() == before) break;
            }
        } else {
            // Handcrafted classes draw from the ingested files, then optionally
            // from the rule-based case injector.
            std::vector<std::size_t> pool;
            for (std::size_t i = 0; i < hand.outcomes.size(); ++i)
                if (hand.outcomes[i].finer == cls) pool.push_back(i);
            RandomSource rng(derive_seed({cfg.master_seed, class_key, 0}));
            rng.shuffle(pool);
            cr.passes = 1;
            for (auto i : pool) {
                if (accepted.size() >= wanted) break;
                offer(hand.outcomes[i], nullptr, in.handcrafted_sources.empty()
                                                     ? "handcrafted:" + std::to_string(hand.rows[i])
                                                     : in.handcrafted_sources[hand.rows[i]]);
            }
            if (cls == FinerClass::Case && cfg.injector.case_rule && accepted.size() < wanted) {
                ++cr.passes;
                for (std::size_t gi = 0; gi < gold.size() && accepted.size() < wanted; ++gi) {
                    RandomSource r(derive_seed({cfg.master_seed, class_key, 1, gi}));
                    auto res = inject_case_rule(gold[gi], lex, r, cfg.injector, {});
                    if (auto* skip = std::get_if<Skip>(&res)) {
                        ++cr.skips[std::string(id_of(skip->reason))];
                        continue;
                    }
                    offer(std::get<InjectionOutcome>(res), &gold[gi], gold[gi].source_id);
                }
            }
        }

        cr.achieved = accepted.size();
        cr.exhausted = cr.achieved < wanted;
        if (cr.exhausted)
            report.warnings.push_back("QuotaUnreachable(" + std::string(id_of(cls)) + ", " +
                                      std::to_string(cr.achieved) + ", " + std::to_string(wanted) +
                                      ")");
        for (auto& r : accepted) corpus.records.push_back(std::move(r));
    }

    std::sort(corpus.records.begin(), corpus.records.end(),
              [](const CorpusRecord& a, const CorpusRecord& b) { return a.id < b.id; });
    return corpus;
}

nlohmann::ordered_json record_to_json(const CorpusRecord& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["source_id"] = r.source_id;
    j["wrong"] = r.wrong;
    j["correct"] = r.correct;
    j["finer"] = id_of(r.finer);
    j["broad"] = id_of(r.broad());
    j["span_start"] = r.span_start;
    j["span_end"] = r.span_end;
    j["injector"] = r.injector;
    j["needs_validation"] = r.needs_validation;
    return j;
}

CorpusRecord record_from_json(const nlohmann::json& j) {
    CorpusRecord r;
    r.id = j.at("id").get<std::string>();
    r.source_id = j.at("source_id").get<std::string>();
    r.wrong = j.at("wrong").get<std::string>();
    r.correct = j.at("correct").get<std::string>();
    auto finer = finer_from_id(j.at("finer").get<std::string>());
    if (!finer) throw std::runtime_error("unknown class in record " + r.id);
    r.finer = *finer;
    r.span_start = j.at("span_start").get<std::size_t>();
    r.span_end = j.at("span_end").get<std::size_t>();
    r.injector = j.at("injector").get<std::string>();
    r.needs_validation = j.at("needs_validation").get<bool>();
    return r;
}

std::string to_jsonl(const std::vector<CorpusRecord>& records) {
    auto sorted = records;
    std::sort(sorted.begin(), sorted.end(),
              [](const CorpusRecord& a, const CorpusRecord& b) { return a.id < b.id; });
    std::string out;
    for (auto& r : sorted) {
        out += record_to_json(r).dump();
        out += '\n';
    }
    return out;
}

std::vector<CorpusRecord> parse_jsonl(const std::string& text) {
    std::vector<CorpusRecord> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(record_from_json(nlohmann::json::parse(line)));
    }
    return out;
}

void write_jsonl(const std::vector<CorpusRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_jsonl(records);
}

std::vector<CorpusRecord> read_jsonl(const std::string& path) { return parse_jsonl(read_file(path)); }

nlohmann::ordered_json report_to_json(const GenerationReport& r) {
    nlohmann::ordered_json j;
    j["gold_sentences"] = r.gold_sentences;
    j["resources"] = {{"words", r.resources.words},
                      {"homonyms", r.resources.homonyms},
                      {"verb_forms", r.resources.verb_forms},
                      {"verb_lemmas", r.resources.verb_lemmas},
                      {"pronoun_pairs", r.resources.pronoun_pairs},
                      {"gender_pairs", r.resources.gender_pairs},
                      {"noun_adj_pairs", r.resources.noun_adj_pairs},
                      {"register_verbs", r.resources.register_verbs},
                      {"register_pronouns", r.resources.register_pronouns}};
    auto& classes = j["classes"] = nlohmann::ordered_json::object();
    for (auto& [c, cr] : r.classes) {
        nlohmann::ordered_json e;
        e["wanted"] = cr.wanted;
        e["achieved"] = cr.achieved;
        e["passes"] = cr.passes;
        e["with_replacement"] = cr.with_replacement;
        e["exhausted"] = cr.exhausted;
        e["duplicates"] = cr.duplicates;
        e["audit_failures"] = cr.audit_failures;
        e["skips"] = nlohmann::ordered_json::object();
        for (auto& [k, v] : cr.skips) e["skips"][k] = v;
        classes[std::string(id_of(c))] = e;
    }
    j["rejected_handcrafted"] = nlohmann::ordered_json::array();
    for (auto& rr : r.rejected_handcrafted)
        j["rejected_handcrafted"].push_back({{"index", rr.index}, {"reason", rr.reason}});
    j["warnings"] = r.warnings;
    return j;
}

nlohmann::ordered_json alpaca_json(const std::vector<CorpusRecord>& records, AlpacaTask task) {
    auto out = nlohmann::ordered_json::array();
    for (auto& r : records) {
        if (task == AlpacaTask::Correction && r.finer == FinerClass::Correct) continue;
        nlohmann::ordered_json e;
        if (task == AlpacaTask::Detection) {
            e["instruction"] = kDetectionPrompt;
            e["input"] = r.wrong;
            e["output"] = project(r.finer, TaskLevel::Binary);
        } else {
            e["instruction"] = kCorrectionPrompt;
            e["input"] = r.wrong;
            e["output"] = r.correct;
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::size_t StatsReport::broad_count(BroadClass b) const {
    std::size_t n = 0;
    for (auto& [c, k] : counts)
        if (broad_of(c) == b) n += k;
    return n;
}

long double StatsReport::percent(std::size_t count) const {
    if (total_errors == 0) return 0.0L;
    return 100.0L * static_cast<long double>(count) / static_cast<long double>(total_errors);
}

std::string StatsReport::format_percent(long double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2Lf", p);
    return buf;
}

nlohmann::ordered_json StatsReport::to_json() const {
    nlohmann::ordered_json j;
    j["total_errors"] = total_errors;
    auto& f = j["finer"] = nlohmann::ordered_json::object();
    for (auto c : kAllFiner) {
        if (c == FinerClass::Correct) continue;
        std::size_t n = counts.count(c) ? counts.at(c) : 0;
        f[std::string(id_of(c))] = {{"count", n}, {"percent", format_percent(percent(n))}};
    }
    auto& b = j["broad"] = nlohmann::ordered_json::object();
    for (auto c : kAllBroad) {
        if (c == BroadClass::Correct) continue;
        std::size_t n = broad_count(c);
        b[std::string(id_of(c))] = {{"count", n}, {"percent", format_percent(percent(n))}};
    }
    return j;
}

std::string StatsReport::to_table() const {
    std::string out = "class\tcount\tpercent\n";
    auto row = [&](std::string_view name, std::size_t n) {
        out += std::string(name) + "\t" + std::to_string(n) + "\t" + format_percent(percent(n)) + "%\n";
    };
    for (auto b : kAllBroad) {
        if (b == BroadClass::Correct) continue;
        for (auto c : kAllFiner)
            if (c != FinerClass::Correct && broad_of(c) == b && b != BroadClass::Punctuation &&
                b != BroadClass::Semantic && b != BroadClass::GurucandaliDosa)
                row(id_of(c), counts.count(c) ? counts.at(c) : 0);
        row(id_of(b), broad_count(b));
    }
    row("total", total_errors);
    return out;
}

StatsReport corpus_stats(const std::map<FinerClass, std::size_t>& counts) {
    StatsReport s;
    for (auto& [c, n] : counts) {
        if (c == FinerClass::Correct) continue;
        s.counts[c] = n;
        s.total_errors += n;
    }
    return s;
}

StatsReport corpus_stats(const std::vector<CorpusRecord>& records) {
    std::map<FinerClass, std::size_t> counts;
    for (auto& r : records)
        if (r.finer != FinerClass::Correct) ++counts[r.finer];
    return corpus_stats(counts);
}

std::map<FinerClass, std::size_t> load_survey_counts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::map<FinerClass, std::size_t> out;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        auto c = tab == std::string::npos ? std::nullopt : finer_from_id(line.substr(0, tab));
        if (!c) throw std::runtime_error(path + ":" + std::to_string(n) + ": bad survey row");
        out[*c] = static_cast<std::size_t>(std::stoull(line.substr(tab + 1)));
    }
    return out;
}

}  // namespace forge
