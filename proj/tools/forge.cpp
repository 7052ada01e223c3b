// Command-line front end: corpus generation, statistics, exports, scoring,
// text cleaning and the annotation server.
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "forge/annotation_server.hpp"
#include "forge/metrics.hpp"
#include "forge/normalize.hpp"
#include "forge/pipeline.hpp"

namespace fs = std::filesystem;
using namespace forge;

namespace {

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GoldLabels gold_labels(const std::vector<CorpusRecord>& records) {
    GoldLabels g;
    for (auto& r : records) g[r.id] = r.finer;
    return g;
}

AnnotationServer* g_server = nullptr;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bangla grammatical error corpus toolkit"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Build an error corpus from a gold corpus");
    std::string config, out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> gold_override;
    std::optional<std::size_t> threads;
    gen->add_option("--config", config, "Generation config (TOML)")->required()->check(CLI::ExistingFile);
    gen->add_option("--out", out_dir, "Output directory")->required();
    gen->add_option("--seed", seed, "Override master_seed");
    gen->add_option("--gold", gold_override, "Override the gold corpus path");
    gen->add_option("--threads", threads, "Worker threads (0 = all cores)");

    auto* stats = app.add_subcommand("stats", "Per-class counts and percentages");
    std::string stats_in;
    bool stats_survey = false, stats_json = false;
    stats->add_option("--in", stats_in, "Corpus JSONL, or survey TSV with --survey")
        ->required()
        ->check(CLI::ExistingFile);
    stats->add_flag("--survey", stats_survey, "Input is a class<TAB>count survey file");
    stats->add_flag("--json", stats_json, "Print JSON instead of a table");

    auto* exp = app.add_subcommand("export", "Convert a corpus JSONL to another format");
    std::string exp_in, exp_out = "-", exp_format = "jsonl";
    exp->add_option("--in", exp_in, "Corpus JSONL")->required()->check(CLI::ExistingFile);
    exp->add_option("--out", exp_out, "Output file ('-' for stdout)");
    exp->add_option("--format", exp_format)
        ->check(CLI::IsMember({"jsonl", "alpaca-detect", "alpaca-correct"}));

    auto* eval = app.add_subcommand("eval", "Score predictions against a corpus");
    std::string eval_gold, eval_pred, eval_level = "finer", eval_agg, eval_tag;
    eval->add_option("--gold", eval_gold, "Corpus JSONL")->required()->check(CLI::ExistingFile);
    eval->add_option("--pred", eval_pred, "Prediction TSV (id<TAB>label)")->check(CLI::ExistingFile);
    eval->add_option("--level", eval_level)->check(CLI::IsMember({"binary", "broad", "finer"}));
    eval->add_option("--aggregate", eval_agg, "Directory of prediction TSVs, one per run")
        ->check(CLI::ExistingDirectory);
    eval->add_option("--tag", eval_tag, "Run tag");

    auto* norm = app.add_subcommand("normalize", "Clean and split raw text into sentences");
    std::vector<std::string> norm_in;
    std::string norm_out = "-", norm_punct;
    bool line_mode = false;
    norm->add_option("--in", norm_in, "Input text files")->required()->check(CLI::ExistingFile);
    norm->add_option("--out", norm_out, "Output file, one sentence per line");
    norm->add_option("--punctuation", norm_punct, "Punctuation inventory file")->check(CLI::ExistingFile);
    norm->add_flag("--line-mode", line_mode, "Each input line is one sentence");

    auto* serve = app.add_subcommand("serve", "Run the annotation server");
    std::string serve_corpus, serve_state, serve_host = "127.0.0.1", serve_ui;
    int serve_port = 8080;
    std::size_t quorum = 3;
    serve->add_option("--corpus", serve_corpus, "Corpus JSONL")->required()->check(CLI::ExistingFile);
    serve->add_option("--state", serve_state, "Directory for the event log and snapshot")->required();
    serve->add_option("--host", serve_host);
    serve->add_option("--port", serve_port);
    serve->add_option("--quorum", quorum);
    serve->add_option("--ui", serve_ui, "Static client directory served under /ui/");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            auto cfg = GenerationConfig::load(config);
            if (seed) cfg.master_seed = *seed;
            if (gold_override) cfg.gold_path = *gold_override;
            if (threads) cfg.threads = *threads;
            auto corpus = build_corpus(cfg);
            fs::create_directories(out_dir);
            write_jsonl(corpus.records, (fs::path(out_dir) / "corpus.jsonl").string());
            write_text((fs::path(out_dir) / "report.json").string(),
                       report_to_json(corpus.report).dump(2) + "\n");
            for (auto& w : corpus.report.warnings) std::cerr << "warning: " << w << "\n";
            std::cerr << corpus.records.size() << " records written to " << out_dir << "\n";
        } else if (*stats) {
            auto report = stats_survey ? corpus_stats(load_survey_counts(stats_in))
                                       : corpus_stats(read_jsonl(stats_in));
            std::cout << (stats_json ? report.to_json().dump(2) + "\n" : report.to_table());
        } else if (*exp) {
            auto records = read_jsonl(exp_in);
            if (exp_format == "jsonl")
                write_text(exp_out, to_jsonl(records));
            else
                write_text(exp_out, alpaca_json(records, exp_format == "alpaca-detect"
                                                             ? AlpacaTask::Detection
                                                             : AlpacaTask::Correction)
                                            .dump(2) +
                                        "\n");
        } else if (*eval) {
            auto gold = gold_labels(read_jsonl(eval_gold));
            auto level = *level_from_id(eval_level);
            if (!eval_agg.empty()) {
                std::vector<fs::path> files;
                for (auto& e : fs::directory_iterator(eval_agg))
                    if (e.is_regular_file()) files.push_back(e.path());
                std::sort(files.begin(), files.end());
                std::vector<EvalReport> reports;
                nlohmann::ordered_json runs = nlohmann::ordered_json::array();
                for (auto& f : files) {
                    reports.push_back(score(gold, load_predictions(f.string(), level, f.stem().string())));
                    runs.push_back(report_json(reports.back()));
                }
                nlohmann::ordered_json out = {{"level", eval_level},
                                              {"aggregate", aggregate_json(aggregate(reports))},
                                              {"runs", runs}};
                std::cout << out.dump(2) << "\n";
            } else {
                if (eval_pred.empty()) throw std::runtime_error("eval needs --pred or --aggregate");
                std::cout << report_json(score(gold, load_predictions(eval_pred, level, eval_tag))).dump(2)
                          << "\n";
            }
        } else if (*norm) {
            auto inv = norm_punct.empty() ? default_punctuation() : PunctuationInventory::load(norm_punct);
            std::string out;
            for (auto& path : norm_in) {
                auto text = read_text(path);
                if (line_mode) {
                    std::istringstream in(text);
                    std::string line;
                    while (std::getline(in, line)) {
                        auto s = normalize_sentence(line, path, inv);
                        if (!s.tokens.empty()) out += s.text + "\n";
                    }
                } else {
                    for (auto& s : split_sentences({text, path}, inv)) out += s.text + "\n";
                }
            }
            write_text(norm_out, out);
        } else if (*serve) {
            AnnotationStore store(read_jsonl(serve_corpus), serve_state, quorum);
            AnnotationServer server(store, serve_ui);
            g_server = &server;
            std::signal(SIGINT, [](int) {
                if (g_server) g_server->stop();
            });
            std::cerr << "listening on http://" << serve_host << ":" << serve_port << "\n";
            if (!server.listen(serve_host, serve_port)) {
                std::cerr << "error: cannot bind " << serve_host << ":" << serve_port << "\n";
                return 1;
            }
            store.write_snapshot();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
