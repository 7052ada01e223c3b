#include "forge/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace forge {

MetricsError::MetricsError(Kind k, std::string i, std::string l)
    : std::runtime_error(std::string(id_of(k)) + "(" + i + (l.empty() ? "" : ", " + l) + ")"),
      kind(k),
      id(std::move(i)),
      label(std::move(l)) {}

std::string_view id_of(MetricsError::Kind k) {
    switch (k) {
        case MetricsError::Kind::UnknownId: return "UnknownId";
        case MetricsError::Kind::InvalidLabel: return "InvalidLabel";
        case MetricsError::Kind::MissingPrediction: return "MissingPrediction";
        case MetricsError::Kind::EmptyInput: return "EmptyInput";
        case MetricsError::Kind::LevelMismatch: return "LevelMismatch";
    }
    return "?";
}

EvalReport score(const GoldLabels& gold, const PredictionSet& preds) {
    using K = MetricsError::Kind;
    for (auto& [id, label] : preds.entries) {
        if (!gold.count(id)) throw MetricsError(K::UnknownId, id);
        if (!is_valid_label(label, preds.level)) throw MetricsError(K::InvalidLabel, id, label);
    }
    EvalReport r;
    r.level = preds.level;
    r.run_tag = preds.run_tag;
    for (auto& [id, cls] : gold) {
        auto it = preds.entries.find(id);
        if (it == preds.entries.end()) throw MetricsError(K::MissingPrediction, id);
        ++r.confusion[project(cls, preds.level)][it->second];
        ++r.n_items;
    }
    for (auto& [g, row] : r.confusion)
        for (auto& [p, n] : row) {
            r.per_class[g].support += n;
            r.per_class[p].predicted += n;
        }
    long double sum = 0;
    for (auto& [label, cs] : r.per_class) {
        std::size_t tp = 0;
        if (auto row = r.confusion.find(label); row != r.confusion.end())
            if (auto cell = row->second.find(label); cell != row->second.end()) tp = cell->second;
        long double t = static_cast<long double>(tp);
        cs.precision = cs.predicted ? t / cs.predicted : 0.0L;
        cs.recall = cs.support ? t / cs.support : 0.0L;
        // 2PR/(P+R) reduces to 2TP/(support+predicted), which avoids a
        // division of already rounded ratios.
        std::size_t denom = cs.support + cs.predicted;
        cs.f1 = denom ? 2.0L * t / static_cast<long double>(denom) : 0.0L;
        sum += cs.f1;
    }
    r.macro_f1 = r.per_class.empty() ? 0.0L : sum / r.per_class.size();
    return r;
}

RunAggregate aggregate(const std::vector<EvalReport>& reports) {
    if (reports.empty()) throw MetricsError(MetricsError::Kind::EmptyInput, "reports");
    for (auto& r : reports)
        if (r.level != reports.front().level)
            throw MetricsError(MetricsError::Kind::LevelMismatch, r.run_tag);
    RunAggregate a;
    a.n_runs = reports.size();
    for (auto& r : reports) a.mean += r.macro_f1;
    a.mean /= a.n_runs;
    long double ss = 0;
    for (auto& r : reports) ss += (r.macro_f1 - a.mean) * (r.macro_f1 - a.mean);
    a.std = std::sqrt(ss / a.n_runs);
    return a;
}

HumanReport human_report(const std::map<std::string, std::map<std::string, FinerClass>>& judgments,
                         const GoldLabels& gold) {
    HumanReport h;
    for (auto level : {TaskLevel::Binary, TaskLevel::Broad, TaskLevel::Finer}) {
        LevelSummary s;
        for (auto& [annotator, labels] : judgments) {
            GoldLabels sub;
            PredictionSet p;
            p.level = level;
            p.run_tag = annotator;
            for (auto& [id, cls] : labels) {
                auto g = gold.find(id);
                if (g == gold.end()) throw MetricsError(MetricsError::Kind::UnknownId, id);
                sub[id] = g->second;
                p.entries[id] = project(cls, level);
            }
            auto r = score(sub, p);
            s.mean += r.macro_f1;
            s.max = std::max(s.max, r.macro_f1);
            h.annotators[annotator][level] = std::move(r);
        }
        if (!judgments.empty()) s.mean /= judgments.size();
        h.summary[level] = s;
    }
    return h;
}

std::string format_score(long double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2Lf", 100.0L * x);
    return buf;
}

nlohmann::ordered_json report_json(const EvalReport& r) {
    nlohmann::ordered_json j;
    j["level"] = id_of(r.level);
    j["macro_f1"] = static_cast<double>(r.macro_f1);
    auto& pc = j["per_class"] = nlohmann::ordered_json::object();
    for (auto& [label, cs] : r.per_class)
        pc[label] = {{"p", static_cast<double>(cs.precision)},
                     {"r", static_cast<double>(cs.recall)},
                     {"f1", static_cast<double>(cs.f1)},
                     {"support", cs.support}};
    auto& cm = j["confusion"] = nlohmann::ordered_json::object();
    for (auto& [g, row] : r.confusion)
        for (auto& [p, n] : row) cm[g][p] = n;
    if (!r.run_tag.empty()) j["run_tag"] = r.run_tag;
    return j;
}

nlohmann::ordered_json aggregate_json(const RunAggregate& a) {
    return {{"mean", static_cast<double>(a.mean)},
            {"std", static_cast<double>(a.std)},
            {"n_runs", a.n_runs}};
}

nlohmann::ordered_json human_report_json(const HumanReport& h) {
    nlohmann::ordered_json j;
    auto& s = j["summary"] = nlohmann::ordered_json::object();
    for (auto& [level, sum] : h.summary)
        s[std::string(id_of(level))] = {{"mean", static_cast<double>(sum.mean)},
                                        {"max", static_cast<double>(sum.max)}};
    auto& a = j["annotators"] = nlohmann::ordered_json::object();
    for (auto& [who, levels] : h.annotators)
        for (auto& [level, r] : levels) a[who][std::string(id_of(level))] = report_json(r);
    return j;
}

PredictionSet load_predictions(const std::string& path, TaskLevel level, std::string run_tag) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    PredictionSet p;
    p.level = level;
    p.run_tag = std::move(run_tag);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw MetricsError(MetricsError::Kind::InvalidLabel, line, "");
        p.entries[line.substr(0, tab)] = line.substr(tab + 1);
    }
    return p;
}

}  // namespace forge
