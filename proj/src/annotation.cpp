#include "forge/annotation.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "forge/random.hpp"

namespace forge {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

AnnotationError::AnnotationError(Kind k, std::string d)
    : std::runtime_error(std::string(id_of(k)) + (d.empty() ? "" : ": " + d)),
      kind(k),
      detail(std::move(d)) {}

std::string_view id_of(AnnotationError::Kind k) {
    using K = AnnotationError::Kind;
    switch (k) {
        case K::InsufficientRecords: return "InsufficientRecords";
        case K::PoolExhausted: return "PoolExhausted";
        case K::DuplicateAnnotator: return "DuplicateAnnotator";
        case K::NotAssigned: return "NotAssigned";
        case K::AlreadyJudged: return "AlreadyJudged";
        case K::InvalidLabel: return "InvalidLabel";
        case K::DuplicateVote: return "DuplicateVote";
        case K::UnknownTask: return "UnknownTask";
        case K::UnknownPool: return "UnknownPool";
        case K::BadRequest: return "BadRequest";
    }
    return "?";
}

std::string_view id_of(Verdict v) {
    switch (v) {
        case Verdict::Pending: return "pending";
        case Verdict::Approved: return "approved";
        case Verdict::Rejected: return "rejected";
    }
    return "?";
}

Verdict majority_verdict(std::size_t accepts, std::size_t votes, std::size_t quorum) {
    if (votes < quorum) return Verdict::Pending;
    return 2 * accepts > quorum ? Verdict::Approved : Verdict::Rejected;
}

namespace {

using K = AnnotationError::Kind;

std::string assignment_key(const std::string& pool, const std::string& annotator) {
    return pool + '\n' + annotator;
}

// Only the first `quorum` votes count, so a verdict never flips once reached.
Verdict verdict_of(const ValidationTask& t, std::size_t quorum) {
    std::size_t n = std::min(t.votes.size(), quorum), accepts = 0;
    for (std::size_t i = 0; i < n; ++i) accepts += t.votes[i].accept;
    return majority_verdict(accepts, n, quorum);
}

}  // namespace

AnnotationStore::AnnotationStore(std::vector<CorpusRecord> corpus, std::string dir,
                                 std::size_t quorum)
    : dir_(std::move(dir)), quorum_(quorum) {
    for (auto& r : corpus) {
        if (r.needs_validation) tasks_[r.id].record_id = r.id;
        corpus_.emplace(r.id, std::move(r));
    }
    if (dir_.empty()) return;
    fs::create_directories(dir_);
    auto snap = fs::path(dir_) / "snapshot.json";
    if (fs::exists(snap)) {
        std::ifstream in(snap);
        restore(json::parse(in));
    }
    std::ifstream log(fs::path(dir_) / "events.jsonl");
    std::string line;
    while (std::getline(log, line)) {
        if (line.empty()) continue;
        auto e = json::parse(line);
        if (e.at("seq").get<std::size_t>() > seq_) apply(e);
    }
}

std::string AnnotationStore::now() const {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void AnnotationStore::append(ojson event) {
    ojson e;
    e["seq"] = seq_ + 1;
    for (auto& [k, v] : event.items()) e[k] = v;
    if (!dir_.empty()) {
        std::ofstream out(fs::path(dir_) / "events.jsonl", std::ios::app | std::ios::binary);
        out << e.dump() << '\n';
        out.flush();
        if (!out) throw std::runtime_error("cannot append to the event log in " + dir_);
    }
    apply(json::parse(e.dump()));
}

void AnnotationStore::apply(const json& e) {
    seq_ = e.at("seq").get<std::size_t>();
    auto type = e.at("type").get<std::string>();
    if (type == "pool") {
        Pool p;
        p.pool_id = e.at("pool_id").get<std::string>();
        p.record_ids = e.at("record_ids").get<std::vector<std::string>>();
        p.n_correct = e.at("n_correct").get<std::size_t>();
        p.n_wrong = e.at("n_wrong").get<std::size_t>();
        pools_[p.pool_id] = std::move(p);
    } else if (type == "assign") {
        Assignment a;
        a.pool_id = e.at("pool_id").get<std::string>();
        a.annotator = e.at("annotator").get<std::string>();
        a.record_ids = e.at("record_ids").get<std::vector<std::string>>();
        pools_.at(a.pool_id).next_free += a.record_ids.size();
        assignments_[assignment_key(a.pool_id, a.annotator)] = std::move(a);
    } else if (type == "judgment") {
        Judgment j;
        j.annotator = e.at("annotator").get<std::string>();
        j.record_id = e.at("record_id").get<std::string>();
        j.label = *finer_from_id(e.at("label").get<std::string>());
        j.timestamp = e.at("timestamp").get<std::string>();
        judgments_[{j.annotator, j.record_id}] = std::move(j);
    } else if (type == "vote") {
        auto& t = tasks_.at(e.at("task").get<std::string>());
        Vote v;
        v.voter = e.at("voter").get<std::string>();
        v.accept = e.at("accept").get<bool>();
        if (e.contains("corrected")) v.corrected = finer_from_id(e.at("corrected").get<std::string>());
        t.votes.push_back(std::move(v));
        t.verdict = verdict_of(t, quorum_);
    } else {
        throw std::runtime_error("unknown event type " + type);
    }
}

const Pool& AnnotationStore::create_pool(std::size_t n_correct, std::size_t n_wrong,
                                         std::uint64_t seed) {
    std::unique_lock lock(mu_);
    std::vector<std::string> correct, wrong;
    for (auto& [id, r] : corpus_) (r.finer == FinerClass::Correct ? correct : wrong).push_back(id);
    if (correct.size() < n_correct)
        throw AnnotationError(K::InsufficientRecords, "correct: have " + std::to_string(correct.size()) +
                                                          ", want " + std::to_string(n_correct));
    if (wrong.size() < n_wrong)
        throw AnnotationError(K::InsufficientRecords, "wrong: have " + std::to_string(wrong.size()) +
                                                          ", want " + std::to_string(n_wrong));
    RandomSource rc(derive_seed({seed, 0})), rw(derive_seed({seed, 1})), mix(derive_seed({seed, 2}));
    rc.shuffle(correct);
    rw.shuffle(wrong);
    std::vector<std::string> ids(correct.begin(), correct.begin() + n_correct);
    ids.insert(ids.end(), wrong.begin(), wrong.begin() + n_wrong);
    mix.shuffle(ids);
    std::string pool_id = "pool-" + std::to_string(pools_.size() + 1);
    append({{"type", "pool"},
            {"pool_id", pool_id},
            {"n_correct", n_correct},
            {"n_wrong", n_wrong},
            {"record_ids", ids}});
    return pools_.at(pool_id);
}

Assignment AnnotationStore::assign(const std::string& pool_id, const std::string& annotator,
                                   std::size_t k) {
    std::unique_lock lock(mu_);
    auto it = pools_.find(pool_id);
    if (it == pools_.end()) throw AnnotationError(K::UnknownPool, pool_id);
    if (assignments_.count(assignment_key(pool_id, annotator)))
        throw AnnotationError(K::DuplicateAnnotator, annotator);
    const Pool& p = it->second;
    std::size_t remaining = p.record_ids.size() - p.next_free;
    if (remaining == 0 || k == 0) throw AnnotationError(K::PoolExhausted, std::to_string(remaining));
    std::size_t n = std::min(k, remaining);
    std::vector<std::string> ids(p.record_ids.begin() + p.next_free,
                                 p.record_ids.begin() + p.next_free + n);
    append({{"type", "assign"}, {"pool_id", pool_id}, {"annotator", annotator}, {"record_ids", ids}});
    return assignments_.at(assignment_key(pool_id, annotator));
}

Progress AnnotationStore::record_judgment(const std::string& annotator, const std::string& record_id,
                                          const std::string& label) {
    std::unique_lock lock(mu_);
    bool assigned = false;
    for (auto& [key, a] : assignments_)
        if (a.annotator == annotator &&
            std::find(a.record_ids.begin(), a.record_ids.end(), record_id) != a.record_ids.end())
            assigned = true;
    if (!assigned) throw AnnotationError(K::NotAssigned, record_id);
    auto cls = finer_from_id(label);
    if (!cls) throw AnnotationError(K::InvalidLabel, label);
    auto prior = judgments_.find({annotator, record_id});
    if (prior != judgments_.end()) {
        if (prior->second.label != *cls) throw AnnotationError(K::AlreadyJudged, record_id);
    } else {
        append({{"type", "judgment"},
                {"annotator", annotator},
                {"record_id", record_id},
                {"label", id_of(*cls)},
                {"timestamp", now()}});
    }
    lock.unlock();
    return progress(annotator);
}

ValidationTask AnnotationStore::vote(const std::string& task, const std::string& voter, bool accept,
                                     std::optional<std::string> corrected) {
    std::unique_lock lock(mu_);
    auto it = tasks_.find(task);
    if (it == tasks_.end()) throw AnnotationError(K::UnknownTask, task);
    for (auto& v : it->second.votes)
        if (v.voter == voter) throw AnnotationError(K::DuplicateVote, voter);
    ojson e = {{"type", "vote"}, {"task", task}, {"voter", voter}, {"accept", accept}};
    if (corrected) {
        auto c = finer_from_id(*corrected);
        if (!c) throw AnnotationError(K::InvalidLabel, *corrected);
        e["corrected"] = id_of(*c);
    }
    append(std::move(e));
    return it->second;
}

std::vector<Assignment> AnnotationStore::assignments_of(const std::string& annotator) const {
    std::shared_lock lock(mu_);
    std::vector<Assignment> out;
    for (auto& [key, a] : assignments_)
        if (a.annotator == annotator) out.push_back(a);
    return out;
}

std::optional<std::string> AnnotationStore::next_pending(const std::string& annotator) const {
    std::shared_lock lock(mu_);
    for (auto& [key, a] : assignments_)
        if (a.annotator == annotator)
            for (auto& id : a.record_ids)
                if (!judgments_.count({annotator, id})) return id;
    return std::nullopt;
}

Progress AnnotationStore::progress(const std::string& annotator) const {
    std::shared_lock lock(mu_);
    Progress p;
    for (auto& [key, a] : assignments_)
        if (a.annotator == annotator)
            for (auto& id : a.record_ids) {
                ++p.total;
                p.done += judgments_.count({annotator, id});
            }
    return p;
}

std::vector<std::string> AnnotationStore::validation_queue(const std::string& voter) const {
    std::shared_lock lock(mu_);
    std::vector<std::string> out;
    for (auto& [id, t] : tasks_) {
        if (t.verdict != Verdict::Pending) continue;
        bool voted = false;
        for (auto& v : t.votes) voted |= v.voter == voter;
        if (!voted) out.push_back(id);
    }
    return out;
}

std::optional<ValidationTask> AnnotationStore::task(const std::string& id) const {
    std::shared_lock lock(mu_);
    auto it = tasks_.find(id);
    if (it == tasks_.end()) return std::nullopt;
    return it->second;
}

std::optional<Pool> AnnotationStore::pool(const std::string& id) const {
    std::shared_lock lock(mu_);
    auto it = pools_.find(id);
    if (it == pools_.end()) return std::nullopt;
    return it->second;
}

const CorpusRecord* AnnotationStore::record(const std::string& id) const {
    auto it = corpus_.find(id);
    return it == corpus_.end() ? nullptr : &it->second;
}

std::size_t AnnotationStore::judgment_count() const {
    std::shared_lock lock(mu_);
    return judgments_.size();
}

std::map<std::string, std::map<std::string, FinerClass>> AnnotationStore::judgments() const {
    std::shared_lock lock(mu_);
    std::map<std::string, std::map<std::string, FinerClass>> out;
    for (auto& [key, j] : judgments_) out[j.annotator][j.record_id] = j.label;
    return out;
}

HumanReport AnnotationStore::report() const {
    auto js = judgments();
    GoldLabels gold;
    for (auto& [who, labels] : js)
        for (auto& [id, cls] : labels) gold[id] = corpus_.at(id).finer;
    return human_report(js, gold);
}

std::vector<CorpusRecord> AnnotationStore::export_validated() const {
    std::shared_lock lock(mu_);
    std::vector<CorpusRecord> out;
    for (auto& [id, r] : corpus_) {
        auto t = tasks_.find(id);
        if (t != tasks_.end() && t->second.verdict == Verdict::Rejected) continue;
        out.push_back(r);
        if (t != tasks_.end() && t->second.verdict == Verdict::Approved)
            out.back().needs_validation = false;
    }
    return out;
}

std::size_t AnnotationStore::last_seq() const {
    std::shared_lock lock(mu_);
    return seq_;
}

ojson AnnotationStore::snapshot_json() const {
    std::shared_lock lock(mu_);
    ojson s;
    s["last_seq"] = seq_;
    s["pools"] = ojson::array();
    for (auto& [id, p] : pools_)
        s["pools"].push_back({{"pool_id", p.pool_id},
                              {"n_correct", p.n_correct},
                              {"n_wrong", p.n_wrong},
                              {"record_ids", p.record_ids}});
    s["assignments"] = ojson::array();
    for (auto& [key, a] : assignments_)
        s["assignments"].push_back(
            {{"pool_id", a.pool_id}, {"annotator", a.annotator}, {"record_ids", a.record_ids}});
    s["judgments"] = ojson::array();
    for (auto& [key, j] : judgments_)
        s["judgments"].push_back({{"annotator", j.annotator},
                                  {"record_id", j.record_id},
                                  {"label", id_of(j.label)},
                                  {"timestamp", j.timestamp}});
    s["votes"] = ojson::array();
    for (auto& [id, t] : tasks_)
        for (auto& v : t.votes) {
            ojson e = {{"task", id}, {"voter", v.voter}, {"accept", v.accept}};
            if (v.corrected) e["corrected"] = id_of(*v.corrected);
            s["votes"].push_back(std::move(e));
        }
    return s;
}

void AnnotationStore::write_snapshot() const {
    if (dir_.empty()) return;
    auto s = snapshot_json().dump(2);
    auto tmp = fs::path(dir_) / "snapshot.json.tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << s << '\n';
        if (!out) throw std::runtime_error("cannot write snapshot in " + dir_);
    }
    fs::rename(tmp, fs::path(dir_) / "snapshot.json");
}

void AnnotationStore::restore(const json& s) {
    // Replays the snapshot through apply() so both paths share one code path.
    std::size_t last = s.at("last_seq").get<std::size_t>();
    for (auto& p : s.at("pools")) {
        json e = p;
        e["type"] = "pool";
        e["seq"] = 0;
        apply(e);
    }
    for (auto& a : s.at("assignments")) {
        json e = a;
        e["type"] = "assign";
        e["seq"] = 0;
        apply(e);
    }
    for (auto& j : s.at("judgments")) {
        json e = j;
        e["type"] = "judgment";
        e["seq"] = 0;
        apply(e);
    }
    for (auto& v : s.at("votes")) {
        json e = v;
        e["type"] = "vote";
        e["seq"] = 0;
        apply(e);
    }
    seq_ = last;
}

}  // namespace forge
