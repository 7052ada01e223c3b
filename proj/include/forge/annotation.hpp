#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/metrics.hpp"
#include "forge/pipeline.hpp"
#include "json.hpp"

namespace forge {

class AnnotationError : public std::runtime_error {
public:
    enum class Kind {
        InsufficientRecords,
        PoolExhausted,
        DuplicateAnnotator,
        NotAssigned,
        AlreadyJudged,
        InvalidLabel,
        DuplicateVote,
        UnknownTask,
        UnknownPool,
        BadRequest,
    };
    AnnotationError(Kind k, std::string detail);
    Kind kind;
    std::string detail;
};
std::string_view id_of(AnnotationError::Kind k);

struct Pool {
    std::string pool_id;
    std::vector<std::string> record_ids;  // sampling order
    std::size_t n_correct = 0;
    std::size_t n_wrong = 0;
    std::size_t next_free = 0;  // ids before this index are assigned
};

struct Assignment {
    std::string pool_id;
    std::string annotator;
    std::vector<std::string> record_ids;
};

struct Judgment {
    std::string annotator;
    std::string record_id;
    FinerClass label = FinerClass::Correct;
    std::string timestamp;
};

enum class Verdict { Pending, Approved, Rejected };
std::string_view id_of(Verdict v);

struct Vote {
    std::string voter;
    bool accept = false;
    std::optional<FinerClass> corrected;
};

struct ValidationTask {
    std::string record_id;
    std::vector<Vote> votes;
    Verdict verdict = Verdict::Pending;
};

// Quorum rule: undecided below `quorum` votes, then approved iff a strict
// majority of the quorum accepted.
Verdict majority_verdict(std::size_t accepts, std::size_t votes, std::size_t quorum);

struct Progress {
    std::size_t done = 0;
    std::size_t total = 0;
};

// In-memory state plus an optional on-disk log. With a directory, every
// mutation is appended to events.jsonl before it is applied, and
// snapshot.json holds the state as of its `last_seq`.
class AnnotationStore {
public:
    AnnotationStore(std::vector<CorpusRecord> corpus, std::string dir = {},
                    std::size_t quorum = 3);

    const Pool& create_pool(std::size_t n_correct, std::size_t n_wrong, std::uint64_t seed);
    Assignment assign(const std::string& pool_id, const std::string& annotator, std::size_t k);
    Progress record_judgment(const std::string& annotator, const std::string& record_id,
                             const std::string& label);
    ValidationTask vote(const std::string& task, const std::string& voter, bool accept,
                        std::optional<std::string> corrected = std::nullopt);

    std::vector<Assignment> assignments_of(const std::string& annotator) const;
    std::optional<std::string> next_pending(const std::string& annotator) const;
    Progress progress(const std::string& annotator) const;
    std::vector<std::string> validation_queue(const std::string& voter) const;
    std::optional<ValidationTask> task(const std::string& id) const;
    std::optional<Pool> pool(const std::string& id) const;
    const CorpusRecord* record(const std::string& id) const;
    std::size_t judgment_count() const;

    std::map<std::string, std::map<std::string, FinerClass>> judgments() const;
    HumanReport report() const;

    // Approved records lose needs_validation; rejected ones are dropped.
    std::vector<CorpusRecord> export_validated() const;

    nlohmann::ordered_json snapshot_json() const;
    void write_snapshot() const;
    std::size_t last_seq() const;

private:
    void append(nlohmann::ordered_json event);
    void apply(const nlohmann::json& event);
    void restore(const nlohmann::json& snapshot);
    std::string now() const;

    std::map<std::string, CorpusRecord> corpus_;
    std::string dir_;
    std::size_t quorum_;

    std::map<std::string, Pool> pools_;
    std::map<std::string, Assignment> assignments_;  // key pool_id + '\n' + annotator
    std::map<std::pair<std::string, std::string>, Judgment> judgments_;
    std::map<std::string, ValidationTask> tasks_;
    std::size_t seq_ = 0;

    mutable std::shared_mutex mu_;
};

}  // namespace forge
