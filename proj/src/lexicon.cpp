#include "forge/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "forge/normalize.hpp"

namespace forge {

namespace {

struct Row {
    std::size_t line;
    std::vector<std::string> fields;
};

std::vector<Row> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LexiconError(LexiconError::Kind::Io, path, 0, "cannot open");
    std::vector<Row> rows;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        Row r{n, {}};
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '\t')) r.fields.push_back(canonical_bangla(f));
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw LexiconError(LexiconError::Kind::EmptyResource, path, 0, "");
    return rows;
}

bool bad_word(const std::string& w) {
    return w.empty() || w.find(' ') != std::string::npos;
}

void load_pairs(const std::string& path, PairMap& into) {
    for (auto& r : read_rows(path)) {
        if (r.fields.size() != 2 || bad_word(r.fields[0]) || bad_word(r.fields[1]) ||
            r.fields[0] == r.fields[1])
            throw LexiconError(LexiconError::Kind::MalformedRow, path, r.line, "");
        if (!into.insert(r.fields[0], r.fields[1]))
            throw LexiconError(LexiconError::Kind::DuplicateKey, path, r.line, r.fields[0]);
    }
}

std::optional<Tense> parse_tense(const std::string& s) {
    if (s == "past") return Tense::Past;
    if (s == "present") return Tense::Present;
    if (s == "future") return Tense::Future;
    return std::nullopt;
}

std::optional<Person> parse_person(const std::string& s) {
    if (s == "1" || s == "1st") return Person::First;
    if (s == "2" || s == "2nd") return Person::Second;
    if (s == "3" || s == "3rd") return Person::Third;
    return std::nullopt;
}

std::optional<Aspect> parse_aspect(const std::string& s) {
    if (s == "simple") return Aspect::Simple;
    if (s == "continuous") return Aspect::Continuous;
    if (s == "perfect") return Aspect::Perfect;
    if (s == "habitual") return Aspect::Habitual;
    return std::nullopt;
}

const std::vector<std::string> kNoHomonyms;

}  // namespace

std::string_view id_of(Tense t) {
    switch (t) {
        case Tense::Past: return "past";
        case Tense::Present: return "present";
        case Tense::Future: return "future";
    }
    return {};
}

std::string_view id_of(Person p) {
    switch (p) {
        case Person::First: return "1";
        case Person::Second: return "2";
        case Person::Third: return "3";
    }
    return {};
}

std::string_view id_of(Aspect a) {
    switch (a) {
        case Aspect::Simple: return "simple";
        case Aspect::Continuous: return "continuous";
        case Aspect::Perfect: return "perfect";
        case Aspect::Habitual: return "habitual";
    }
    return {};
}

std::string_view id_of(LexiconError::Kind k) {
    switch (k) {
        case LexiconError::Kind::MalformedRow: return "MalformedRow";
        case LexiconError::Kind::DuplicateKey: return "DuplicateKey";
        case LexiconError::Kind::EmptyResource: return "EmptyResource";
        case LexiconError::Kind::UnknownWord: return "UnknownWord";
        case LexiconError::Kind::Io: return "IoError";
    }
    return {};
}

LexiconError::LexiconError(Kind k, std::string f, std::size_t l, std::string key_)
    : std::runtime_error(std::string(id_of(k)) + "(" + f + (l ? ":" + std::to_string(l) : "") +
                         (key_.empty() ? "" : ", " + key_) + ")"),
      kind(k),
      file(std::move(f)),
      line(l),
      key(std::move(key_)) {}

bool PairMap::insert(const std::string& left, const std::string& right) {
    if (left == right || left_.count(left) || right_.count(right) || right_.count(left) || left_.count(right))
        return false;
    left_.emplace(left, right);
    right_.emplace(right, left);
    order_.emplace_back(left, right);
    return true;
}

const std::string* PairMap::partner(std::string_view w) const {
    std::string k(w);
    if (auto it = left_.find(k); it != left_.end()) return &it->second;
    if (auto it = right_.find(k); it != right_.end()) return &it->second;
    return nullptr;
}

ResourcePaths ResourcePaths::in_directory(const std::string& dir) {
    auto p = [&](const char* name) { return dir + "/" + name; };
    return {p("wordlist.txt"),        p("homonyms.tsv"), p("verbs.tsv"),
            p("pronoun_numbers.tsv"), p("genders.tsv"),  p("noun_adjectives.tsv"),
            p("registers.tsv")};
}

LexiconBundle LexiconBundle::load(const ResourcePaths& paths) {
    LexiconBundle b;

    for (auto& r : read_rows(paths.wordlist)) {
        if (r.fields.size() != 1 || bad_word(r.fields[0]))
            throw LexiconError(LexiconError::Kind::MalformedRow, paths.wordlist, r.line, "");
        b.words_.insert(r.fields[0]);
    }
    b.sorted_words_.assign(b.words_.begin(), b.words_.end());
    std::sort(b.sorted_words_.begin(), b.sorted_words_.end());

    for (auto& r : read_rows(paths.homonyms)) {
        if (r.fields.size() < 2)
            throw LexiconError(LexiconError::Kind::MalformedRow, paths.homonyms, r.line, "");
        for (auto& w : r.fields) {
            if (bad_word(w))
                throw LexiconError(LexiconError::Kind::MalformedRow, paths.homonyms, r.line, "");
            if (!b.words_.count(w))
                throw LexiconError(LexiconError::Kind::UnknownWord, paths.homonyms, r.line, w);
        }
        for (std::size_t i = 0; i < r.fields.size(); ++i)
            for (std::size_t j = i + 1; j < r.fields.size(); ++j) {
                auto a = r.fields[i], c = r.fields[j];
                if (a == c)
                    throw LexiconError(LexiconError::Kind::MalformedRow, paths.homonyms, r.line, a);
                if (c < a) std::swap(a, c);
                if (!b.homonym_pairs_.emplace(a, c).second)
                    throw LexiconError(LexiconError::Kind::DuplicateKey, paths.homonyms, r.line,
                                       a + "/" + c);
            }
    }
    for (auto& [a, c] : b.homonym_pairs_) {
        b.homonym_index_[a].push_back(c);
        b.homonym_index_[c].push_back(a);
    }
    for (auto& [w, v] : b.homonym_index_) std::sort(v.begin(), v.end());

    std::set<std::string> lemmas;
    for (auto& r : read_rows(paths.verbs)) {
        if (r.fields.size() != 4 && r.fields.size() != 5)
            throw LexiconError(LexiconError::Kind::MalformedRow, paths.verbs, r.line, "");
        auto t = parse_tense(r.fields[1]);
        auto p = parse_person(r.fields[2]);
        auto a = r.fields.size() == 5 ? parse_aspect(r.fields[4]) : std::optional(Aspect::Simple);
        if (!t || !p || !a || r.fields[0].empty() || bad_word(r.fields[3]))
            throw LexiconError(LexiconError::Kind::MalformedRow, paths.verbs, r.line, "");
        VerbCell cell{r.fields[0], *t, *p, *a};
        if (!b.paradigm_.emplace(cell, r.fields[3]).second)
            throw LexiconError(LexiconError::Kind::DuplicateKey, paths.verbs, r.line,
                               r.fields[0] + "/" + r.fields[1] + "/" + r.fields[2] + "/" +
                                   std::string(id_of(*a)));
        b.verb_index_[r.fields[3]].push_back(cell);
        lemmas.insert(r.fields[0]);
    }
    for (auto& [w, v] : b.verb_index_) std::sort(v.begin(), v.end());

    load_pairs(paths.pronoun_numbers, b.pronoun_numbers_);
    load_pairs(paths.genders, b.genders_);
    load_pairs(paths.noun_adjectives, b.noun_adjectives_);

    for (auto& r : read_rows(paths.registers)) {
        if (r.fields.size() != 3 || bad_word(r.fields[1]) || bad_word(r.fields[2]) ||
            r.fields[1] == r.fields[2])
            throw LexiconError(LexiconError::Kind::MalformedRow, paths.registers, r.line, "");
        PairMap* target = nullptr;
        if (r.fields[0] == "verb") target = &b.register_verbs_;
        if (r.fields[0] == "pronoun") target = &b.register_pronouns_;
        if (!target) throw LexiconError(LexiconError::Kind::MalformedRow, paths.registers, r.line, "");
        if (!target->insert(r.fields[1], r.fields[2]))
            throw LexiconError(LexiconError::Kind::DuplicateKey, paths.registers, r.line, r.fields[1]);
    }
    // A form may belong to only one register across both kinds.
    for (auto* m : {&b.register_verbs_, &b.register_pronouns_})
        for (auto& [sadhu, calita] : m->pairs()) {
            const PairMap* other = m == &b.register_verbs_ ? &b.register_pronouns_ : &b.register_verbs_;
            if (other->in_right(sadhu) || other->in_left(calita))
                throw LexiconError(LexiconError::Kind::DuplicateKey, paths.registers, 0,
                                   other->in_right(sadhu) ? sadhu : calita);
        }

    for (auto& [s, p] : b.pronoun_numbers_.pairs()) {
        b.pronoun_frozen_.insert(s);
        b.pronoun_frozen_.insert(p);
    }
    for (auto& [s, c] : b.register_pronouns_.pairs()) {
        b.pronoun_frozen_.insert(s);
        b.pronoun_frozen_.insert(c);
    }

    b.counts_.words = b.words_.size();
    b.counts_.homonyms = b.homonym_pairs_.size();
    b.counts_.verb_forms = b.paradigm_.size();
    b.counts_.verb_lemmas = lemmas.size();
    b.counts_.pronoun_pairs = b.pronoun_numbers_.size();
    b.counts_.gender_pairs = b.genders_.size();
    b.counts_.noun_adj_pairs = b.noun_adjectives_.size();
    b.counts_.register_verbs = b.register_verbs_.size();
    b.counts_.register_pronouns = b.register_pronouns_.size();
    return b;
}

bool LexiconBundle::is_dictionary_word(std::string_view w) const {
    return !w.empty() && words_.count(std::string(w)) > 0;
}

std::vector<VerbCell> LexiconBundle::find_verb(std::string_view surface) const {
    auto it = verb_index_.find(std::string(surface));
    return it == verb_index_.end() ? std::vector<VerbCell>{} : it->second;
}

const std::string* LexiconBundle::verb_form(const VerbCell& cell) const {
    auto it = paradigm_.find(cell);
    return it == paradigm_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& LexiconBundle::homonyms_of(std::string_view w) const {
    auto it = homonym_index_.find(std::string(w));
    return it == homonym_index_.end() ? kNoHomonyms : it->second;
}

std::optional<Register> LexiconBundle::register_of(std::string_view w) const {
    if (register_verbs_.in_left(w) || register_pronouns_.in_left(w)) return Register::Sadhu;
    if (register_verbs_.in_right(w) || register_pronouns_.in_right(w)) return Register::Calita;
    return std::nullopt;
}

const std::string* LexiconBundle::register_partner(std::string_view w) const {
    if (auto* p = register_verbs_.partner(w)) return p;
    return register_pronouns_.partner(w);
}

std::set<std::string> LexiconBundle::related_forms(std::string_view w) const {
    std::set<std::string> out;
    for (auto& cell : find_verb(w))
        for (auto& [c, form] : paradigm_)
            if (c.lemma == cell.lemma) out.insert(form);
    for (auto* m : {&pronoun_numbers_, &genders_, &noun_adjectives_, &register_verbs_,
                    &register_pronouns_})
        if (auto* p = m->partner(w)) out.insert(*p);
    if (auto* p = register_partner(w))
        for (auto& cell : find_verb(*p))
            for (auto& [c, form] : paradigm_)
                if (c.lemma == cell.lemma) out.insert(form);
    return out;
}

}  // namespace forge
