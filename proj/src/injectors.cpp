#include "forge/injectors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "forge/edit_distance.hpp"
#include "forge/utf8.hpp"

namespace forge {

namespace {

using Tokens = std::vector<std::string>;

InjectionOutcome make_outcome(const CleanSentence& s, Tokens wrong, FinerClass finer,
                              std::size_t span_start, std::size_t span_end) {
    InjectionOutcome o;
    o.wrong_text = join_tokens(wrong);
    o.correct_text = s.text;
    o.finer = finer;
    o.span_start = span_start;
    o.span_end = span_end;
    o.injector = std::string(id_of(finer));
    return o;
}

InjectionOutcome replace_one(const CleanSentence& s, std::size_t idx, const std::string& with,
                             FinerClass finer) {
    auto toks = surfaces(s);
    auto original = toks[idx];
    toks[idx] = with;
    auto o = make_outcome(s, std::move(toks), finer, idx, idx + 1);
    o.detail["original"] = original;
    o.detail["replacement"] = with;
    o.detail["token"] = std::to_string(idx);
    return o;
}

std::vector<std::size_t> word_indices(const CleanSentence& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.tokens.size(); ++i)
        if (!s.tokens[i].is_punct) out.push_back(i);
    return out;
}

template <class Pred>
std::vector<std::size_t> filter_tokens(const CleanSentence& s, const InjectionPins& pins, Pred pred) {
    std::vector<std::size_t> out;
    for (auto i : word_indices(s))
        if ((!pins.token || *pins.token == i) && pred(s.tokens[i].surface)) out.push_back(i);
    return out;
}

// ---- edit alphabet --------------------------------------------------------

const std::vector<std::vector<std::u32string>>& confusion_groups() {
    static const std::vector<std::vector<std::u32string>> groups = {
        {U"\u09A8", U"\u09A3"},                      // na, nna
        {U"\u09B6", U"\u09B7", U"\u09B8"},            // sha, ssa, sa
        {U"\u09B0", U"\u09A1\u09BC", U"\u09A2\u09BC"},  // ra, rra, rha
        {U"\u09BF", U"\u09C0"},                      // short and long i sign
        {U"\u09C1", U"\u09C2"},                      // short and long u sign
        {U"\u099C", U"\u09AF"},                      // ja, ya
    };
    return groups;
}

std::u32string build_alphabet(bool confusion) {
    std::u32string out;
    for (char32_t c = 0x0995; c <= 0x09B9; ++c)
        if (c != 0x09A9 && c != 0x09B1 && (c < 0x09B3 || c > 0x09B5)) out.push_back(c);
    for (char32_t c : U"ািীুূৃেৈোৌ")
        if (c) out.push_back(c);
    if (!confusion) {
        for (char32_t c = 0x0985; c <= 0x0994; ++c)
            if (c != 0x098D && c != 0x098E && c != 0x0991 && c != 0x0992) out.push_back(c);
        for (char32_t c : U"ঁংঃ়্ৎ")
            if (c) out.push_back(c);
    }
    return out;
}

std::u32string random_edit_char(RandomSource& rng, bool confusion) {
    const auto& a = edit_alphabet(confusion);
    return std::u32string(1, a[rng.index(a.size())]);
}

// Substitution of the unit at pos; returns the replaced unit length.
std::size_t random_substitution(const std::u32string& w, std::size_t pos, RandomSource& rng,
                                bool confusion, std::u32string& out) {
    if (confusion && rng.below(4) != 0) {
        for (auto& group : confusion_groups()) {
            for (auto& member : group) {
                if (w.compare(pos, member.size(), member) != 0) continue;
                // longer members first so ড় is not read as ড
                if (member.size() == 1 && pos + 1 < w.size() && w[pos + 1] == 0x09BC) continue;
                std::vector<std::u32string> others;
                for (auto& m : group)
                    if (m != member) others.push_back(m);
                out = rng.choice(others);
                return member.size();
            }
        }
    }
    out = random_edit_char(rng, confusion);
    return 1;
}

std::u32string random_perturbation(const std::u32string& word, RandomSource& rng, bool confusion,
                                   std::string& ops_desc) {
    std::u32string w = word;
    int n_edits = 1 + static_cast<int>(rng.below(2));
    for (int e = 0; e < n_edits; ++e) {
        std::vector<EditOp::Kind> kinds = {EditOp::Kind::Substitute, EditOp::Kind::Insert};
        if (w.size() > 1) kinds.push_back(EditOp::Kind::Delete);
        auto kind = rng.choice(kinds);
        if (!ops_desc.empty()) ops_desc += ',';
        if (kind == EditOp::Kind::Substitute) {
            std::size_t pos = rng.index(w.size());
            std::u32string rep;
            std::size_t len = random_substitution(w, pos, rng, confusion, rep);
            w.replace(pos, len, rep);
            ops_desc += "sub@" + std::to_string(pos);
        } else if (kind == EditOp::Kind::Insert) {
            std::size_t pos = rng.index(w.size() + 1);
            w.insert(pos, random_edit_char(rng, confusion));
            ops_desc += "ins@" + std::to_string(pos);
        } else {
            std::size_t pos = rng.index(w.size());
            w.erase(pos, 1);
            ops_desc += "del@" + std::to_string(pos);
        }
    }
    return w;
}

bool swap_direction_ok(const PairMap& m, const std::string& w, bool allow_right_to_left) {
    return m.in_left(w) || (allow_right_to_left && m.in_right(w));
}

std::optional<std::size_t> pinned_or_random(const std::vector<std::size_t>& v, RandomSource& rng) {
    if (v.empty()) return std::nullopt;
    return rng.choice(v);
}

std::vector<std::string> non_punct(const std::vector<Token>& toks) {
    std::vector<std::string> out;
    for (auto& t : toks)
        if (!t.is_punct) out.push_back(t.surface);
    return out;
}

}  // namespace

std::string_view id_of(SkipReason r) {
    switch (r) {
        case SkipReason::NoTargetWord: return "no_target_word";
        case SkipReason::WouldBeValid: return "would_be_valid";
        case SkipReason::ExhaustedRetries: return "exhausted_retries";
        case SkipReason::DegenerateSentence: return "degenerate_sentence";
    }
    return {};
}

const std::u32string& edit_alphabet(bool confusion) {
    static const std::u32string with = build_alphabet(true);
    static const std::u32string without = build_alphabet(false);
    return confusion ? with : without;
}

bool well_formed_word(std::u32string_view w) {
    if (w.empty()) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        char32_t c = w[i];
        char32_t prev = i ? w[i - 1] : 0;
        if (c == 0xFFFD || c == U' ') return false;
        if (utf8::is_bangla_combining(c) && i == 0) return false;
        if (utf8::is_dependent_vowel(c) || c == 0x09CD) {
            if (!(utf8::is_bangla_consonant(prev) || prev == 0x09BC)) return false;
        } else if (c == 0x09BC) {
            if (prev != 0x09A1 && prev != 0x09A2 && prev != 0x09AF) return false;
        } else if (c >= 0x0981 && c <= 0x0983) {
            if (prev == 0x09CD || (prev >= 0x0981 && prev <= 0x0983)) return false;
        }
    }
    return true;
}

std::u32string apply_edits(std::u32string w, const std::vector<EditOp>& ops) {
    for (auto& op : ops) {
        switch (op.kind) {
            case EditOp::Kind::Substitute:
                if (op.pos < w.size()) w[op.pos] = op.ch;
                break;
            case EditOp::Kind::Insert:
                w.insert(std::min(op.pos, w.size()), 1, op.ch);
                break;
            case EditOp::Kind::Delete:
                if (op.pos < w.size()) w.erase(op.pos, 1);
                break;
        }
    }
    return w;
}

InjectionResult inject_spelling_non_dictionary(const CleanSentence& s, const LexiconBundle& lex,
                                               RandomSource& rng, const InjectorOptions& opt,
                                               const InjectionPins& pins) {
    auto cands = filter_tokens(s, pins, [&](const std::string& w) { return lex.is_dictionary_word(w); });
    if (cands.empty()) return Skip{SkipReason::NoTargetWord};
    int attempts = pins.edits ? 1 : std::max(1, opt.max_retries);
    for (int a = 0; a < attempts; ++a) {
        std::size_t idx = *pinned_or_random(cands, rng);
        auto original = utf8::decode(s.tokens[idx].surface);
        std::string ops;
        std::u32string w = pins.edits ? apply_edits(original, *pins.edits)
                                      : random_perturbation(original, rng, opt.confusion_alphabet, ops);
        auto d = edit_distance(w, original);
        if (d < 1 || d > 2 || !well_formed_word(w)) continue;
        auto surface = utf8::encode(w);
        if (lex.is_dictionary_word(surface) || opt.inventory().is_mark(surface)) continue;
        auto o = replace_one(s, idx, surface, FinerClass::SpellingNonDictionary);
        o.detail["edit_distance"] = std::to_string(d);
        if (!ops.empty()) o.detail["edits"] = ops;
        return o;
    }
    return Skip{SkipReason::ExhaustedRetries};
}

InjectionResult inject_spelling_dictionary(const CleanSentence& s, const LexiconBundle& lex,
                                           RandomSource& rng, const InjectorOptions& opt,
                                           const InjectionPins& pins) {
    auto homonym_ok = [&](const std::string& w, const std::string& p) {
        return p != w && edit_distance(w, p) <= 2;
    };
    if (pins.fallback != true) {
        auto cands = filter_tokens(s, pins, [&](const std::string& w) {
            for (auto& p : lex.homonyms_of(w))
                if (homonym_ok(w, p)) return true;
            return false;
        });
        if (!cands.empty()) {
            std::size_t idx = rng.choice(cands);
            const auto& w = s.tokens[idx].surface;
            std::vector<std::string> partners;
            for (auto& p : lex.homonyms_of(w))
                if (homonym_ok(w, p) && (!pins.replacement || *pins.replacement == p))
                    partners.push_back(p);
            if (partners.empty()) return Skip{SkipReason::NoTargetWord};
            auto o = replace_one(s, idx, rng.choice(partners), FinerClass::SpellingDictionary);
            o.detail["mode"] = "homonym";
            return o;
        }
    }
    if (!(opt.dictionary_fallback || pins.fallback == true)) return Skip{SkipReason::NoTargetWord};

    // Fallback: a different dictionary word within two edits of a token.
    auto neighbours = [&](const std::string& w) {
        auto uw = utf8::decode(w);
        auto related = lex.related_forms(w);
        std::vector<std::string> out;
        for (auto& cand : lex.sorted_words()) {
            if (cand == w || related.count(cand)) continue;
            if (pins.replacement && *pins.replacement != cand) continue;
            auto uc = utf8::decode(cand);
            std::size_t diff = uc.size() > uw.size() ? uc.size() - uw.size() : uw.size() - uc.size();
            if (diff > 2) continue;
            auto d = edit_distance(uc, uw);
            if (d >= 1 && d <= 2 && well_formed_word(uc) && !opt.inventory().is_mark(cand))
                out.push_back(cand);
        }
        return out;
    };
    auto cands = filter_tokens(s, pins, [&](const std::string& w) { return lex.is_dictionary_word(w); });
    rng.shuffle(cands);
    for (auto idx : cands) {
        auto options = neighbours(s.tokens[idx].surface);
        if (options.empty()) continue;
        auto o = replace_one(s, idx, rng.choice(options), FinerClass::SpellingDictionary);
        o.detail["mode"] = "fallback";
        return o;
    }
    return Skip{SkipReason::NoTargetWord};
}

namespace {

enum class Dimension { Tense, Person };

InjectionResult inject_verb_feature(const CleanSentence& s, const LexiconBundle& lex,
                                    RandomSource& rng, const InjectionPins& pins, Dimension dim) {
    struct Option {
        VerbCell from;
        VerbCell to;
        std::string form;
    };
    const FinerClass finer = dim == Dimension::Tense ? FinerClass::Tense : FinerClass::Person;
    bool any_verb = false;
    std::vector<std::pair<std::size_t, std::vector<std::vector<Option>>>> per_token;
    for (auto idx : word_indices(s)) {
        if (pins.token && *pins.token != idx) continue;
        const auto& surface = s.tokens[idx].surface;
        auto cells = lex.find_verb(surface);
        if (cells.empty()) continue;
        any_verb = true;
        std::vector<std::vector<Option>> per_cell;
        for (auto& cell : cells) {
            std::vector<Option> opts;
            if (dim == Dimension::Tense) {
                for (auto t : {Tense::Past, Tense::Present, Tense::Future}) {
                    if (t == cell.tense || (pins.tense && *pins.tense != t)) continue;
                    // Any aspect of the target tense: a future simple form may
                    // become a past perfect one.
                    for (auto a : {Aspect::Simple, Aspect::Continuous, Aspect::Perfect,
                                   Aspect::Habitual}) {
                        VerbCell to{cell.lemma, t, cell.person, a};
                        if (const auto* f = lex.verb_form(to)) opts.push_back({cell, to, *f});
                    }
                }
            } else {
                for (auto p : {Person::First, Person::Second, Person::Third}) {
                    if (p == cell.person || (pins.person && *pins.person != p)) continue;
                    VerbCell to{cell.lemma, cell.tense, p, cell.aspect};
                    if (const auto* f = lex.verb_form(to)) opts.push_back({cell, to, *f});
                }
            }
            // Drop replacements that are themselves a form of the original slot.
            std::erase_if(opts, [&](const Option& o) {
                if (o.form == surface) return true;
                if (pins.replacement && o.form != *pins.replacement) return true;
                for (auto& c : lex.find_verb(o.form))
                    if (c.lemma == cell.lemma && c.tense == cell.tense && c.person == cell.person)
                        return true;
                return false;
            });
            if (!opts.empty()) per_cell.push_back(std::move(opts));
        }
        if (!per_cell.empty()) per_token.emplace_back(idx, std::move(per_cell));
    }
    if (!any_verb) return Skip{SkipReason::NoTargetWord};
    if (per_token.empty()) return Skip{SkipReason::WouldBeValid};
    auto& [idx, per_cell] = per_token[rng.index(per_token.size())];
    auto& cell_opts = per_cell[rng.index(per_cell.size())];
    auto& choice = cell_opts[rng.index(cell_opts.size())];
    auto o = replace_one(s, idx, choice.form, finer);
    o.detail["lemma"] = choice.from.lemma;
    if (dim == Dimension::Tense) {
        o.detail["from_tense"] = std::string(id_of(choice.from.tense));
        o.detail["to_tense"] = std::string(id_of(choice.to.tense));
    } else {
        o.detail["from_person"] = std::string(id_of(choice.from.person));
        o.detail["to_person"] = std::string(id_of(choice.to.person));
    }
    return o;
}

InjectionResult swap_pair(const CleanSentence& s, RandomSource& rng, const InjectionPins& pins,
                          const PairMap& map, FinerClass finer, bool allow_right_to_left) {
    auto present = filter_tokens(s, pins, [&](const std::string& w) { return map.contains(w); });
    if (present.empty()) return Skip{SkipReason::NoTargetWord};
    std::vector<std::size_t> usable;
    for (auto i : present)
        if (swap_direction_ok(map, s.tokens[i].surface, allow_right_to_left)) usable.push_back(i);
    if (usable.empty()) return Skip{SkipReason::WouldBeValid};
    std::size_t idx = rng.choice(usable);
    const auto& w = s.tokens[idx].surface;
    auto o = replace_one(s, idx, *map.partner(w), finer);
    o.detail["direction"] = map.in_left(w) ? "forward" : "backward";
    return o;
}

}  // namespace

InjectionResult inject_tense(const CleanSentence& s, const LexiconBundle& lex, RandomSource& rng,
                             const InjectorOptions&, const InjectionPins& pins) {
    return inject_verb_feature(s, lex, rng, pins, Dimension::Tense);
}

InjectionResult inject_person(const CleanSentence& s, const LexiconBundle& lex, RandomSource& rng,
                              const InjectorOptions&, const InjectionPins& pins) {
    return inject_verb_feature(s, lex, rng, pins, Dimension::Person);
}

InjectionResult inject_number(const CleanSentence& s, const LexiconBundle& lex, RandomSource& rng,
                              const InjectorOptions&, const InjectionPins& pins) {
    return swap_pair(s, rng, pins, lex.pronoun_numbers(), FinerClass::Number, true);
}

InjectionResult inject_gender(const CleanSentence& s, const LexiconBundle& lex, RandomSource& rng,
                              const InjectorOptions& opt, const InjectionPins& pins) {
    return swap_pair(s, rng, pins, lex.genders(), FinerClass::Gender,
                     opt.allow_feminine_to_masculine);
}

InjectionResult inject_pos(const CleanSentence& s, const LexiconBundle& lex, RandomSource& rng,
                           const InjectorOptions&, const InjectionPins& pins) {
    return swap_pair(s, rng, pins, lex.noun_adjectives(), FinerClass::PartsOfSpeech, true);
}

InjectionResult inject_missing_word(const CleanSentence& s, const LexiconBundle& lex,
                                    RandomSource& rng, const InjectorOptions& opt,
                                    const InjectionPins& pins) {
    if (s.word_count() < 3) return Skip{SkipReason::DegenerateSentence};
    auto verbs = filter_tokens(s, pins, [&](const std::string& w) { return !lex.find_verb(w).empty(); });
    std::vector<std::size_t> nouns;
    for (auto i : word_indices(s)) {
        if (pins.token && *pins.token != i) continue;
        if (i == 0 || s.tokens[i - 1].is_punct) continue;
        const auto& w = s.tokens[i].surface;
        bool noun = lex.noun_adjectives().in_left(w) || lex.genders().contains(w);
        if (noun && lex.noun_adjectives().in_right(s.tokens[i - 1].surface)) nouns.push_back(i);
    }
    std::vector<std::size_t> pool;
    std::string mode;
    if (!verbs.empty()) {
        pool = verbs;
        mode = "verb";
    } else if (!nouns.empty()) {
        pool = nouns;
        mode = "noun_after_adjective";
    } else if (opt.random_deletion) {
        pool = filter_tokens(s, pins, [](const std::string&) { return true; });
        mode = "random";
    }
    if (pool.empty()) return Skip{SkipReason::NoTargetWord};
    std::size_t idx = rng.choice(pool);
    auto toks = surfaces(s);
    auto removed = toks[idx];
    toks.erase(toks.begin() + static_cast<std::ptrdiff_t>(idx));
    auto o = make_outcome(s, std::move(toks), FinerClass::MissingWord, idx, idx);
    o.detail["removed"] = removed;
    o.detail["token"] = std::to_string(idx);
    o.detail["mode"] = mode;
    o.needs_validation = mode == "random";
    return o;
}

InjectionResult inject_punctuation(const CleanSentence& s, RandomSource& rng,
                                   const InjectorOptions& opt, const InjectionPins& pins) {
    const auto& inv = opt.inventory();
    auto toks = surfaces(s);
    std::vector<PunctMode> modes;
    auto allowed = [&](PunctMode m) { return !pins.punct_mode || *pins.punct_mode == m; };
    bool danda_end = !toks.empty() && toks.back() == "।";
    std::vector<std::size_t> punct_idx;
    for (std::size_t i = 0; i < s.tokens.size(); ++i)
        if (s.tokens[i].is_punct && (!pins.token || *pins.token == i)) punct_idx.push_back(i);
    if (opt.punct_wrong_mark && danda_end && allowed(PunctMode::WrongMark))
        modes.push_back(PunctMode::WrongMark);
    if (opt.punct_missing_mark && !punct_idx.empty() && allowed(PunctMode::MissingMark))
        modes.push_back(PunctMode::MissingMark);
    if (opt.punct_spurious_mark && toks.size() >= 2 && s.word_count() >= 1 &&
        allowed(PunctMode::SpuriousMark))
        modes.push_back(PunctMode::SpuriousMark);
    if (modes.empty()) return Skip{SkipReason::NoTargetWord};

    InjectionOutcome o;
    switch (rng.choice(modes)) {
        case PunctMode::WrongMark: {
            std::vector<std::string> marks = {"?", "!"};
            std::string m = pins.mark ? *pins.mark : rng.choice(marks);
            if (m == "।" || !inv.is_mark(m)) return Skip{SkipReason::WouldBeValid};
            std::size_t idx = toks.size() - 1;
            o = replace_one(s, idx, m, FinerClass::Punctuation);
            o.detail["mode"] = "wrong_mark";
            break;
        }
        case PunctMode::MissingMark: {
            std::size_t idx = rng.choice(punct_idx);
            auto removed = toks[idx];
            toks.erase(toks.begin() + static_cast<std::ptrdiff_t>(idx));
            o = make_outcome(s, std::move(toks), FinerClass::Punctuation, idx, idx);
            o.detail["mode"] = "missing_mark";
            o.detail["removed"] = removed;
            break;
        }
        case PunctMode::SpuriousMark: {
            std::size_t b = pins.boundary ? *pins.boundary : 1 + rng.index(toks.size() - 1);
            if (b == 0 || b >= toks.size()) return Skip{SkipReason::NoTargetWord};
            auto marks = inv.mark_strings();
            std::string m = pins.mark ? *pins.mark : rng.choice(marks);
            toks.insert(toks.begin() + static_cast<std::ptrdiff_t>(b), m);
            o = make_outcome(s, std::move(toks), FinerClass::Punctuation, b, b + 1);
            o.detail["mode"] = "spurious_mark";
            o.detail["inserted"] = m;
            break;
        }
    }
    if (o.wrong_text == o.correct_text) return Skip{SkipReason::WouldBeValid};
    return o;
}

InjectionResult inject_gurucandali(const CleanSentence& s, const LexiconBundle& lex,
                                   RandomSource& rng, const InjectorOptions&,
                                   const InjectionPins& pins) {
    std::vector<std::size_t> reg;
    bool sadhu = false, calita = false;
    for (auto i : word_indices(s)) {
        auto r = lex.register_of(s.tokens[i].surface);
        if (!r) continue;
        reg.push_back(i);
        (*r == Register::Sadhu ? sadhu : calita) = true;
    }
    if (reg.size() < 2) return Skip{SkipReason::NoTargetWord};
    if (sadhu && calita) return Skip{SkipReason::WouldBeValid};
    std::vector<std::size_t> convert;
    if (pins.convert) {
        convert = *pins.convert;
        std::sort(convert.begin(), convert.end());
        convert.erase(std::unique(convert.begin(), convert.end()), convert.end());
        for (auto i : convert)
            if (std::find(reg.begin(), reg.end(), i) == reg.end())
                return Skip{SkipReason::NoTargetWord};
        if (convert.empty() || convert.size() >= reg.size()) return Skip{SkipReason::WouldBeValid};
    } else {
        std::size_t m = 1 + rng.index(reg.size() - 1);
        auto shuffled = reg;
        rng.shuffle(shuffled);
        convert.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(m));
        std::sort(convert.begin(), convert.end());
    }
    auto toks = surfaces(s);
    std::string converted;
    for (auto i : convert) {
        toks[i] = *lex.register_partner(toks[i]);
        if (!converted.empty()) converted += ',';
        converted += std::to_string(i);
    }
    auto o = make_outcome(s, std::move(toks), FinerClass::GurucandaliDosa, convert.front(),
                          convert.back() + 1);
    o.detail["source_register"] = sadhu ? "sadhu" : "calita";
    o.detail["converted"] = converted;
    return o;
}

InjectionResult inject_case_rule(const CleanSentence& s, const LexiconBundle& lex,
                                 RandomSource& rng, const InjectorOptions&,
                                 const InjectionPins& pins) {
    static const std::vector<std::string> suffixes = {"কে", "তে", "ের", "ে", "র"};
    struct Option {
        std::size_t idx;
        std::string stem, suffix;
    };
    std::vector<Option> opts;
    for (auto i : word_indices(s)) {
        if (pins.token && *pins.token != i) continue;
        const auto& w = s.tokens[i].surface;
        if (lex.is_pronoun(w) || !lex.find_verb(w).empty() || !lex.is_dictionary_word(w)) continue;
        for (auto& suf : suffixes) {
            if (w.size() <= suf.size() || w.compare(w.size() - suf.size(), suf.size(), suf) != 0)
                continue;
            auto stem = w.substr(0, w.size() - suf.size());
            if (lex.is_dictionary_word(stem)) {
                opts.push_back({i, stem, suf});
                break;
            }
        }
    }
    if (opts.empty()) return Skip{SkipReason::NoTargetWord};
    auto& pick = opts[rng.index(opts.size())];
    std::vector<std::string> alts;
    for (auto& suf : suffixes)
        if (suf != pick.suffix && well_formed_word(utf8::decode(pick.stem + suf)))
            alts.push_back(pick.stem + suf);
    if (pins.replacement) std::erase_if(alts, [&](auto& a) { return a != *pins.replacement; });
    if (alts.empty()) return Skip{SkipReason::WouldBeValid};
    auto o = replace_one(s, pick.idx, rng.choice(alts), FinerClass::Case);
    o.detail["mode"] = "suffix_swap";
    o.needs_validation = true;
    return o;
}

Injector injector_for(FinerClass c) {
    switch (c) {
        case FinerClass::SpellingNonDictionary: return inject_spelling_non_dictionary;
        case FinerClass::SpellingDictionary: return inject_spelling_dictionary;
        case FinerClass::Tense: return inject_tense;
        case FinerClass::Person: return inject_person;
        case FinerClass::Number: return inject_number;
        case FinerClass::Gender: return inject_gender;
        case FinerClass::PartsOfSpeech: return inject_pos;
        case FinerClass::MissingWord: return inject_missing_word;
        case FinerClass::GurucandaliDosa: return inject_gurucandali;
        case FinerClass::Punctuation:
            return [](const CleanSentence& s, const LexiconBundle&, RandomSource& rng,
                      const InjectorOptions& o, const InjectionPins& p) {
                return inject_punctuation(s, rng, o, p);
            };
        case FinerClass::Case:
        case FinerClass::Semantic:
        case FinerClass::Correct: return nullptr;
    }
    return nullptr;
}

std::vector<HandcraftedRow> load_handcrafted(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LexiconError(LexiconError::Kind::Io, path, 0, "cannot open");
    std::vector<HandcraftedRow> rows;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string part;
        while (std::getline(ss, part, '\t')) f.push_back(part);
        if (f.size() < 3 || f.size() > 4)
            throw LexiconError(LexiconError::Kind::MalformedRow, path, n, "");
        auto finer = finer_from_id(f[2]);
        if (!finer || *finer == FinerClass::Correct)
            throw LexiconError(LexiconError::Kind::MalformedRow, path, n, f[2]);
        rows.push_back({f[0], f[1], *finer, f.size() == 4 && f[3] == "approved"});
    }
    return rows;
}

HandcraftedResult ingest_handcrafted(const std::vector<HandcraftedRow>& rows,
                                     const PunctuationInventory& inv) {
    HandcraftedResult out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        auto wrong = normalize_sentence(r.wrong, {}, inv);
        auto correct = normalize_sentence(r.correct, {}, inv);
        if (r.finer == FinerClass::Correct) {
            out.rejected.push_back({i, "correct is not an error class"});
            continue;
        }
        if (wrong.tokens.empty() || correct.tokens.empty()) {
            out.rejected.push_back({i, "empty sentence"});
            continue;
        }
        if (wrong.text == correct.text) {
            out.rejected.push_back({i, "equal texts"});
            continue;
        }
        auto w = surfaces(wrong), c = surfaces(correct);
        std::size_t pre = 0;
        while (pre < w.size() && pre < c.size() && w[pre] == c[pre]) ++pre;
        std::size_t suf = 0;
        while (suf < w.size() - pre && suf < c.size() - pre &&
               w[w.size() - 1 - suf] == c[c.size() - 1 - suf])
            ++suf;
        InjectionOutcome o;
        o.wrong_text = wrong.text;
        o.correct_text = correct.text;
        o.finer = r.finer;
        o.span_start = pre;
        o.span_end = w.size() - suf;
        o.injector = "handcrafted";
        o.needs_validation = !r.approved;
        out.outcomes.push_back(std::move(o));
        out.rows.push_back(i);
    }
    return out;
}

std::optional<std::string> audit_outcome(const InjectionOutcome& o, const CleanSentence& gold,
                                         const LexiconBundle& lex, const InjectorOptions& opt) {
    const auto& inv = opt.inventory();
    auto wrong = normalize_sentence(o.wrong_text, {}, inv);
    if (o.wrong_text == o.correct_text) return "wrong equals correct";
    if (o.correct_text != gold.text) return "correct text is not the gold sentence";
    if (wrong.text != o.wrong_text) return "wrong text is not normalized";
    if (o.span_start > o.span_end || o.span_end > wrong.tokens.size()) return "span out of range";
    auto g = surfaces(gold), w = surfaces(wrong);

    auto single_swap = [&]() -> std::optional<std::size_t> {
        if (g.size() != w.size()) return std::nullopt;
        std::optional<std::size_t> at;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] != w[i]) {
                if (at) return std::nullopt;
                at = i;
            }
        return at;
    };

    switch (o.finer) {
        case FinerClass::SpellingNonDictionary:
        case FinerClass::SpellingDictionary: {
            auto at = single_swap();
            if (!at) return "not a single-token change";
            auto d = edit_distance(g[*at], w[*at]);
            bool in_dict = lex.is_dictionary_word(w[*at]);
            if (o.finer == FinerClass::SpellingNonDictionary && (in_dict || d < 1 || d > 2))
                return "non-dictionary edit violated";
            if (o.finer == FinerClass::SpellingDictionary && (!in_dict || d < 1 || d > 2))
                return "dictionary edit violated";
            return std::nullopt;
        }
        case FinerClass::Tense:
        case FinerClass::Person: {
            auto at = single_swap();
            if (!at) return "not a single-token change";
            for (auto& a : lex.find_verb(g[*at]))
                for (auto& b : lex.find_verb(w[*at])) {
                    if (a.lemma != b.lemma) continue;
                    if (o.finer == FinerClass::Tense && a.person == b.person && a.tense != b.tense)
                        return std::nullopt;
                    if (o.finer == FinerClass::Person && a.tense == b.tense && a.person != b.person)
                        return std::nullopt;
                }
            return "paradigm relation violated";
        }
        case FinerClass::Number:
        case FinerClass::Gender:
        case FinerClass::PartsOfSpeech: {
            auto at = single_swap();
            if (!at) return "not a single-token change";
            const PairMap& m = o.finer == FinerClass::Number   ? lex.pronoun_numbers()
                               : o.finer == FinerClass::Gender ? lex.genders()
                                                               : lex.noun_adjectives();
            const auto* p = m.partner(g[*at]);
            if (!p || *p != w[*at]) return "replacement is not the mapped partner";
            return std::nullopt;
        }
        case FinerClass::MissingWord: {
            if (w.size() + 1 != g.size()) return "length is not n-1";
            std::size_t i = 0;
            while (i < w.size() && w[i] == g[i]) ++i;
            for (std::size_t j = i; j < w.size(); ++j)
                if (w[j] != g[j + 1]) return "not a subsequence";
            return std::nullopt;
        }
        case FinerClass::Punctuation: {
            auto a = non_punct(gold.tokens), b = non_punct(wrong.tokens);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) return "non-punctuation tokens changed";
            return std::nullopt;
        }
        case FinerClass::GurucandaliDosa: {
            auto regs = [&](const std::vector<std::string>& toks) {
                std::pair<bool, bool> r{false, false};
                for (auto& t : toks)
                    if (auto x = lex.register_of(t)) (*x == Register::Sadhu ? r.first : r.second) = true;
                return r;
            };
            auto rg = regs(g), rw = regs(w);
            if (!(rw.first && rw.second)) return "wrong text lacks one register";
            if (rg.first && rg.second) return "gold text mixes registers";
            return std::nullopt;
        }
        case FinerClass::Case:
        case FinerClass::Semantic: return std::nullopt;
        case FinerClass::Correct: return "correct is not an injection class";
    }
    return std::nullopt;
}

}  // namespace forge
