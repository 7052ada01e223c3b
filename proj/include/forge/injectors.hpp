#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "forge/lexicon.hpp"
#include "forge/normalize.hpp"
#include "forge/random.hpp"
#include "forge/taxonomy.hpp"

namespace forge {

enum class SkipReason { NoTargetWord, WouldBeValid, ExhaustedRetries, DegenerateSentence };
std::string_view id_of(SkipReason r);

struct Skip {
    SkipReason reason;
};

struct InjectionOutcome {
    std::string wrong_text;
    std::string correct_text;
    FinerClass finer = FinerClass::Correct;
    // Token index range [span_start, span_end) in the wrong sentence. Deletions
    // leave an empty range at the point of removal.
    std::size_t span_start = 0;
    std::size_t span_end = 0;
    std::map<std::string, std::string> detail;
    std::string injector;
    bool needs_validation = false;
};

using InjectionResult = std::variant<InjectionOutcome, Skip>;

struct InjectorOptions {
    int max_retries = 20;
    bool confusion_alphabet = true;
    bool dictionary_fallback = true;
    bool random_deletion = false;
    bool allow_feminine_to_masculine = false;
    bool case_rule = false;
    bool punct_wrong_mark = true;
    bool punct_missing_mark = true;
    bool punct_spurious_mark = true;
    const PunctuationInventory* punctuation = nullptr;

    const PunctuationInventory& inventory() const {
        return punctuation ? *punctuation : default_punctuation();
    }
};

struct EditOp {
    enum class Kind { Substitute, Insert, Delete } kind;
    std::size_t pos;  // code point index in the word
    char32_t ch = 0;
};

enum class PunctMode { WrongMark, MissingMark, SpuriousMark };

// Forces individual random draws. Unset fields are drawn from the RandomSource.
struct InjectionPins {
    std::optional<std::size_t> token;
    std::optional<std::vector<EditOp>> edits;
    std::optional<std::string> replacement;
    std::optional<Tense> tense;
    std::optional<Person> person;
    std::optional<bool> fallback;
    std::optional<PunctMode> punct_mode;
    std::optional<std::string> mark;
    std::optional<std::size_t> boundary;
    std::optional<std::vector<std::size_t>> convert;
};

using Injector = InjectionResult (*)(const CleanSentence&, const LexiconBundle&, RandomSource&,
                                     const InjectorOptions&, const InjectionPins&);

InjectionResult inject_spelling_non_dictionary(const CleanSentence& s, const LexiconBundle& lex,
                                               RandomSource& rng, const InjectorOptions& opt = {},
                                               const InjectionPins& pins = {});
InjectionResult inject_spelling_dictionary(const CleanSentence& s, const LexiconBundle& lex,
                                           RandomSource& rng, const InjectorOptions& opt = {},
                                           const InjectionPins& pins = {});
InjectionResult inject_tense(const CleanSentence& s, const LexiconBundle& lex, RandomSource& rng,
                             const InjectorOptions& opt = {}, const InjectionPins& pins = {});
InjectionResult inject_person(const CleanSentence& s, const LexiconBundle& lex, RandomSource& rng,
                              const InjectorOptions& opt = {}, const InjectionPins& pins = {});
InjectionResult inject_number(const CleanSentence& s, const LexiconBundle& lex, RandomSource& rng,
                              const InjectorOptions& opt = {}, const InjectionPins& pins = {});
InjectionResult inject_gender(const CleanSentence& s, const LexiconBundle& lex, RandomSource& rng,
                              const InjectorOptions& opt = {}, const InjectionPins& pins = {});
InjectionResult inject_pos(const CleanSentence& s, const LexiconBundle& lex, RandomSource& rng,
                           const InjectorOptions& opt = {}, const InjectionPins& pins = {});
InjectionResult inject_missing_word(const CleanSentence& s, const LexiconBundle& lex,
                                    RandomSource& rng, const InjectorOptions& opt = {},
                                    const InjectionPins& pins = {});
InjectionResult inject_punctuation(const CleanSentence& s, RandomSource& rng,
                                   const InjectorOptions& opt = {}, const InjectionPins& pins = {});
InjectionResult inject_gurucandali(const CleanSentence& s, const LexiconBundle& lex,
                                   RandomSource& rng, const InjectorOptions& opt = {},
                                   const InjectionPins& pins = {});
// Vibhakti suffix swap. Off by default; outcomes always need validation.
InjectionResult inject_case_rule(const CleanSentence& s, const LexiconBundle& lex,
                                 RandomSource& rng, const InjectorOptions& opt = {},
                                 const InjectionPins& pins = {});

// Rule-based injector for a class, or nullptr for handcrafted-only classes.
Injector injector_for(FinerClass c);

struct HandcraftedRow {
    std::string wrong;
    std::string correct;
    FinerClass finer = FinerClass::Case;
    bool approved = false;
};

struct RejectedRecord {
    std::size_t index;
    std::string reason;
};

struct HandcraftedResult {
    std::vector<InjectionOutcome> outcomes;
    std::vector<std::size_t> rows;  // input index of each outcome
    std::vector<RejectedRecord> rejected;
};

std::vector<HandcraftedRow> load_handcrafted(const std::string& path);
HandcraftedResult ingest_handcrafted(const std::vector<HandcraftedRow>& rows,
                                     const PunctuationInventory& inv = default_punctuation());

// Bangla letters used by the edit alphabet.
const std::u32string& edit_alphabet(bool confusion);
bool well_formed_word(std::u32string_view w);
std::u32string apply_edits(std::u32string w, const std::vector<EditOp>& ops);

// Re-checks the class property of an outcome against its gold sentence.
// Returns a description of the first violation, if any.
std::optional<std::string> audit_outcome(const InjectionOutcome& o, const CleanSentence& gold,
                                         const LexiconBundle& lex,
                                         const InjectorOptions& opt = {});

}  // namespace forge
