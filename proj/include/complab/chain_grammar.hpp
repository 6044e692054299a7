#pragma once

#include <set>
#include <string>
#include <vector>

#include "complab/logic_tasks.hpp"
#include "complab/rng.hpp"

namespace complab {

/// A slot value inside a clause: the NONE filler, a terminal word, or a
/// prepositional phrase REL ( HEAD , COMPLEMENT ) with finite nesting.
class Term {
public:
    enum class Kind { None, Word, Phrase };

    static Term none() { return Term(); }
    static Term word(std::string w);
    static Term phrase(std::string relation, std::string head, Term complement);

    Kind kind() const { return kind_; }
    bool is_none() const { return kind_ == Kind::None; }
    bool is_word() const { return kind_ == Kind::Word; }
    bool is_phrase() const { return kind_ == Kind::Phrase; }

    const std::string& text() const;        // terminal word
    const std::string& relation() const;    // phrase relation
    const std::string& head() const;        // phrase head terminal
    const Term& complement() const;         // phrase complement

    bool operator==(const Term& other) const;

private:
    Kind kind_ = Kind::None;
    std::string relation_;
    std::string text_;           // word text, or phrase head
    std::vector<Term> complement_;  // empty unless phrase
};

struct Clause {
    std::string predicate;
    Term agent = Term::none();
    Term theme = Term::none();
    Term recipient = Term::none();

    bool operator==(const Clause& other) const;
};

struct LogicalForm {
    std::vector<Clause> clauses;

    bool operator==(const LogicalForm& other) const { return clauses == other.clauses; }
};

/// "PRED ( AGENT , THEME , RECIPIENT )" per clause, joined by " CCOMP ",
/// phrases as "REL ( HEAD , COMPLEMENT )"; every token upper-case,
/// parentheses balanced.
std::string render_chain_form(const LogicalForm& lf);

/// Inverse of render_chain_form (round trip is byte-identical).
LogicalForm parse_chain_form(const std::string& text);

/// An English sentence with its chain-grammar rendering.
struct SentencePair {
    std::string source;
    std::string target;
    std::set<std::string> primitives;  // upper-case subjects/objects/verbs
    LogicalForm lf;
    std::string subject_text;  // the English subject span of `source`
};

/// Upper-case predicates and slot terminals (phrase heads and complements
/// included) of a logical form.
std::set<std::string> primitives_of(const LogicalForm& lf);

/// Builds a SentencePair around a logical form (target and primitives are
/// derived; source and subject span are supplied by the caller).
SentencePair make_sentence_pair(std::string source, std::string subject_text, LogicalForm lf);

/**
 * Phrase recombination into a longer chain: the first clause's terminal
 * subject is replaced by the phrase item's subject (normally a
 * prepositional phrase; a plain terminal degenerates to a subject-token
 * swap); the English source swaps subject spans and the CCOMP tail is
 * unchanged.
 */
SentencePair compose_T1(const SentencePair& phrase_item, const SentencePair& chain_item);

/**
 * Joint passive-to-active and object-to-subject item: the passive fixture's
 * verb turns active, the object fixture's embedded noun becomes the subject,
 * and `theme_noun` fills the object position.
 */
SentencePair compose_T2(const SentencePair& passive_item, const SentencePair& object_item,
                        const std::string& theme_noun);

/**
 * K pool examples jointly covering every primitive of the test item,
 * deterministic per seed. Throws std::invalid_argument naming the uncovered
 * primitives when the pool (or the budget K) cannot cover the test item.
 */
std::vector<SentencePair> select_in_context(const SentencePair& test,
                                            const std::vector<SentencePair>& pool, int K,
                                            RngSeed seed);

struct LingGenerateOptions {
    int n = 800;
    int k = 10;
};

/// Deterministic demonstration pool for a task/setting (corpus enumeration,
/// no randomness).
const std::vector<SentencePair>& linguistic_pool(const std::string& task, Setting setting);

/// JSONL-compatible instances for tasks "T1" and "T2" across the four
/// evaluation settings; demonstrations satisfy primitive coverage.
std::vector<PromptInstance> generate_linguistic_dataset(const std::string& task,
                                                        Setting setting,
                                                        const LingGenerateOptions& options,
                                                        RngSeed seed);

/// Replication-`rep` demonstrations for a linguistic instance (rep 0
/// reproduces the stored ones).
std::vector<Demonstration> resample_linguistic_demonstrations(const PromptInstance& instance,
                                                              int rep);

/// Fixture items mirroring the bundled conversion examples (used by tests
/// and as anchors of the generated corpus).
namespace fixtures {
SentencePair phrase_recombination_baby();   // nested on/in subject, SCREAM
SentencePair longer_chain_value();          // ten-clause VALUE .. GROW chain
SentencePair passive_book_squeeze();        // "The book was squeezed ."
SentencePair object_cockroach_box();        // "Henry liked a cockroach in a box ."
SentencePair active_sophia_donut();         // "Sophia squeezed the donut ."
SentencePair subject_cockroach_inflate();   // "A cockroach inflated a boy ."
}  // namespace fixtures

}  // namespace complab
