#include "complab/chain_grammar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace complab {

namespace {

std::string upper(const std::string& w) {
    std::string out = w;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return out;
}

std::string sentence_case(std::string text) {
    if (!text.empty()) text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    return text;
}

struct VerbEntry {
    const char* lemma;
    const char* past;
    const char* participle;
};

struct Corpus {
    std::vector<std::string> names;
    std::vector<std::string> chain_nouns;   // human-ish chain subjects
    std::vector<std::string> phrase_nouns;  // heads/complements of PPs
    std::vector<std::string> theme_nouns;   // inanimate objects
    std::vector<std::string> object_nouns;  // nouns moved object -> subject
    std::vector<std::string> relations;
    std::vector<VerbEntry> ccomp_verbs;
    std::vector<VerbEntry> unaccusative_verbs;
    std::vector<VerbEntry> trans_verbs;
    std::vector<VerbEntry> intrans_verbs;
    std::vector<VerbEntry> dative_verbs;
};

const Corpus& corpus() {
    static const Corpus c = {
        {"Sophia", "Henry", "Liam", "Luna", "Oliver", "Savannah", "Emma", "Samuel", "Noah",
         "Mia", "Ethan", "Ava"},
        {"girl", "boy", "lawyer", "teacher", "doctor", "farmer", "sailor", "captain",
         "princess", "baby", "monkey", "penguin"},
        {"baby", "tray", "house", "box", "table", "bed", "garden", "roof", "basket", "chair",
         "boat", "hill"},
        {"cake", "book", "donut", "melon", "muffin", "cookie", "rose", "balloon", "pillow",
         "drum"},
        {"cockroach", "hedgehog", "dog", "cat", "rabbit", "fox", "turtle", "frog", "squirrel",
         "owl"},
        {"on", "in", "beside"},
        {{"value", "valued", "valued"},
         {"admire", "admired", "admired"},
         {"like", "liked", "liked"},
         {"respect", "respected", "respected"},
         {"hope", "hoped", "hoped"},
         {"notice", "noticed", "noticed"},
         {"believe", "believed", "believed"},
         {"know", "knew", "known"},
         {"expect", "expected", "expected"},
         {"declare", "declared", "declared"}},
        {{"grow", "grew", "grown"},
         {"freeze", "froze", "frozen"},
         {"melt", "melted", "melted"},
         {"roll", "rolled", "rolled"},
         {"bounce", "bounced", "bounced"},
         {"shatter", "shattered", "shattered"}},
        {{"squeeze", "squeezed", "squeezed"},
         {"inflate", "inflated", "inflated"},
         {"observe", "observed", "observed"},
         {"paint", "painted", "painted"},
         {"hug", "hugged", "hugged"},
         {"poke", "poked", "poked"},
         {"lift", "lifted", "lifted"},
         {"examine", "examined", "examined"},
         {"help", "helped", "helped"},
         {"carry", "carried", "carried"}},
        {{"scream", "screamed", "screamed"},
         {"laugh", "laughed", "laughed"},
         {"smile", "smiled", "smiled"},
         {"sleep", "slept", "slept"},
         {"dance", "danced", "danced"},
         {"wave", "waved", "waved"}},
        {{"give", "gave", "given"},
         {"send", "sent", "sent"},
         {"offer", "offered", "offered"},
         {"lend", "lent", "lent"}},
    };
    return c;
}

/// English noun phrase: proper names are bare, common nouns take an article.
struct Np {
    bool proper = false;
    std::string word;
    bool definite = false;

    std::string text() const {
        if (proper) return word;
        return (definite ? "the " : "a ") + word;
    }
};

Np name_np(const std::string& n) { return {true, n, false}; }
Np noun_np(const std::string& n, bool definite) { return {false, n, definite}; }

const VerbEntry& find_verb(const std::vector<VerbEntry>& verbs, const std::string& lemma) {
    for (const auto& v : verbs)
        if (lemma == v.lemma) return v;
    throw std::invalid_argument("unknown verb '" + lemma + "'");
}

const VerbEntry& find_any_verb(const std::string& lemma) {
    const Corpus& c = corpus();
    for (const auto* list : {&c.ccomp_verbs, &c.unaccusative_verbs, &c.trans_verbs,
                             &c.intrans_verbs, &c.dative_verbs})
        for (const auto& v : *list)
            if (lemma == v.lemma) return v;
    throw std::invalid_argument("unknown verb '" + lemma + "'");
}

}  // namespace

Term Term::word(std::string w) {
    Term t;
    t.kind_ = Kind::Word;
    t.text_ = std::move(w);
    return t;
}

Term Term::phrase(std::string relation, std::string head, Term complement) {
    if (complement.is_none())
        throw std::invalid_argument("phrase complement must be a word or phrase");
    Term t;
    t.kind_ = Kind::Phrase;
    t.relation_ = std::move(relation);
    t.text_ = std::move(head);
    t.complement_.push_back(std::move(complement));
    return t;
}

const std::string& Term::text() const {
    if (!is_word()) throw std::logic_error("Term: not a word");
    return text_;
}

const std::string& Term::relation() const {
    if (!is_phrase()) throw std::logic_error("Term: not a phrase");
    return relation_;
}

const std::string& Term::head() const {
    if (!is_phrase()) throw std::logic_error("Term: not a phrase");
    return text_;
}

const Term& Term::complement() const {
    if (!is_phrase()) throw std::logic_error("Term: not a phrase");
    return complement_.front();
}

bool Term::operator==(const Term& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::None: return true;
        case Kind::Word: return text_ == other.text_;
        case Kind::Phrase:
            return relation_ == other.relation_ && text_ == other.text_ &&
                   complement_.front() == other.complement_.front();
    }
    return false;
}

bool Clause::operator==(const Clause& other) const {
    return predicate == other.predicate && agent == other.agent && theme == other.theme &&
           recipient == other.recipient;
}

namespace {

std::string render_term(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::None: return "NONE";
        case Term::Kind::Word: return upper(t.text());
        case Term::Kind::Phrase:
            return upper(t.relation()) + " ( " + upper(t.head()) + " , " +
                   render_term(t.complement()) + " )";
    }
    return "NONE";
}

void collect_terminals(const Term& t, std::set<std::string>& out) {
    switch (t.kind()) {
        case Term::Kind::None: return;
        case Term::Kind::Word: out.insert(upper(t.text())); return;
        case Term::Kind::Phrase:
            out.insert(upper(t.head()));
            collect_terminals(t.complement(), out);
            return;
    }
}

}  // namespace

std::string render_chain_form(const LogicalForm& lf) {
    if (lf.clauses.empty()) throw std::invalid_argument("render_chain_form: no clauses");
    std::string out;
    for (size_t i = 0; i < lf.clauses.size(); ++i) {
        if (i) out += " CCOMP ";
        const Clause& c = lf.clauses[i];
        out += upper(c.predicate) + " ( " + render_term(c.agent) + " , " +
               render_term(c.theme) + " , " + render_term(c.recipient) + " )";
    }
    return out;
}

namespace {

struct TokenStream {
    std::vector<std::string> tokens;
    size_t pos = 0;

    const std::string& peek() const {
        if (pos >= tokens.size()) throw std::invalid_argument("parse_chain_form: early end");
        return tokens[pos];
    }
    std::string take() {
        std::string t = peek();
        ++pos;
        return t;
    }
    void expect(const std::string& t) {
        if (take() != t)
            throw std::invalid_argument("parse_chain_form: expected '" + t + "'");
    }
    bool done() const { return pos >= tokens.size(); }
};

Term parse_term(TokenStream& ts) {
    const std::string head = ts.take();
    if (head == "NONE") return Term::none();
    if (!ts.done() && ts.peek() == "(") {
        ts.expect("(");
        const std::string inner_head = ts.take();
        ts.expect(",");
        Term complement = parse_term(ts);
        ts.expect(")");
        return Term::phrase(head, inner_head, std::move(complement));
    }
    return Term::word(head);
}

}  // namespace

LogicalForm parse_chain_form(const std::string& text) {
    TokenStream ts;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) ts.tokens.push_back(tok);

    LogicalForm lf;
    while (!ts.done()) {
        if (!lf.clauses.empty()) ts.expect("CCOMP");
        Clause clause;
        clause.predicate = ts.take();
        ts.expect("(");
        clause.agent = parse_term(ts);
        ts.expect(",");
        clause.theme = parse_term(ts);
        ts.expect(",");
        clause.recipient = parse_term(ts);
        ts.expect(")");
        lf.clauses.push_back(std::move(clause));
    }
    if (lf.clauses.empty()) throw std::invalid_argument("parse_chain_form: empty input");
    return lf;
}

std::set<std::string> primitives_of(const LogicalForm& lf) {
    std::set<std::string> out;
    for (const Clause& c : lf.clauses) {
        out.insert(upper(c.predicate));
        collect_terminals(c.agent, out);
        collect_terminals(c.theme, out);
        collect_terminals(c.recipient, out);
    }
    return out;
}

SentencePair make_sentence_pair(std::string source, std::string subject_text, LogicalForm lf) {
    SentencePair sp;
    sp.source = std::move(source);
    sp.subject_text = std::move(subject_text);
    sp.target = render_chain_form(lf);
    sp.primitives = primitives_of(lf);
    sp.lf = std::move(lf);
    return sp;
}

SentencePair compose_T1(const SentencePair& phrase_item, const SentencePair& chain_item) {
    // A plain terminal subject is allowed and degenerates to a subject-token
    // substitution; only a missing subject slot is rejected.
    if (phrase_item.lf.clauses.empty() || phrase_item.lf.clauses.front().agent.is_none())
        throw std::invalid_argument("compose_T1: phrase item lacks a subject");
    if (chain_item.lf.clauses.empty() || !chain_item.lf.clauses.front().agent.is_word())
        throw std::invalid_argument("compose_T1: chain item lacks a terminal subject");
    if (chain_item.subject_text.empty() ||
        chain_item.source.rfind(chain_item.subject_text, 0) != 0)
        throw std::invalid_argument("compose_T1: chain subject span does not prefix source");

    LogicalForm lf = chain_item.lf;
    lf.clauses.front().agent = phrase_item.lf.clauses.front().agent;
    std::string source =
        phrase_item.subject_text + chain_item.source.substr(chain_item.subject_text.size());
    return make_sentence_pair(std::move(source), phrase_item.subject_text, std::move(lf));
}

SentencePair compose_T2(const SentencePair& passive_item, const SentencePair& object_item,
                        const std::string& theme_noun) {
    if (passive_item.lf.clauses.size() != 1 ||
        !passive_item.lf.clauses.front().agent.is_none() ||
        !passive_item.lf.clauses.front().theme.is_word())
        throw std::invalid_argument("compose_T2: first fixture is not a passive clause");
    const std::string verb = passive_item.lf.clauses.front().predicate;

    std::string moved_noun;
    for (const Clause& c : object_item.lf.clauses) {
        if (c.theme.is_word()) {
            moved_noun = c.theme.text();
            break;
        }
        if (c.theme.is_phrase()) {
            moved_noun = c.theme.head();
            break;
        }
    }
    if (moved_noun.empty())
        throw std::invalid_argument("compose_T2: second fixture has no object-position noun");

    const VerbEntry& entry = find_any_verb(verb);
    const Np subject = noun_np(moved_noun, false);
    const Np object = noun_np(theme_noun, true);
    std::string source =
        sentence_case(subject.text() + " " + entry.past + " " + object.text() + " .");

    LogicalForm lf;
    lf.clauses.push_back(
        {verb, Term::word(moved_noun), Term::word(theme_noun), Term::none()});
    return make_sentence_pair(std::move(source), sentence_case(subject.text()), std::move(lf));
}

std::vector<SentencePair> select_in_context(const SentencePair& test,
                                            const std::vector<SentencePair>& pool, int K,
                                            RngSeed seed) {
    if (K < 1) throw std::invalid_argument("select_in_context: K >= 1");
    if (static_cast<int>(pool.size()) < K)
        throw std::invalid_argument("select_in_context: pool smaller than K");

    std::vector<size_t> order(pool.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    CounterRng rng(seed);
    for (size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);

    std::set<std::string> uncovered = test.primitives;
    std::vector<size_t> chosen;
    std::vector<char> used(pool.size(), 0);
    while (!uncovered.empty()) {
        size_t best = pool.size();
        size_t best_gain = 0;
        for (size_t idx : order) {
            if (used[idx]) continue;
            size_t gain = 0;
            for (const auto& p : pool[idx].primitives)
                if (uncovered.count(p)) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = idx;
            }
        }
        if (best == pool.size()) {
            std::string missing;
            for (const auto& p : uncovered) missing += (missing.empty() ? "" : ", ") + p;
            throw std::invalid_argument("select_in_context: pool cannot cover: " + missing);
        }
        used[best] = 1;
        chosen.push_back(best);
        for (const auto& p : pool[best].primitives) uncovered.erase(p);
        if (static_cast<int>(chosen.size()) > K)
            throw std::invalid_argument("select_in_context: coverage needs more than K examples");
    }
    for (size_t idx : order) {
        if (static_cast<int>(chosen.size()) == K) break;
        if (!used[idx]) {
            used[idx] = 1;
            chosen.push_back(idx);
        }
    }
    std::vector<SentencePair> out;
    out.reserve(chosen.size());
    for (size_t idx : chosen) out.push_back(pool[idx]);
    return out;
}

// ---------------------------------------------------------------------------
// Item builders
// ---------------------------------------------------------------------------

namespace {

/// Phrase-subject item: "<NP> <rel> <NP> [<rel> <NP>] <verb-past> ."
SentencePair phrase_item(const Np& head, const std::string& rel1, const Np& mid,
                         const std::string& rel2, const Np& tail, const VerbEntry& verb,
                         int depth) {
    std::string subject = head.text() + " " + rel1 + " " + mid.text();
    Term term;
    if (depth >= 2) {
        subject += " " + rel2 + " " + tail.text();
        term = Term::phrase(rel1, head.word,
                            Term::phrase(rel2, mid.word, Term::word(tail.word)));
    } else {
        term = Term::phrase(rel1, head.word, Term::word(mid.word));
    }
    subject = sentence_case(subject);
    LogicalForm lf;
    lf.clauses.push_back({verb.lemma, term, Term::none(), Term::none()});
    return make_sentence_pair(subject + " " + verb.past + " .", subject, std::move(lf));
}

struct FinalClause {
    std::string english;  // without leading space, without trailing period
    Clause clause;
};

FinalClause unaccusative_final(const Np& theme, const VerbEntry& verb) {
    return {theme.text() + " " + verb.past,
            {verb.lemma, Term::none(), Term::word(theme.word), Term::none()}};
}

FinalClause transitive_final(const Np& subj, const VerbEntry& verb, const Np& obj) {
    return {subj.text() + " " + verb.past + " " + obj.text(),
            {verb.lemma, Term::word(subj.word), Term::word(obj.word), Term::none()}};
}

FinalClause dative_final(const Np& subj, const VerbEntry& verb, const Np& obj, const Np& rec) {
    return {subj.text() + " " + verb.past + " " + obj.text() + " to " + rec.text(),
            {verb.lemma, Term::word(subj.word), Term::word(obj.word), Term::word(rec.word)}};
}

/// CCOMP chain: "<NP> <verb> that <NP> <verb> that ... <final> ."
SentencePair chain_item(const std::vector<std::pair<Np, const VerbEntry*>>& heads,
                        const FinalClause& final_clause) {
    if (heads.empty()) throw std::invalid_argument("chain_item: need at least one ccomp clause");
    std::string source;
    LogicalForm lf;
    for (const auto& [np, verb] : heads) {
        source += np.text() + " " + verb->past + " that ";
        lf.clauses.push_back({verb->lemma, Term::word(np.word), Term::none(), Term::none()});
    }
    source += final_clause.english + " .";
    lf.clauses.push_back(final_clause.clause);
    source = sentence_case(source);
    std::string subject_text = sentence_case(heads.front().first.text());
    return make_sentence_pair(std::move(source), std::move(subject_text), std::move(lf));
}

SentencePair passive_item(const Np& theme, const VerbEntry& verb) {
    const std::string subject = sentence_case(theme.text());
    LogicalForm lf;
    lf.clauses.push_back({verb.lemma, Term::none(), Term::word(theme.word), Term::none()});
    return make_sentence_pair(subject + " was " + verb.participle + " .", subject,
                              std::move(lf));
}

/// Object-position item: "<NP> <verb> <NP> <rel> <NP> ."
SentencePair object_item(const Np& subj, const VerbEntry& verb, const Np& obj,
                         const std::string& rel, const Np& container) {
    const std::string subject = sentence_case(subj.text());
    LogicalForm lf;
    lf.clauses.push_back({verb.lemma, Term::word(subj.word),
                          Term::phrase(rel, obj.word, Term::word(container.word)),
                          Term::none()});
    return make_sentence_pair(
        subject + " " + verb.past + " " + obj.text() + " " + rel + " " + container.text() + " .",
        subject, std::move(lf));
}

SentencePair active_item(const Np& subj, const VerbEntry& verb, const Np& obj) {
    const std::string subject = sentence_case(subj.text());
    LogicalForm lf;
    lf.clauses.push_back(
        {verb.lemma, Term::word(subj.word), Term::word(obj.word), Term::none()});
    return make_sentence_pair(subject + " " + verb.past + " " + obj.text() + " .", subject,
                              std::move(lf));
}

// Subjects available to chain clauses: proper names plus common nouns.
Np chain_subject(size_t index, bool definite) {
    const Corpus& c = corpus();
    const size_t n_names = c.names.size();
    if (index % 2 == 0 && index / 2 < n_names) return name_np(c.names[index / 2]);
    return noun_np(c.chain_nouns[index % c.chain_nouns.size()], definite);
}

size_t chain_subject_count() { return corpus().names.size() + corpus().chain_nouns.size(); }

Np any_chain_subject(size_t index, bool definite) {
    const Corpus& c = corpus();
    const size_t n = chain_subject_count();
    index %= n;
    if (index < c.names.size()) return name_np(c.names[index]);
    return noun_np(c.chain_nouns[index - c.names.size()], definite);
}

FinalClause build_final(size_t index, bool definite) {
    const Corpus& c = corpus();
    switch (index % 3) {
        case 0: {
            const auto& v = c.unaccusative_verbs[index % c.unaccusative_verbs.size()];
            return unaccusative_final(noun_np(c.theme_nouns[index % c.theme_nouns.size()], definite),
                                      v);
        }
        case 1: {
            const auto& v = c.trans_verbs[index % c.trans_verbs.size()];
            return transitive_final(any_chain_subject(index * 5 + 1, !definite), v,
                                    noun_np(c.theme_nouns[(index + 3) % c.theme_nouns.size()],
                                            definite));
        }
        default: {
            const auto& v = c.dative_verbs[index % c.dative_verbs.size()];
            return dative_final(any_chain_subject(index * 7 + 2, definite), v,
                                noun_np(c.theme_nouns[(index + 5) % c.theme_nouns.size()], true),
                                any_chain_subject(index * 3 + 4, false));
        }
    }
}

std::vector<SentencePair> build_phrase_pool() {
    const Corpus& c = corpus();
    std::vector<SentencePair> pool;
    const size_t n = c.phrase_nouns.size();
    for (size_t i = 0; i < 3 * n; ++i) {
        const Np head = noun_np(c.phrase_nouns[i % n], i % 2 == 0);
        const Np mid = noun_np(c.phrase_nouns[(i + 4) % n], i % 3 == 0);
        const Np tail = noun_np(c.phrase_nouns[(i + 7) % n], i % 2 == 1);
        pool.push_back(phrase_item(head, c.relations[i % c.relations.size()], mid,
                                   c.relations[(i + 1) % c.relations.size()], tail,
                                   c.intrans_verbs[i % c.intrans_verbs.size()],
                                   i % 2 == 0 ? 2 : 1));
    }
    return pool;
}

std::vector<SentencePair> build_chain_pool() {
    const Corpus& c = corpus();
    std::vector<SentencePair> pool;
    for (size_t i = 0; i < 30; ++i) {
        std::vector<std::pair<Np, const VerbEntry*>> heads;
        for (size_t j = 0; j < 9; ++j) {
            heads.emplace_back(any_chain_subject(i * 5 + j, (i + j) % 2 == 0),
                               &c.ccomp_verbs[(i + j) % c.ccomp_verbs.size()]);
        }
        pool.push_back(chain_item(heads, build_final(i, i % 2 == 0)));
    }
    return pool;
}

std::vector<SentencePair> build_passive_pool() {
    const Corpus& c = corpus();
    std::vector<SentencePair> pool;
    for (size_t i = 0; i < 2 * c.trans_verbs.size(); ++i)
        pool.push_back(passive_item(noun_np(c.theme_nouns[i % c.theme_nouns.size()], i % 2 == 0),
                                    c.trans_verbs[i % c.trans_verbs.size()]));
    return pool;
}

std::vector<SentencePair> build_object_pool() {
    const Corpus& c = corpus();
    std::vector<SentencePair> pool;
    for (size_t i = 0; i < 2 * c.object_nouns.size(); ++i) {
        pool.push_back(object_item(
            name_np(c.names[i % c.names.size()]), c.trans_verbs[(i + 2) % c.trans_verbs.size()],
            noun_np(c.object_nouns[i % c.object_nouns.size()], false),
            c.relations[i % c.relations.size()],
            noun_np(c.phrase_nouns[(i + 3) % c.phrase_nouns.size()], i % 2 == 1)));
    }
    return pool;
}

std::vector<SentencePair> build_active_pool() {
    const Corpus& c = corpus();
    std::vector<SentencePair> pool;
    const size_t subjects = chain_subject_count();
    for (size_t i = 0; i < 2 * subjects; ++i) {
        const Np obj = i % 2 == 0
                           ? noun_np(c.theme_nouns[i % c.theme_nouns.size()], i % 4 == 0)
                           : noun_np(c.object_nouns[i % c.object_nouns.size()], false);
        pool.push_back(active_item(any_chain_subject(i, i % 3 == 0),
                                   c.trans_verbs[i % c.trans_verbs.size()], obj));
    }
    return pool;
}

std::vector<SentencePair> build_t1_composite_pool() {
    const auto phrases = build_phrase_pool();
    const auto chains = build_chain_pool();
    std::vector<SentencePair> pool;
    for (size_t i = 0; i < 40; ++i)
        pool.push_back(compose_T1(phrases[i % phrases.size()], chains[i % chains.size()]));
    return pool;
}

std::vector<SentencePair> build_t2_composite_pool() {
    const Corpus& c = corpus();
    std::vector<SentencePair> pool;
    for (size_t i = 0; i < 3 * c.object_nouns.size(); ++i) {
        pool.push_back(active_item(noun_np(c.object_nouns[i % c.object_nouns.size()], false),
                                   c.trans_verbs[i % c.trans_verbs.size()],
                                   noun_np(c.theme_nouns[(i + 1) % c.theme_nouns.size()], true)));
    }
    return pool;
}

std::vector<SentencePair> merge(std::initializer_list<const std::vector<SentencePair>*> pools) {
    std::vector<SentencePair> out;
    for (const auto* p : pools) out.insert(out.end(), p->begin(), p->end());
    return out;
}

// ---------------------------------------------------------------------------
// Seeded test-item draws (restricted to the pool-covered vocabulary)
// ---------------------------------------------------------------------------

SentencePair draw_phrase_item(CounterRng& rng) {
    const Corpus& c = corpus();
    const int depth = rng.below(2) == 0 ? 1 : 2;
    auto draw_noun = [&] { return c.phrase_nouns[rng.below(c.phrase_nouns.size())]; };
    const std::string head = draw_noun();
    std::string mid = draw_noun();
    while (mid == head) mid = draw_noun();
    std::string tail = draw_noun();
    while (tail == head || tail == mid) tail = draw_noun();
    return phrase_item(noun_np(head, rng.below(2) == 0), c.relations[rng.below(c.relations.size())],
                       noun_np(mid, rng.below(2) == 0), c.relations[rng.below(c.relations.size())],
                       noun_np(tail, rng.below(2) == 0),
                       c.intrans_verbs[rng.below(c.intrans_verbs.size())], depth);
}

SentencePair draw_chain_item(CounterRng& rng, int min_len = 4, int max_len = 6) {
    const Corpus& c = corpus();
    const int len = min_len + static_cast<int>(rng.below(max_len - min_len + 1));
    std::vector<std::pair<Np, const VerbEntry*>> heads;
    for (int j = 0; j < len - 1; ++j)
        heads.emplace_back(any_chain_subject(rng.below(chain_subject_count()), rng.below(2) == 0),
                           &c.ccomp_verbs[rng.below(c.ccomp_verbs.size())]);
    const FinalClause fin = build_final(rng.below(1 << 20), rng.below(2) == 0);
    return chain_item(heads, fin);
}

SentencePair draw_active_item(CounterRng& rng) {
    const Corpus& c = corpus();
    return active_item(
        name_np(c.names[rng.below(c.names.size())]),
        c.trans_verbs[rng.below(c.trans_verbs.size())],
        noun_np(c.theme_nouns[rng.below(c.theme_nouns.size())], rng.below(2) == 0));
}

SentencePair draw_subject_item(CounterRng& rng) {
    const Corpus& c = corpus();
    return active_item(noun_np(c.object_nouns[rng.below(c.object_nouns.size())], false),
                       c.trans_verbs[rng.below(c.trans_verbs.size())],
                       noun_np(c.chain_nouns[rng.below(c.chain_nouns.size())], rng.below(2) == 0));
}

SentencePair draw_t2_composite(CounterRng& rng) {
    const Corpus& c = corpus();
    const VerbEntry& verb = c.trans_verbs[rng.below(c.trans_verbs.size())];
    const std::string noun = c.object_nouns[rng.below(c.object_nouns.size())];
    const std::string theme = c.theme_nouns[rng.below(c.theme_nouns.size())];
    const SentencePair passive =
        passive_item(noun_np(c.theme_nouns[rng.below(c.theme_nouns.size())], true), verb);
    const SentencePair object = object_item(
        name_np(c.names[rng.below(c.names.size())]),
        c.trans_verbs[rng.below(c.trans_verbs.size())], noun_np(noun, false),
        c.relations[rng.below(c.relations.size())],
        noun_np(c.phrase_nouns[rng.below(c.phrase_nouns.size())], rng.below(2) == 0));
    return compose_T2(passive, object, theme);
}

SentencePair draw_test_item(const std::string& task, Setting setting, CounterRng& rng) {
    if (task == "T1") {
        switch (setting) {
            case Setting::Simple1: return draw_phrase_item(rng);
            case Setting::Simple2: return draw_chain_item(rng);
            default: return compose_T1(draw_phrase_item(rng), draw_chain_item(rng));
        }
    }
    if (task == "T2") {
        switch (setting) {
            case Setting::Simple1: return draw_active_item(rng);
            case Setting::Simple2: return draw_subject_item(rng);
            default: return draw_t2_composite(rng);
        }
    }
    throw std::invalid_argument("unknown linguistic task '" + task + "'");
}

}  // namespace

const std::vector<SentencePair>& linguistic_pool(const std::string& task, Setting setting) {
    static const std::vector<SentencePair> phrase_pool = build_phrase_pool();
    static const std::vector<SentencePair> chain_pool = build_chain_pool();
    static const std::vector<SentencePair> passive_pool = build_passive_pool();
    static const std::vector<SentencePair> object_pool = build_object_pool();
    static const std::vector<SentencePair> active_pool = build_active_pool();
    static const std::vector<SentencePair> t1_simple_union = merge({&phrase_pool, &chain_pool});
    static const std::vector<SentencePair> t1_composite_pool = build_t1_composite_pool();
    static const std::vector<SentencePair> t2_passive_union =
        merge({&passive_pool, &active_pool});
    static const std::vector<SentencePair> t2_object_union = merge({&object_pool, &active_pool});
    static const std::vector<SentencePair> t2_all =
        merge({&passive_pool, &object_pool, &active_pool});
    static const std::vector<SentencePair> t2_composite_pool = build_t2_composite_pool();

    if (task == "T1") {
        switch (setting) {
            case Setting::Simple1: return phrase_pool;
            case Setting::Simple2: return chain_pool;
            case Setting::Composite: return t1_simple_union;
            case Setting::CompositeInContext: return t1_composite_pool;
        }
    }
    if (task == "T2") {
        switch (setting) {
            case Setting::Simple1: return t2_passive_union;
            case Setting::Simple2: return t2_object_union;
            case Setting::Composite: return t2_all;
            case Setting::CompositeInContext: return t2_composite_pool;
        }
    }
    throw std::invalid_argument("unknown linguistic task '" + task + "'");
}

std::vector<PromptInstance> generate_linguistic_dataset(const std::string& task,
                                                        Setting setting,
                                                        const LingGenerateOptions& options,
                                                        RngSeed seed) {
    if (options.n < 1 || options.k < 1)
        throw std::invalid_argument("generate_linguistic_dataset: n, k >= 1");
    const auto& pool = linguistic_pool(task, setting);
    std::vector<PromptInstance> out;
    out.reserve(options.n);
    for (int i = 0; i < options.n; ++i) {
        PromptInstance inst;
        inst.task_pair = task;
        inst.mode = "by-parts";
        inst.setting = setting_name(setting);
        inst.id = task + "-" + inst.setting + "-" + std::to_string(i);
        inst.seed = mix64(seed ^ mix64(static_cast<std::uint64_t>(i)));

        CounterRng test_rng = CounterRng(inst.seed).fork(0);
        const SentencePair test = draw_test_item(task, setting, test_rng);
        inst.test_input = test.source;
        inst.gold = {test.target};

        const RngSeed sel_seed = mix64(inst.seed ^ mix64(1));
        const auto selected = select_in_context(test, pool, options.k, sel_seed);
        for (const auto& item : selected)
            inst.demonstrations.push_back({item.source, item.target});
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<Demonstration> resample_linguistic_demonstrations(const PromptInstance& instance,
                                                              int rep) {
    const Setting setting = setting_from_name(instance.setting);
    const auto& pool = linguistic_pool(instance.task_pair, setting);
    SentencePair test;
    test.source = instance.test_input;
    test.lf = parse_chain_form(instance.gold.at(0));
    test.target = instance.gold.at(0);
    test.primitives = primitives_of(test.lf);

    const RngSeed sel_seed = mix64(instance.seed ^ mix64(1 + static_cast<std::uint64_t>(rep)));
    const auto selected = select_in_context(
        test, pool, static_cast<int>(instance.demonstrations.size()), sel_seed);
    std::vector<Demonstration> demos;
    for (const auto& item : selected) demos.push_back({item.source, item.target});
    return demos;
}

namespace fixtures {

SentencePair phrase_recombination_baby() {
    LogicalForm lf;
    lf.clauses.push_back({"scream",
                          Term::phrase("on", "baby", Term::phrase("in", "tray", Term::word("house"))),
                          Term::none(), Term::none()});
    return make_sentence_pair("The baby on a tray in the house screamed .",
                              "The baby on a tray in the house", std::move(lf));
}

SentencePair longer_chain_value() {
    LogicalForm lf;
    const std::vector<std::pair<std::string, std::string>> heads = {
        {"value", "girl"},     {"admire", "Samuel"}, {"like", "monkey"},
        {"like", "Luna"},      {"respect", "Oliver"}, {"hope", "Savannah"},
        {"notice", "penguin"}, {"notice", "Emma"},    {"notice", "lawyer"},
    };
    for (const auto& [verb, subj] : heads)
        lf.clauses.push_back({verb, Term::word(subj), Term::none(), Term::none()});
    lf.clauses.push_back({"grow", Term::none(), Term::word("cake"), Term::none()});
    return make_sentence_pair(
        "A girl valued that Samuel admired that a monkey liked that Luna liked that Oliver "
        "respected that Savannah hoped that a penguin noticed that Emma noticed that the "
        "lawyer noticed that a cake grew .",
        "A girl", std::move(lf));
}

SentencePair passive_book_squeeze() {
    return passive_item(noun_np("book", true), find_verb(corpus().trans_verbs, "squeeze"));
}

SentencePair object_cockroach_box() {
    return object_item(name_np("Henry"), find_any_verb("like"), noun_np("cockroach", false),
                       "in", noun_np("box", false));
}

SentencePair active_sophia_donut() {
    return active_item(name_np("Sophia"), find_verb(corpus().trans_verbs, "squeeze"),
                       noun_np("donut", true));
}

SentencePair subject_cockroach_inflate() {
    return active_item(noun_np("cockroach", false), find_verb(corpus().trans_verbs, "inflate"),
                       noun_np("boy", false));
}

}  // namespace fixtures

}  // namespace complab
