#include "complab/logic_tasks.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "complab/lexicon.hpp"

namespace complab {

namespace {

std::vector<std::string> split_ws(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

std::string upper(const std::string& w) {
    std::string out = w;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return out;
}

bool is_integer(const std::string& tok) {
    return !tok.empty() &&
           std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
}

long parse_int(const std::string& tok) {
    if (!is_integer(tok)) throw std::invalid_argument("expected an integer, got '" + tok + "'");
    return std::stol(tok);
}

/// Drops marker tokens ("*", "(", ")") and returns the content words.
std::vector<std::string> content_words(const std::string& input) {
    std::vector<std::string> words;
    for (const auto& tok : split_ws(input))
        if (tok != "*" && tok != "(" && tok != ")") words.push_back(tok);
    return words;
}

std::string past_of(const std::string& verb) {
    const auto& map = past_tense_map();
    const auto it = map.find(verb);
    if (it == map.end()) throw std::invalid_argument("past tense: no entry for '" + verb + "'");
    return it->second;
}

std::string antonym_of(const std::string& word) {
    const auto& map = antonym_map();
    const auto it = map.find(word);
    if (it == map.end()) throw std::invalid_argument("opposite: no entry for '" + word + "'");
    return it->second;
}

struct PairSpec {
    const char* name;
    SimpleRule first;
    SimpleRule second;
    ComposeMode mode;
};

const PairSpec kPairs[] = {
    {"A+B", SimpleRule::Capitalization, SimpleRule::Swap, ComposeMode::BySteps},
    {"A+C", SimpleRule::Capitalization, SimpleRule::TwoSum, ComposeMode::BySteps},
    {"A+F", SimpleRule::Capitalization, SimpleRule::PlusOne, ComposeMode::ByParts},
    {"B+D", SimpleRule::Swap, SimpleRule::PastTense, ComposeMode::BySteps},
    {"B+E", SimpleRule::Swap, SimpleRule::Opposite, ComposeMode::BySteps},
    {"D+F", SimpleRule::PastTense, SimpleRule::PlusOne, ComposeMode::ByParts},
    {"G+H", SimpleRule::Modular, SimpleRule::TwoSumPlusOne, ComposeMode::BySteps},
};

std::string pick(const std::vector<std::string>& pool, CounterRng& rng) {
    return pool[rng.below(pool.size())];
}

long pick_number(CounterRng& rng) { return 1 + static_cast<long>(rng.below(1000)); }

std::string pick_number_word(CounterRng& rng) {
    return number_to_words(1 + static_cast<int>(rng.below(100)));
}

/// One demonstration of a simple rule in the pair's surface format.
Demonstration simple_demo(const CompositeRule& rule, int which, CounterRng& rng) {
    const SimpleRule r = which == 1 ? rule.first : rule.second;
    std::string input;
    switch (r) {
        case SimpleRule::Capitalization:
            if (rule.pair_name == "A+B")
                input = "* " + pick(object_words(), rng);
            else if (rule.pair_name == "A+C")
                input = "* ( " + pick_number_word(rng) + " )";
            else
                input = pick(object_words(), rng);
            break;
        case SimpleRule::Swap: {
            std::string a = pick(object_words(), rng), b = pick(object_words(), rng);
            while (b == a) b = pick(object_words(), rng);
            input = "( " + a + " " + b + " )";
            break;
        }
        case SimpleRule::TwoSum:
            input = pick_number_word(rng) + " @ " + pick_number_word(rng);
            break;
        case SimpleRule::PastTense:
            input = pick(past_tense_verbs(), rng);
            break;
        case SimpleRule::Opposite:
            input = pick(antonym_words(), rng);
            break;
        case SimpleRule::PlusOne:
            input = std::to_string(pick_number(rng));
            break;
        case SimpleRule::Modular:
            input = std::to_string(pick_number(rng)) + " @ " + std::to_string(pick_number(rng));
            break;
        case SimpleRule::TwoSumPlusOne:
            input = std::to_string(pick_number(rng)) + " # " + std::to_string(pick_number(rng));
            break;
    }
    return {input, apply_simple_rule(r, input)};
}

std::string composite_input(const CompositeRule& rule, CounterRng& rng) {
    if (rule.pair_name == "A+B") {
        std::string a = pick(object_words(), rng), b = pick(object_words(), rng);
        while (b == a) b = pick(object_words(), rng);
        return "( * " + a + " * " + b + " )";
    }
    if (rule.pair_name == "A+C")
        return "* ( " + pick_number_word(rng) + " @ " + pick_number_word(rng) + " )";
    if (rule.pair_name == "A+F")
        return std::to_string(pick_number(rng)) + " " + pick(object_words(), rng);
    if (rule.pair_name == "B+D") {
        std::string a = pick(past_tense_verbs(), rng), b = pick(past_tense_verbs(), rng);
        while (b == a) b = pick(past_tense_verbs(), rng);
        return "( " + a + " " + b + " )";
    }
    if (rule.pair_name == "B+E") {
        std::string a = pick(antonym_words(), rng), b = pick(antonym_words(), rng);
        while (b == a) b = pick(antonym_words(), rng);
        return "( " + a + " " + b + " )";
    }
    if (rule.pair_name == "D+F")
        return std::to_string(pick_number(rng)) + " " + pick(past_tense_verbs(), rng);
    if (rule.pair_name == "G+H")
        return std::to_string(pick_number(rng)) + " # " + std::to_string(pick_number(rng)) +
               " @ " + std::to_string(pick_number(rng));
    throw std::invalid_argument("unsupported pair " + rule.pair_name);
}

Demonstration composite_demo(const CompositeRule& rule, CounterRng& rng) {
    const std::string input = composite_input(rule, rng);
    return {input, apply_composite_rule(rule, input).front()};
}

std::vector<Demonstration> draw_demonstrations(const CompositeRule& rule, Setting setting,
                                               int k, CounterRng rng,
                                               const std::string& exclude_input) {
    std::vector<Demonstration> demos;
    std::unordered_set<std::string> used{exclude_input};
    auto add_unique = [&](auto&& make) {
        for (int tries = 0; tries < 500; ++tries) {
            Demonstration d = make();
            if (used.insert(d.input).second) {
                demos.push_back(std::move(d));
                return;
            }
        }
        throw std::invalid_argument("generate_dataset: lexicon exhausted for distinct draws");
    };
    switch (setting) {
        case Setting::Simple1:
            for (int i = 0; i < k; ++i) add_unique([&] { return simple_demo(rule, 1, rng); });
            break;
        case Setting::Simple2:
            for (int i = 0; i < k; ++i) add_unique([&] { return simple_demo(rule, 2, rng); });
            break;
        case Setting::Composite:
            // Interleave the two simple rules so neither dominates the tail.
            for (int i = 0; i < k; ++i) {
                const int which = (i % 2) ? 2 : 1;
                add_unique([&] { return simple_demo(rule, which, rng); });
            }
            break;
        case Setting::CompositeInContext:
            for (int i = 0; i < k; ++i) add_unique([&] { return composite_demo(rule, rng); });
            break;
    }
    return demos;
}

}  // namespace

char rule_letter(SimpleRule rule) { return static_cast<char>('A' + static_cast<int>(rule)); }

SimpleRule rule_from_letter(char letter) {
    if (letter < 'A' || letter > 'H') throw std::invalid_argument("rule letter must be A..H");
    return static_cast<SimpleRule>(letter - 'A');
}

CompositeRule composite_rule(const std::string& pair_name) {
    for (const auto& p : kPairs)
        if (pair_name == p.name) return {p.first, p.second, p.mode, p.name};
    throw std::invalid_argument("unsupported task pair '" + pair_name + "'");
}

const std::vector<std::string>& supported_pairs() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& p : kPairs) out.emplace_back(p.name);
        return out;
    }();
    return names;
}

std::string setting_name(Setting setting) {
    switch (setting) {
        case Setting::Simple1: return "simple1";
        case Setting::Simple2: return "simple2";
        case Setting::Composite: return "composite";
        case Setting::CompositeInContext: return "composite-in-context";
    }
    throw std::invalid_argument("unknown setting");
}

Setting setting_from_name(const std::string& name) {
    for (Setting s : all_settings())
        if (setting_name(s) == name) return s;
    throw std::invalid_argument("unknown setting '" + name + "'");
}

const std::vector<Setting>& all_settings() {
    static const std::vector<Setting> settings{Setting::Simple1, Setting::Simple2,
                                               Setting::Composite, Setting::CompositeInContext};
    return settings;
}

std::string apply_simple_rule(SimpleRule rule, const std::string& input) {
    switch (rule) {
        case SimpleRule::Capitalization: {
            const auto words = content_words(input);
            if (words.empty())
                throw std::invalid_argument("capitalization: no word in '" + input + "'");
            std::vector<std::string> out;
            for (const auto& w : words) out.push_back(upper(w));
            return join(out);
        }
        case SimpleRule::Swap: {
            const auto words = content_words(input);
            if (words.size() != 2)
                throw std::invalid_argument("swap: need exactly two words in '" + input + "'");
            return words[1] + " " + words[0];
        }
        case SimpleRule::TwoSum: {
            const auto toks = split_ws(input);
            const auto at = std::find(toks.begin(), toks.end(), "@");
            if (at == toks.begin() || at == toks.end() || at + 1 == toks.end())
                throw std::invalid_argument("two sum: expected 'words @ words'");
            const int a = words_to_number(join({toks.begin(), at}));
            const int b = words_to_number(join({at + 1, toks.end()}));
            return number_to_words(a + b);
        }
        case SimpleRule::PastTense: {
            const auto words = split_ws(input);
            if (words.size() != 1) throw std::invalid_argument("past tense: need one verb");
            return past_of(words[0]);
        }
        case SimpleRule::Opposite: {
            const auto words = split_ws(input);
            if (words.size() != 1) throw std::invalid_argument("opposite: need one word");
            return antonym_of(words[0]);
        }
        case SimpleRule::PlusOne: {
            const auto words = split_ws(input);
            if (words.size() != 1) throw std::invalid_argument("plus one: need one number");
            return std::to_string(parse_int(words[0]) + 1);
        }
        case SimpleRule::Modular: {
            const auto toks = split_ws(input);
            if (toks.size() != 3 || toks[1] != "@")
                throw std::invalid_argument("modular: expected 'a @ b'");
            const long a = parse_int(toks[0]), b = parse_int(toks[2]);
            if (b == 0) throw std::invalid_argument("modular: zero modulus");
            return std::to_string(a % b);
        }
        case SimpleRule::TwoSumPlusOne: {
            const auto toks = split_ws(input);
            if (toks.size() != 3 || toks[1] != "#")
                throw std::invalid_argument("two sum plus one: expected 'a # b'");
            return std::to_string(parse_int(toks[0]) + parse_int(toks[2]) + 1);
        }
    }
    throw std::invalid_argument("unknown rule");
}

std::vector<std::string> apply_composite_rule(const CompositeRule& rule,
                                              const std::string& input) {
    if (rule.pair_name == "A+B") {
        const auto words = content_words(input);
        if (words.size() != 2)
            throw std::invalid_argument("A+B: need exactly two marked words");
        return {upper(words[1]) + " " + upper(words[0])};
    }
    if (rule.pair_name == "A+C") {
        const auto words = content_words(input);  // strips * and parentheses
        return {upper(apply_simple_rule(SimpleRule::TwoSum, join(words)))};
    }
    if (rule.pair_name == "A+F" || rule.pair_name == "D+F") {
        const auto toks = split_ws(input);
        if (toks.empty()) throw std::invalid_argument(rule.pair_name + ": empty input");
        std::vector<std::string> out;
        for (const auto& tok : toks) {
            if (is_integer(tok))
                out.push_back(std::to_string(parse_int(tok) + 1));
            else if (rule.pair_name == "A+F")
                out.push_back(upper(tok));
            else
                out.push_back(past_of(tok));
        }
        return {join(out)};
    }
    if (rule.pair_name == "B+D") {
        const auto words = content_words(input);
        if (words.size() != 2) throw std::invalid_argument("B+D: need exactly two verbs");
        return {past_of(words[1]) + " " + past_of(words[0])};
    }
    if (rule.pair_name == "B+E") {
        const auto words = content_words(input);
        if (words.size() != 2) throw std::invalid_argument("B+E: need exactly two words");
        return {antonym_of(words[1]) + " " + antonym_of(words[0])};
    }
    if (rule.pair_name == "G+H") {
        const auto toks = split_ws(input);
        if (toks.size() != 5 || toks[1] != "#" || toks[3] != "@")
            throw std::invalid_argument("G+H: expected 'a # b @ c'");
        const long a = parse_int(toks[0]), b = parse_int(toks[2]), c = parse_int(toks[4]);
        if (c == 0) throw std::invalid_argument("G+H: zero modulus");
        // Both operation orders count as correct.
        const long left_first = (a + b + 1) % c;
        const long right_first = a + (b % c) + 1;
        std::vector<std::string> gold{std::to_string(left_first)};
        if (right_first != left_first) gold.push_back(std::to_string(right_first));
        return gold;
    }
    throw std::invalid_argument("unsupported pair " + rule.pair_name);
}

std::vector<PromptInstance> generate_dataset(const CompositeRule& rule, Setting setting,
                                             const GenerateOptions& options, RngSeed seed) {
    if (options.n < 1) throw std::invalid_argument("generate_dataset: n >= 1");
    if (options.k < 1) throw std::invalid_argument("generate_dataset: k >= 1");
    std::vector<PromptInstance> out;
    out.reserve(options.n);
    for (int i = 0; i < options.n; ++i) {
        PromptInstance inst;
        inst.task_pair = rule.pair_name;
        inst.mode = rule.mode == ComposeMode::ByParts ? "by-parts" : "by-steps";
        inst.setting = setting_name(setting);
        inst.id = inst.task_pair + "-" + inst.setting + "-" + std::to_string(i);
        inst.seed = mix64(seed ^ mix64(static_cast<std::uint64_t>(i)));
        if (options.with_instruction) inst.instruction = instruction_text(rule);

        CounterRng test_rng = CounterRng(inst.seed).fork(0);
        switch (setting) {
            case Setting::Simple1: {
                const Demonstration d = simple_demo(rule, 1, test_rng);
                inst.test_input = d.input;
                inst.gold = {d.output};
                break;
            }
            case Setting::Simple2: {
                const Demonstration d = simple_demo(rule, 2, test_rng);
                inst.test_input = d.input;
                inst.gold = {d.output};
                break;
            }
            default:
                inst.test_input = composite_input(rule, test_rng);
                inst.gold = apply_composite_rule(rule, inst.test_input);
                break;
        }

        inst.demonstrations = resample_demonstrations(inst, 0, options.k);
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<Demonstration> resample_demonstrations(const PromptInstance& instance, int rep,
                                                   int k) {
    const CompositeRule rule = composite_rule(instance.task_pair);
    const Setting setting = setting_from_name(instance.setting);
    if (k <= 0) k = static_cast<int>(instance.demonstrations.size());
    if (k <= 0) throw std::invalid_argument("resample_demonstrations: k >= 1");
    const auto tag = 1 + static_cast<std::uint64_t>(rep);
    return draw_demonstrations(rule, setting, k, CounterRng(instance.seed).fork(tag),
                               instance.test_input);
}

std::string render_prompt(const PromptInstance& instance) {
    std::string out;
    if (!instance.instruction.empty()) out += instance.instruction + "\n";
    for (const auto& demo : instance.demonstrations)
        out += "input: " + demo.input + "\noutput: " + demo.output + "\n";
    out += "input: " + instance.test_input + "\noutput:";
    return out;
}

ParsedPrompt parse_prompt(const std::string& text) {
    ParsedPrompt parsed;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> preamble;
    std::string pending_input;
    bool has_pending = false;
    while (std::getline(in, line)) {
        if (line.rfind("input: ", 0) == 0) {
            if (has_pending)
                throw std::invalid_argument("parse_prompt: input line without output");
            pending_input = line.substr(7);
            has_pending = true;
        } else if (line.rfind("output:", 0) == 0) {
            if (!has_pending)
                throw std::invalid_argument("parse_prompt: output line without input");
            if (line == "output:") {
                parsed.test_input = pending_input;
            } else {
                parsed.demonstrations.push_back({pending_input, line.substr(8)});
            }
            has_pending = false;
        } else if (!line.empty()) {
            if (!parsed.demonstrations.empty() || has_pending)
                throw std::invalid_argument("parse_prompt: stray line inside demonstrations");
            preamble.push_back(line);
        }
    }
    for (size_t i = 0; i < preamble.size(); ++i) {
        if (i) parsed.instruction += "\n";
        parsed.instruction += preamble[i];
    }
    return parsed;
}

std::string instruction_text(const CompositeRule& rule) {
    if (rule.pair_name == "A+B")
        return "* is a function before words for swapping the position of 2 words, # is "
               "another function after words for capitalizing letters of words.";
    if (rule.pair_name == "A+C")
        return "* is a function for capitalizing letters of words, @ is a function between "
               "words of numbers for summing the two numbers.";
    if (rule.pair_name == "A+F")
        return "If a numerical number is given, increment it by one; if a word is given, "
               "capitalize its letters; if both are given, perform both operations.";
    if (rule.pair_name == "B+D")
        return "( ) is a function around words for swapping the position of 2 words, and "
               "each verb is mapped to its past tense.";
    if (rule.pair_name == "B+E")
        return "( ) is a function around words for swapping the position of 2 words, and "
               "each word is mapped to its opposite.";
    if (rule.pair_name == "D+F")
        return "If a numerical number is given, increment it by one; if a verb is given, "
               "map it to its past tense; if both are given, perform both operations.";
    if (rule.pair_name == "G+H")
        return "@ is a function between numbers for taking the modular, # is another "
               "function between numbers for summing the two numbers and then plus one.";
    throw std::invalid_argument("unsupported pair " + rule.pair_name);
}

}  // namespace complab
