#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "complab/rng.hpp"

namespace complab {

/// The eight simple rules, labeled A..H.
enum class SimpleRule {
    Capitalization,  // A: uppercase the marked words
    Swap,            // B: swap a two-word pair
    TwoSum,          // C: sum two number words
    PastTense,       // D: verb to simple past
    Opposite,        // E: word to its antonym
    PlusOne,         // F: integer plus one
    Modular,         // G: a @ b -> a mod b
    TwoSumPlusOne,   // H: a # b -> a + b + 1
};

char rule_letter(SimpleRule rule);
SimpleRule rule_from_letter(char letter);

enum class ComposeMode { ByParts, BySteps };

struct CompositeRule {
    SimpleRule first;
    SimpleRule second;
    ComposeMode mode;
    std::string pair_name;  // e.g. "A+F"
};

/// One of the seven supported pairs: A+B, A+C, A+F, B+D, B+E, D+F, G+H.
CompositeRule composite_rule(const std::string& pair_name);
const std::vector<std::string>& supported_pairs();

enum class Setting { Simple1, Simple2, Composite, CompositeInContext };
std::string setting_name(Setting setting);
Setting setting_from_name(const std::string& name);
const std::vector<Setting>& all_settings();

struct Demonstration {
    std::string input;
    std::string output;
};

/// One rendered evaluation item: instruction, K demonstrations, a test
/// input and the set of accepted gold outputs.
struct PromptInstance {
    std::string id;
    std::string task_pair;
    std::string mode;     // by-parts | by-steps
    std::string setting;  // simple1 | simple2 | composite | composite-in-context
    std::string instruction;
    std::vector<Demonstration> demonstrations;
    std::string test_input;
    std::vector<std::string> gold;
    std::uint64_t seed = 0;
};

/// Gold output of one simple rule; throws std::invalid_argument on
/// malformed input (e.g. a swap without exactly two words).
std::string apply_simple_rule(SimpleRule rule, const std::string& input);

/// Gold output set of a composite rule. Order-ambiguous compositions
/// (G+H) yield every order's result.
std::vector<std::string> apply_composite_rule(const CompositeRule& rule,
                                              const std::string& input);

struct GenerateOptions {
    int n = 100;                   // instances
    int k = 10;                    // demonstrations per instance
    bool with_instruction = false;
};

/// Deterministic dataset: numbers uniform on 1..1000, number words on
/// one..one hundred, object words from the bundled snapshot. The composite
/// setting interleaves K/2 demonstrations from each simple rule.
std::vector<PromptInstance> generate_dataset(const CompositeRule& rule, Setting setting,
                                             const GenerateOptions& options, RngSeed seed);

/// Demonstrations for replication `rep` of an instance: rep 0 reproduces the
/// stored ones; `k` defaults to the stored demonstration count.
std::vector<Demonstration> resample_demonstrations(const PromptInstance& instance, int rep,
                                                   int k = 0);

/// "input: {x}\noutput: {y}\n" per demonstration, then the open test line.
std::string render_prompt(const PromptInstance& instance);

struct ParsedPrompt {
    std::string instruction;
    std::vector<Demonstration> demonstrations;
    std::string test_input;
};
ParsedPrompt parse_prompt(const std::string& text);

/// Symbol-legend line for a pair (prepended when instructions are enabled).
std::string instruction_text(const CompositeRule& rule);

}  // namespace complab
