#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace complab {

/// Bundled snapshot of single object words (flat, lowercase, deduplicated).
const std::vector<std::string>& object_words();

/// Finite verb -> simple-past table, irregulars included.
const std::unordered_map<std::string, std::string>& past_tense_map();
const std::vector<std::string>& past_tense_verbs();  // deterministic key order

/// Finite antonym table, capitalized entries, closed under inversion.
const std::unordered_map<std::string, std::string>& antonym_map();
const std::vector<std::string>& antonym_words();  // deterministic key order

/// English words for 1..1000 with hyphenated tens ("thirty-one").
std::string number_to_words(int n);

/// Inverse of number_to_words; throws std::invalid_argument on unknown text.
int words_to_number(const std::string& words);

}  // namespace complab
