#pragma once

#include <string>
#include <vector>

namespace complab {

std::vector<std::string> tokenize_ws(const std::string& text);

/// Positional case-sensitive token match against the best gold candidate:
/// max over gold of (#matching positions) / (gold token count), capped at 1.
double exact_match(const std::string& prediction, const std::vector<std::string>& gold);

/// Word-level edit distance (unit-cost deletion/insertion/substitution)
/// divided by the gold token count.
double word_error_rate(const std::string& prediction, const std::string& gold);

/// Word-level edit distance itself (symmetric in its arguments).
long word_edit_distance(const std::string& a, const std::string& b);

}  // namespace complab
