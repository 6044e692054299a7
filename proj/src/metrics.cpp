#include "complab/metrics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace complab {

std::vector<std::string> tokenize_ws(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

double exact_match(const std::string& prediction, const std::vector<std::string>& gold) {
    if (gold.empty()) throw std::invalid_argument("exact_match: empty gold set");
    const auto pred = tokenize_ws(prediction);
    double best = 0.0;
    for (const auto& g : gold) {
        const auto gtoks = tokenize_ws(g);
        if (gtoks.empty()) throw std::invalid_argument("exact_match: empty gold text");
        size_t matches = 0;
        const size_t n = std::min(pred.size(), gtoks.size());
        for (size_t i = 0; i < n; ++i)
            if (pred[i] == gtoks[i]) ++matches;
        best = std::max(best, static_cast<double>(matches) / gtoks.size());
    }
    return std::min(best, 1.0);
}

long word_edit_distance(const std::string& a, const std::string& b) {
    const auto at = tokenize_ws(a);
    const auto bt = tokenize_ws(b);
    std::vector<long> prev(bt.size() + 1), cur(bt.size() + 1);
    for (size_t j = 0; j <= bt.size(); ++j) prev[j] = static_cast<long>(j);
    for (size_t i = 1; i <= at.size(); ++i) {
        cur[0] = static_cast<long>(i);
        for (size_t j = 1; j <= bt.size(); ++j) {
            const long sub = prev[j - 1] + (at[i - 1] == bt[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[bt.size()];
}

double word_error_rate(const std::string& prediction, const std::string& gold) {
    const auto gtoks = tokenize_ws(gold);
    if (gtoks.empty()) throw std::invalid_argument("word_error_rate: empty gold text");
    return static_cast<double>(word_edit_distance(prediction, gold)) / gtoks.size();
}

}  // namespace complab
