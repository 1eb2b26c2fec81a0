#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "sentindex/lexicon.hpp"
#include "sentindex/nb_model.hpp"
#include "sentindex/textproc.hpp"

namespace sentindex {

/// Per-text verdict. `delta` is set on the dictionary path only; the NB
/// path carries no amplitude. pos_hits/neg_hits count lexicon occurrences
/// with multiplicity.
struct Classification {
    int label = 0;  // -1, 0 or +1
    std::optional<double> delta;
    std::int64_t pos_hits = 0;
    std::int64_t neg_hits = 0;
    std::int64_t n = 0;
};

struct DictRuleConfig {
    double alpha = 0.05;  // neutrality threshold, in [0,1]
};

struct DeltaResult {
    double delta = 0.0;  // (pos_hits - neg_hits)/n, 0 for empty texts
    std::int64_t pos_hits = 0;
    std::int64_t neg_hits = 0;
};

DeltaResult emotion_delta(const TokenMultiset& text, const SentimentLexicon& lexicon);

// Dictionary rule: positive when |delta| >= alpha and delta > 0, negative
// when |delta| >= alpha and delta < 0, neutral otherwise (delta == 0 is
// neutral for every alpha, empty texts included).
Classification classify_dict(const TokenMultiset& text, const SentimentLexicon& lexicon,
                             const DictRuleConfig& cfg);

// Per-class log scores, label_index order: log p(c) plus the sum of
// log p(w|c) for every greedy longest phrase match (left to right, windows
// up to 3 tokens). With no matches the priors decide alone.
std::array<double, 3> nb_log_scores(const TokenMultiset& text, const NbModel& model);

// Naive Bayes: argmax of nb_log_scores. Ties prefer 0, then +1, then -1.
Classification classify_nb(const TokenMultiset& text, const NbModel& model);

}  // namespace sentindex
