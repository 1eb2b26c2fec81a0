#include "sentindex/classifier.hpp"

#include <algorithm>
#include <cmath>

namespace sentindex {

DeltaResult emotion_delta(const TokenMultiset& text, const SentimentLexicon& lexicon) {
    DeltaResult r;
    for (const auto& lemma : text.lemmas) {
        int p = lexicon.polarity(lemma);
        if (p > 0) {
            ++r.pos_hits;
        } else if (p < 0) {
            ++r.neg_hits;
        }
    }
    if (!text.lemmas.empty()) {
        r.delta = static_cast<double>(r.pos_hits - r.neg_hits) /
                  static_cast<double>(text.lemmas.size());
    }
    return r;
}

Classification classify_dict(const TokenMultiset& text, const SentimentLexicon& lexicon,
                             const DictRuleConfig& cfg) {
    DeltaResult d = emotion_delta(text, lexicon);
    Classification cls;
    cls.delta = d.delta;
    cls.pos_hits = d.pos_hits;
    cls.neg_hits = d.neg_hits;
    cls.n = static_cast<std::int64_t>(text.n());
    if (std::fabs(d.delta) >= cfg.alpha && d.delta > 0) {
        cls.label = +1;
    } else if (std::fabs(d.delta) >= cfg.alpha && d.delta < 0) {
        cls.label = -1;
    } else {
        cls.label = 0;
    }
    return cls;
}

std::array<double, 3> nb_log_scores(const TokenMultiset& text, const NbModel& model) {
    std::array<double, 3> score{std::log(model.priors[0]), std::log(model.priors[1]),
                                std::log(model.priors[2])};

    const auto& lemmas = text.lemmas;
    const std::size_t max_window =
        std::min<std::size_t>(NbModel::kMaxMatchTokens,
                              static_cast<std::size_t>(std::max(model.max_phrase_tokens, 1)));
    std::string window;
    std::size_t i = 0;
    while (i < lemmas.size()) {
        std::size_t consumed = 0;
        for (std::size_t len = std::min(max_window, lemmas.size() - i); len >= 1; --len) {
            window.clear();
            for (std::size_t k = 0; k < len; ++k) {
                if (k) window.push_back(' ');
                window += lemmas[i + k];
            }
            auto it = model.phrases.find(window);
            if (it != model.phrases.end()) {
                for (int c = 0; c < 3; ++c) score[c] += std::log(it->second.p[c]);
                consumed = len;
                break;
            }
        }
        i += consumed ? consumed : 1;
    }
    return score;
}

Classification classify_nb(const TokenMultiset& text, const NbModel& model) {
    const std::array<double, 3> score = nb_log_scores(text, model);

    // Tie preference: 0, then +1, then -1.
    Classification cls;
    cls.n = static_cast<std::int64_t>(text.n());
    cls.label = 0;
    double best = score[label_index(0)];
    if (score[label_index(+1)] > best) {
        best = score[label_index(+1)];
        cls.label = +1;
    }
    if (score[label_index(-1)] > best) {
        cls.label = -1;
    }
    return cls;
}

}  // namespace sentindex
