#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>

#include "sentindex/common.hpp"
#include "sentindex/textproc.hpp"

namespace sentindex {

/// Phrase-conditional probability model for the Naive Bayes classifier.
/// Probabilities are stored per class in label_index order (-1, 0, +1).
/// A class column missing from the model file is filled with `floor`.
/// Immutable after load.
struct NbModel {
    struct Probs {
        std::array<double, 3> p;
    };

    using PhraseMap = std::unordered_map<std::string, Probs, StringHash, std::equal_to<>>;

    static constexpr double kDefaultFloor = 1e-7;
    // Longest phrase window the matcher will try.
    static constexpr int kMaxMatchTokens = 3;

    PhraseMap phrases;
    std::array<double, 3> priors{1.0 / 3, 1.0 / 3, 1.0 / 3};
    double floor = kDefaultFloor;
    int max_phrase_tokens = 1;

    /// Parses the NB model TSV: an optional `#priors<TAB>p-1<TAB>p0<TAB>p+1`
    /// header, then `phrase<TAB>p(w|-1)<TAB>p(w|+1)` or
    /// `phrase<TAB>p(w|-1)<TAB>p(w|0)<TAB>p(w|+1)` lines. Phrases may span
    /// several space-separated tokens; each token is normalized with `norm`
    /// when one is given. Probabilities must lie in (0,1]; priors must sum
    /// to 1 within 1e-6 (they are renormalized exactly after the check).
    static NbModel load(std::istream& in, const Normalizer* norm = nullptr,
                        double floor = kDefaultFloor,
                        std::string_view source_name = "<nb-model>");
    static NbModel load_file(const std::string& path, const Normalizer* norm = nullptr,
                             double floor = kDefaultFloor);
};

}  // namespace sentindex
