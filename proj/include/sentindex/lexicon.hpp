#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>

#include "sentindex/common.hpp"
#include "sentindex/textproc.hpp"

namespace sentindex {

/// Disjoint positive/negative term sets with O(1) polarity lookup.
/// Terms are stored in normalized form; immutable after construction and
/// safe to share across threads.
class SentimentLexicon {
public:
    using TermSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;

    SentimentLexicon() = default;

    /// Builds from already-normalized sets; throws std::invalid_argument if
    /// they intersect.
    static SentimentLexicon from_sets(TermSet positive, TermSet negative);

    /// Parses the lexicon TSV format: `term<TAB>polarity` with polarity +1
    /// or -1, `#` comment lines and blank lines ignored. Terms are passed
    /// through `norm` before storage. Throws LoadError on malformed lines
    /// and on terms claimed by both polarities.
    static SentimentLexicon load(std::istream& in, const Normalizer& norm,
                                 std::string_view source_name = "<lexicon>");
    static SentimentLexicon load_file(const std::string& path, const Normalizer& norm);

    /// +1 if the term is positive, -1 if negative, 0 if absent.
    /// The term must already be normalized.
    int polarity(std::string_view term) const {
        if (positive_.contains(term)) return +1;
        if (negative_.contains(term)) return -1;
        return 0;
    }

    const TermSet& positive_terms() const { return positive_; }
    const TermSet& negative_terms() const { return negative_; }
    std::size_t size() const { return positive_.size() + negative_.size(); }

    /// Writes the TSV form back out, sorted for stable diffs. load() of the
    /// result reproduces the same sets.
    void write_tsv(std::ostream& out) const;

    /// The lexicon with polarities exchanged.
    SentimentLexicon swapped() const;

private:
    TermSet positive_;
    TermSet negative_;
};

}  // namespace sentindex
