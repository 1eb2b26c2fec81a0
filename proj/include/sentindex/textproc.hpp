#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sentindex {

/// A text reduced to its normalized lemma sequence. Duplicates are kept;
/// n() is the token count the classifiers divide by.
struct TokenMultiset {
    std::vector<std::string> lemmas;

    std::size_t n() const { return lemmas.size(); }
};

/// Pluggable token-to-lemma mapping. Implementations must be deterministic;
/// the built-ins are pure and safe for unrestricted concurrent use.
class Normalizer {
public:
    virtual ~Normalizer() = default;
    virtual std::string name() const = 0;
    virtual std::string normalize(std::string_view token) const = 0;
};

// Recognized names: "lower", "lower-trimmed", "external:<command>".
// The external form runs <command> through /bin/sh and speaks a line
// protocol: one token in per line, one lemma out per line (UTF-8,
// line-buffered). Calls into an external normalizer are serialized.
std::unique_ptr<Normalizer> make_normalizer(const std::string& name);

// Splits on Unicode whitespace, then drops tokens with no letter in them
// (pure punctuation/symbols/digits) and tokens starting with http:// or
// https://. Order is preserved.
std::vector<std::string> tokenize(std::string_view text);

TokenMultiset normalize_text(std::string_view text, const Normalizer& norm);

}  // namespace sentindex
