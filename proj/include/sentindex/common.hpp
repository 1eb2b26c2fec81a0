#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sentindex {

// Sentiment labels are plain ints from {-1, 0, +1}. Arrays indexed by class
// use label_index(): -1 -> 0, 0 -> 1, +1 -> 2.
constexpr int kLabels[3] = {-1, 0, +1};

constexpr int label_index(int label) { return label + 1; }
constexpr int index_label(int idx) { return idx - 1; }
constexpr bool valid_label(int label) { return label >= -1 && label <= 1; }

enum class DocKind { post, comment };

constexpr int kind_index(DocKind k) { return k == DocKind::post ? 0 : 1; }
constexpr const char* kind_name(DocKind k) { return k == DocKind::post ? "post" : "comment"; }

enum class ClassifierKind { dict, nb };

/// Error raised by the file loaders; the message carries "source:line: reason".
class LoadError : public std::runtime_error {
public:
    LoadError(std::string_view source, std::size_t line, std::string_view reason)
        : std::runtime_error(std::string(source) + ":" + std::to_string(line) + ": " + std::string(reason)) {}
    explicit LoadError(std::string_view reason) : std::runtime_error(std::string(reason)) {}
};

// Transparent hashing so sets/maps keyed by std::string can be probed with
// string_view without allocating.
struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

}  // namespace sentindex
