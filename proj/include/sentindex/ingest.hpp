#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sentindex/common.hpp"

namespace sentindex {

struct Document {
    std::string id;
    std::int64_t ts = 0;  // UTC epoch seconds
    DocKind kind = DocKind::post;
    std::string text;
};

struct IngestStats {
    std::int64_t records_read = 0;
    std::int64_t records_ok = 0;
    std::int64_t records_skipped = 0;   // malformed + filtered
    std::int64_t records_filtered = 0;  // subset of records_skipped
    std::vector<std::pair<std::int64_t, std::string>> first_error_samples;  // up to 10

    void note_error(std::int64_t line, std::string reason) {
        if (first_error_samples.size() < 10) {
            first_error_samples.emplace_back(line, std::move(reason));
        }
    }
};

enum class CorpusFormat { jsonl, tsv };

std::optional<CorpusFormat> parse_format_name(std::string_view name);

using DocFilter = std::function<bool(const Document&)>;

/// Streams line-delimited corpus records, one document at a time, in file
/// order, with constant memory. Malformed records are counted and skipped;
/// documents rejected by the optional pre-filter predicate are counted as
/// filtered. Single reader; it owns the stats.
class CorpusReader {
public:
    CorpusReader(std::istream& in, CorpusFormat format, DocFilter filter = {});

    std::optional<Document> next();

    const IngestStats& stats() const { return stats_; }

private:
    bool parse_line(std::string_view line, Document& doc, std::string& error) const;

    std::istream& in_;
    CorpusFormat format_;
    DocFilter filter_;
    IngestStats stats_;
    std::int64_t line_no_ = 0;
    std::string line_;
};

/// One JSONL record, the format CorpusReader reads back.
void write_jsonl(std::ostream& out, const Document& doc);

}  // namespace sentindex
