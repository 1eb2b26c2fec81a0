#include "sentindex/ingest.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "sentindex/timeutil.hpp"
#include "sentindex/unicode.hpp"

namespace sentindex {

std::optional<CorpusFormat> parse_format_name(std::string_view name) {
    if (name == "jsonl") return CorpusFormat::jsonl;
    if (name == "tsv") return CorpusFormat::tsv;
    return std::nullopt;
}

CorpusReader::CorpusReader(std::istream& in, CorpusFormat format, DocFilter filter)
    : in_(in), format_(format), filter_(std::move(filter)) {}

namespace {

bool parse_kind(std::string_view s, DocKind& kind) {
    if (s == "post" || s.empty()) {
        kind = DocKind::post;
        return true;
    }
    if (s == "comment") {
        kind = DocKind::comment;
        return true;
    }
    return false;
}

bool parse_jsonl(std::string_view line, Document& doc, std::string& error) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        error = "invalid JSON";
        return false;
    }
    if (!j.is_object()) {
        error = "record is not an object";
        return false;
    }

    auto id = j.find("id");
    if (id == j.end() || !id->is_string()) {
        error = "missing string field 'id'";
        return false;
    }
    doc.id = id->get<std::string>();

    auto ts = j.find("ts");
    if (ts == j.end()) {
        error = "missing field 'ts'";
        return false;
    }
    if (ts->is_number_integer() || ts->is_number_unsigned()) {
        doc.ts = ts->get<std::int64_t>();
    } else if (ts->is_string()) {
        auto parsed = parse_timestamp(ts->get_ref<const std::string&>());
        if (!parsed) {
            error = "unparseable timestamp '" + ts->get<std::string>() + "'";
            return false;
        }
        doc.ts = *parsed;
    } else {
        error = "'ts' must be epoch seconds or an ISO-8601 string";
        return false;
    }

    auto text = j.find("text");
    if (text == j.end() || !text->is_string()) {
        error = "missing string field 'text'";
        return false;
    }
    doc.text = text->get<std::string>();

    doc.kind = DocKind::post;
    if (auto kind = j.find("kind"); kind != j.end()) {
        if (!kind->is_string() || !parse_kind(kind->get_ref<const std::string&>(), doc.kind)) {
            error = "'kind' must be \"post\" or \"comment\"";
            return false;
        }
    }
    return true;
}

bool parse_tsv(std::string_view line, std::int64_t line_no, Document& doc, std::string& error) {
    auto tab1 = line.find('\t');
    auto tab2 = tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos) {
        error = "expected ts<TAB>kind<TAB>text";
        return false;
    }
    auto ts_field = line.substr(0, tab1);
    auto kind_field = line.substr(tab1 + 1, tab2 - tab1 - 1);
    auto text_field = line.substr(tab2 + 1);

    auto parsed = parse_timestamp(ts_field);
    if (!parsed) {
        error = "unparseable timestamp '" + std::string(ts_field) + "'";
        return false;
    }
    doc.ts = *parsed;
    if (!parse_kind(kind_field, doc.kind)) {
        error = "kind must be \"post\" or \"comment\"";
        return false;
    }
    if (!uni::valid_utf8(text_field)) {
        error = "text is not valid UTF-8";
        return false;
    }
    doc.id = std::to_string(line_no);
    doc.text = std::string(text_field);
    return true;
}

}  // namespace

bool CorpusReader::parse_line(std::string_view line, Document& doc, std::string& error) const {
    return format_ == CorpusFormat::jsonl ? parse_jsonl(line, doc, error)
                                          : parse_tsv(line, line_no_, doc, error);
}

std::optional<Document> CorpusReader::next() {
    while (std::getline(in_, line_)) {
        ++line_no_;
        if (!line_.empty() && line_.back() == '\r') line_.pop_back();
        if (line_.empty()) continue;  // blank lines are not records

        ++stats_.records_read;
        Document doc;
        std::string error;
        if (!parse_line(line_, doc, error)) {
            ++stats_.records_skipped;
            stats_.note_error(line_no_, error);
            continue;
        }
        if (filter_ && !filter_(doc)) {
            ++stats_.records_skipped;
            ++stats_.records_filtered;
            continue;
        }
        ++stats_.records_ok;
        return doc;
    }
    return std::nullopt;
}

void write_jsonl(std::ostream& out, const Document& doc) {
    nlohmann::json j{{"id", doc.id},
                     {"ts", format_iso8601_utc(doc.ts)},
                     {"kind", kind_name(doc.kind)},
                     {"text", doc.text}};
    out << j.dump() << '\n';
}

}  // namespace sentindex
