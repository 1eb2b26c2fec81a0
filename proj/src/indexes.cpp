#include "sentindex/indexes.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sentindex {

double word_sentiment_index(const Counts& c, const IndexConfig& cfg) {
    return (static_cast<double>(c.pos_words) + cfg.epsilon) /
           (static_cast<double>(c.neg_words) + cfg.epsilon);
}

double text_sentiment_index(const Counts& c, const IndexConfig& cfg) {
    return (static_cast<double>(c.pos_texts) + cfg.epsilon) /
           (static_cast<double>(c.neg_texts) + cfg.epsilon);
}

double word_emotion_index(const Counts& c, const IndexConfig& cfg) {
    return (static_cast<double>(c.pos_words + c.neg_words) + cfg.epsilon) /
           (static_cast<double>(c.n_tokens) + cfg.epsilon);
}

double text_emotion_index(const Counts& c, const IndexConfig& cfg) {
    return (static_cast<double>(c.pos_texts + c.neg_texts) + cfg.epsilon) /
           (static_cast<double>(c.n_texts) + cfg.epsilon);
}

namespace {

void apply(Counts& c, const Classification& cls) {
    c.n_texts += 1;
    c.n_tokens += cls.n;
    c.pos_words += cls.pos_hits;
    c.neg_words += cls.neg_hits;
    if (cls.label > 0) {
        c.pos_texts += 1;
    } else if (cls.label < 0) {
        c.neg_texts += 1;
    } else {
        c.neutral_texts += 1;
    }
}

IndexRow make_row(const BucketCounters& bc, const IndexConfig& cfg) {
    IndexRow row;
    row.bucket_start = bc.bucket_start;
    row.total = bc.total;
    row.by_kind[0] = bc.by_kind[0];
    row.by_kind[1] = bc.by_kind[1];
    row.s_w = word_sentiment_index(bc.total, cfg);
    row.s_t = text_sentiment_index(bc.total, cfg);
    row.e_w = word_emotion_index(bc.total, cfg);
    row.e_t = text_emotion_index(bc.total, cfg);
    return row;
}

void append_double(std::string& out, double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, r.ptr);
}

void append_counts(std::string& out, const Counts& c) {
    char buf[24];
    for (std::int64_t v : {c.n_texts, c.n_tokens, c.pos_words, c.neg_words, c.pos_texts,
                           c.neg_texts, c.neutral_texts}) {
        out.push_back(',');
        auto r = std::to_chars(buf, buf + sizeof buf, v);
        out.append(buf, r.ptr);
    }
}

void append_indexes(std::string& out, const Counts& c, const IndexConfig& cfg) {
    out.push_back(',');
    append_double(out, word_sentiment_index(c, cfg));
    out.push_back(',');
    append_double(out, text_sentiment_index(c, cfg));
    out.push_back(',');
    append_double(out, word_emotion_index(c, cfg));
    out.push_back(',');
    append_double(out, text_emotion_index(c, cfg));
}

}  // namespace

void CounterStore::observe(std::int64_t ts, DocKind kind, const Classification& cls) {
    const std::int64_t key = bucket_floor(ts, cfg_.bucket, cfg_.tz_offset_seconds);
    BucketCounters& b = buckets_[key];
    b.bucket_start = key;
    apply(b.total, cls);
    apply(b.by_kind[kind_index(kind)], cls);
}

void CounterStore::merge(const CounterStore& other) {
    // An empty store is the identity: merging it is a no-op, and merging
    // into it adopts the other configuration wholesale.
    if (other.empty()) return;
    if (empty()) {
        cfg_ = other.cfg_;
    } else if (cfg_.bucket != other.cfg_.bucket) {
        throw std::invalid_argument("cannot merge stores with different bucket granularity");
    } else if (cfg_.tz_offset_seconds != other.cfg_.tz_offset_seconds) {
        throw std::invalid_argument("cannot merge stores with different timezone offsets");
    }
    for (const auto& [key, bc] : other.buckets_) {
        BucketCounters& mine = buckets_[key];
        mine.bucket_start = key;
        mine.total.add(bc.total);
        mine.by_kind[0].add(bc.by_kind[0]);
        mine.by_kind[1].add(bc.by_kind[1]);
    }
}

Counts CounterStore::grand_total() const {
    Counts c;
    for (const auto& [key, bc] : buckets_) c.add(bc.total);
    return c;
}

Counts CounterStore::grand_total(DocKind kind) const {
    Counts c;
    for (const auto& [key, bc] : buckets_) c.add(bc.by_kind[kind_index(kind)]);
    return c;
}

std::vector<IndexRow> series(const CounterStore& store) {
    std::vector<IndexRow> rows;
    const auto& cfg = store.config();
    std::int64_t expected = 0;
    bool first = true;
    for (const auto& [key, bc] : store.buckets()) {
        if (!first) {
            while (expected < key) {
                BucketCounters empty;
                empty.bucket_start = expected;
                rows.push_back(make_row(empty, cfg));
                expected = bucket_next(expected, cfg.bucket, cfg.tz_offset_seconds);
            }
        }
        rows.push_back(make_row(bc, cfg));
        expected = bucket_next(key, cfg.bucket, cfg.tz_offset_seconds);
        first = false;
    }
    return rows;
}

double index_value(const IndexRow& row, WhichIndex which) {
    switch (which) {
        case WhichIndex::s_w: return row.s_w;
        case WhichIndex::s_t: return row.s_t;
        case WhichIndex::e_w: return row.e_w;
        case WhichIndex::e_t: return row.e_t;
    }
    return 0;
}

std::optional<double> dynamic_range(const std::vector<IndexRow>& rows, WhichIndex which) {
    double lo = 0, hi = 0;
    bool any = false;
    for (const auto& row : rows) {
        double v = index_value(row, which);
        if (!std::isfinite(v) || v <= 0) continue;
        if (!any) {
            lo = hi = v;
            any = true;
        } else {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
    }
    if (!any) return std::nullopt;
    return hi / lo;
}

void write_series_csv(std::ostream& out, const std::vector<IndexRow>& rows,
                      const IndexConfig& cfg, bool by_kind) {
    std::string line =
        "bucket_start,n_texts,n_tokens,pos_words,neg_words,pos_texts,neg_texts,"
        "neutral_texts,s_w,s_t,e_w,e_t";
    if (by_kind) {
        for (const char* prefix : {"post_", "comment_"}) {
            for (const char* col : {"n_texts", "n_tokens", "pos_words", "neg_words", "pos_texts",
                                    "neg_texts", "neutral_texts", "s_w", "s_t", "e_w", "e_t"}) {
                line.push_back(',');
                line += prefix;
                line += col;
            }
        }
    }
    line.push_back('\n');
    out << line;

    for (const auto& row : rows) {
        line = format_bucket_date(row.bucket_start, cfg.tz_offset_seconds);
        append_counts(line, row.total);
        append_indexes(line, row.total, cfg);
        if (by_kind) {
            for (int k = 0; k < 2; ++k) {
                append_counts(line, row.by_kind[k]);
                append_indexes(line, row.by_kind[k], cfg);
            }
        }
        line.push_back('\n');
        out << line;
    }
}

}  // namespace sentindex
