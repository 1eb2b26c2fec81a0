#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "sentindex/classifier.hpp"
#include "sentindex/common.hpp"
#include "sentindex/timeutil.hpp"

namespace sentindex {

struct IndexConfig {
    double epsilon = 1e-6;
    BucketGranularity bucket = BucketGranularity::day;
    int tz_offset_seconds = 0;
};

/// The integer tallies every index derives from. Purely additive, so stores
/// merge by field-wise summation.
struct Counts {
    std::int64_t n_texts = 0;
    std::int64_t n_tokens = 0;
    std::int64_t pos_words = 0;
    std::int64_t neg_words = 0;
    std::int64_t pos_texts = 0;
    std::int64_t neg_texts = 0;
    std::int64_t neutral_texts = 0;

    void add(const Counts& o) {
        n_texts += o.n_texts;
        n_tokens += o.n_tokens;
        pos_words += o.pos_words;
        neg_words += o.neg_words;
        pos_texts += o.pos_texts;
        neg_texts += o.neg_texts;
        neutral_texts += o.neutral_texts;
    }

    bool operator==(const Counts&) const = default;
};

struct BucketCounters {
    std::int64_t bucket_start = 0;  // UTC epoch seconds, bucket-aligned
    Counts total;
    Counts by_kind[2];  // indexed by kind_index()

    bool operator==(const BucketCounters&) const = default;
};

// The four indexes, from counters. epsilon smooths numerator and denominator
// alike. At epsilon == 0 IEEE semantics surface the degenerate buckets:
// x/0 with x > 0 is +inf, 0/0 is NaN.
double word_sentiment_index(const Counts& c, const IndexConfig& cfg);
double text_sentiment_index(const Counts& c, const IndexConfig& cfg);
double word_emotion_index(const Counts& c, const IndexConfig& cfg);
double text_emotion_index(const Counts& c, const IndexConfig& cfg);

enum class WhichIndex { s_w, s_t, e_w, e_t };

/// Per-bucket time-bucketed counter store. Single writer; parallel use means
/// one store per worker merged afterwards (merge is commutative and
/// associative with the empty store as identity).
class CounterStore {
public:
    CounterStore() = default;
    explicit CounterStore(IndexConfig cfg) : cfg_(cfg) {}

    void observe(std::int64_t ts, DocKind kind, const Classification& cls);

    /// Field-wise sum per bucket. Throws std::invalid_argument when bucket
    /// granularity or timezone differ.
    void merge(const CounterStore& other);

    const std::map<std::int64_t, BucketCounters>& buckets() const { return buckets_; }
    const IndexConfig& config() const { return cfg_; }
    bool empty() const { return buckets_.empty(); }

    Counts grand_total() const;
    Counts grand_total(DocKind kind) const;

    bool operator==(const CounterStore& o) const {
        return buckets_ == o.buckets_;
    }

private:
    IndexConfig cfg_;
    std::map<std::int64_t, BucketCounters> buckets_;
};

struct IndexRow {
    std::int64_t bucket_start = 0;
    Counts total;
    Counts by_kind[2];
    double s_w = 0, s_t = 0, e_w = 0, e_t = 0;
};

/// One row per bucket, ascending. Empty buckets between the first and last
/// observed bucket are emitted with zero counters.
std::vector<IndexRow> series(const CounterStore& store);

/// max/min of the chosen index over rows where it is finite and positive.
std::optional<double> dynamic_range(const std::vector<IndexRow>& rows, WhichIndex which);

double index_value(const IndexRow& row, WhichIndex which);

/// Series CSV: bucket_start,n_texts,n_tokens,pos_words,neg_words,pos_texts,
/// neg_texts,neutral_texts,s_w,s_t,e_w,e_t; by_kind appends post_*/comment_*
/// column groups. Floating-point cells use shortest round-trip formatting.
void write_series_csv(std::ostream& out, const std::vector<IndexRow>& rows,
                      const IndexConfig& cfg, bool by_kind);

}  // namespace sentindex
