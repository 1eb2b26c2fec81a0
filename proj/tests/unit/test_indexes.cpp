#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "sentindex/indexes.hpp"

using namespace sentindex;
using doctest::Approx;

namespace {

Classification cls(int label, std::int64_t pos, std::int64_t neg, std::int64_t n) {
    Classification c;
    c.label = label;
    c.pos_hits = pos;
    c.neg_hits = neg;
    c.n = n;
    return c;
}

// Random stream of observations, reproducible per seed.
std::vector<std::tuple<std::int64_t, DocKind, Classification>> random_obs(unsigned seed,
                                                                          int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> ts(1614556800, 1614556800 + 10 * 86400 - 1);
    std::uniform_int_distribution<int> lab(-1, 1), hits(0, 4), extra(0, 20), kind(0, 1);
    std::vector<std::tuple<std::int64_t, DocKind, Classification>> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::int64_t p = hits(rng), m = hits(rng);
        std::int64_t n = p + m + extra(rng);
        out.emplace_back(ts(rng), kind(rng) ? DocKind::comment : DocKind::post,
                         cls(lab(rng), p, m, n));
    }
    return out;
}

CounterStore fill(const std::vector<std::tuple<std::int64_t, DocKind, Classification>>& obs,
                  IndexConfig cfg = {}) {
    CounterStore s(cfg);
    for (const auto& [ts, kind, c] : obs) s.observe(ts, kind, c);
    return s;
}

}  // namespace

TEST_CASE("observe accumulates totals and per-kind counters") {
    CounterStore s;
    s.observe(100, DocKind::post, cls(+1, 2, 0, 5));
    s.observe(200, DocKind::comment, cls(-1, 0, 3, 6));
    s.observe(300, DocKind::post, cls(0, 1, 1, 7));

    REQUIRE(s.buckets().size() == 1);
    const Counts& t = s.buckets().begin()->second.total;
    CHECK(t.n_texts == 3);
    CHECK(t.n_tokens == 18);
    CHECK(t.pos_words == 3);
    CHECK(t.neg_words == 4);
    CHECK(t.pos_texts == 1);
    CHECK(t.neg_texts == 1);
    CHECK(t.neutral_texts == 1);

    const Counts& posts = s.buckets().begin()->second.by_kind[kind_index(DocKind::post)];
    CHECK(posts.n_texts == 2);
    CHECK(posts.n_tokens == 12);
    const Counts& comments = s.buckets().begin()->second.by_kind[kind_index(DocKind::comment)];
    CHECK(comments.n_texts == 1);
    CHECK(comments.neg_texts == 1);

    // Kinds partition the totals.
    Counts sum = posts;
    sum.add(comments);
    CHECK(sum == t);
}

TEST_CASE("index formulas at epsilon 1e-6") {
    IndexConfig cfg;
    Counts c;
    c.n_texts = 4;
    c.n_tokens = 15;
    c.pos_words = 3;
    c.neg_words = 3;
    c.pos_texts = 1;
    c.neg_texts = 1;
    c.neutral_texts = 2;
    CHECK(word_sentiment_index(c, cfg) == 1.0);
    CHECK(text_sentiment_index(c, cfg) == 1.0);
    CHECK(word_emotion_index(c, cfg) == Approx((6 + 1e-6) / (15 + 1e-6)).epsilon(1e-15));
    CHECK(text_emotion_index(c, cfg) == Approx((2 + 1e-6) / (4 + 1e-6)).epsilon(1e-15));
}

TEST_CASE("epsilon keeps sparse buckets finite") {
    IndexConfig cfg;
    Counts c;
    c.n_texts = 4;
    c.n_tokens = 28;
    c.pos_words = 2;
    c.pos_texts = 2;
    c.neutral_texts = 2;
    CHECK(word_sentiment_index(c, cfg) == Approx(2000001.0).epsilon(1e-12));
    CHECK(text_sentiment_index(c, cfg) == Approx(2000001.0).epsilon(1e-12));

    // With epsilon zero the same bucket degenerates to IEEE infinities.
    IndexConfig raw;
    raw.epsilon = 0.0;
    CHECK(std::isinf(word_sentiment_index(c, raw)));
    Counts empty;
    CHECK(std::isnan(word_sentiment_index(empty, raw)));
}

TEST_CASE("merge is the monoid operation") {
    auto obs = random_obs(41, 3000);
    CounterStore whole = fill(obs);

    // Identity.
    CounterStore e;
    CounterStore m = whole;
    m.merge(e);
    CHECK(m == whole);
    CounterStore m2;
    m2.merge(whole);
    CHECK(m2 == whole);

    // Split at an arbitrary point: merge(a, b) == whole, both orders.
    for (std::size_t cut : {std::size_t{1}, obs.size() / 3, obs.size() / 2, obs.size() - 1}) {
        auto a_obs = decltype(obs)(obs.begin(), obs.begin() + cut);
        auto b_obs = decltype(obs)(obs.begin() + cut, obs.end());
        CounterStore ab = fill(a_obs);
        ab.merge(fill(b_obs));
        CHECK(ab == whole);
        CounterStore ba = fill(b_obs);
        ba.merge(fill(a_obs));
        CHECK(ba == whole);
    }

    // Associativity over a three-way split.
    std::size_t third = obs.size() / 3;
    using Obs = decltype(obs);
    auto a = fill(Obs(obs.begin(), obs.begin() + third));
    auto b = fill(Obs(obs.begin() + third, obs.begin() + 2 * third));
    auto c = fill(Obs(obs.begin() + 2 * third, obs.end()));
    CounterStore left = a;
    left.merge(b);
    left.merge(c);
    CounterStore bc = b;
    bc.merge(c);
    CounterStore right = a;
    right.merge(bc);
    CHECK(left == right);
    CHECK(left == whole);
}

TEST_CASE("merge rejects mismatched configurations") {
    IndexConfig day_cfg, week_cfg, tz_cfg;
    week_cfg.bucket = BucketGranularity::week;
    tz_cfg.tz_offset_seconds = 3600;
    CounterStore a(day_cfg), b(week_cfg), c(tz_cfg);
    a.observe(0, DocKind::post, cls(0, 0, 0, 1));
    b.observe(0, DocKind::post, cls(0, 0, 0, 1));
    c.observe(0, DocKind::post, cls(0, 0, 0, 1));
    CHECK_THROWS_AS(a.merge(b), std::invalid_argument);
    CHECK_THROWS_AS(a.merge(c), std::invalid_argument);
    // The empty store is the identity: merging it never throws, and merging
    // into it adopts the other configuration.
    CounterStore empty_week(week_cfg);
    CHECK_NOTHROW(a.merge(empty_week));
    CounterStore fresh;
    fresh.merge(b);
    CHECK(fresh == b);
    CHECK(fresh.config().bucket == BucketGranularity::week);
}

TEST_CASE("series emits ascending buckets and fills gaps") {
    CounterStore s;
    s.observe(0, DocKind::post, cls(+1, 1, 0, 2));                 // day 0
    s.observe(3 * 86400 + 10, DocKind::comment, cls(-1, 0, 1, 2)); // day 3
    auto rows = series(s);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].bucket_start == 0);
    CHECK(rows[1].bucket_start == 86400);
    CHECK(rows[2].bucket_start == 2 * 86400);
    CHECK(rows[3].bucket_start == 3 * 86400);
    CHECK(rows[1].total.n_texts == 0);
    CHECK(rows[2].total.n_texts == 0);
    CHECK(rows[0].total.pos_texts == 1);
    CHECK(rows[3].total.neg_texts == 1);
    // Gap rows still get smoothed indexes.
    CHECK(rows[1].s_w == 1.0);
    CHECK(rows[1].e_t == Approx(1e-6 / 1e-6));

    CHECK(series(CounterStore{}).empty());
}

TEST_CASE("series rows are self-consistent") {
    auto s = fill(random_obs(99, 2000));
    auto rows = series(s);
    IndexConfig cfg = s.config();
    Counts grand;
    for (const auto& r : rows) {
        CHECK(r.s_w == word_sentiment_index(r.total, cfg));
        CHECK(r.s_t == text_sentiment_index(r.total, cfg));
        CHECK(r.e_w == word_emotion_index(r.total, cfg));
        CHECK(r.e_t == text_emotion_index(r.total, cfg));
        CHECK(r.total.pos_texts + r.total.neg_texts + r.total.neutral_texts ==
              r.total.n_texts);
        Counts k = r.by_kind[0];
        k.add(r.by_kind[1]);
        CHECK(k == r.total);
        grand.add(r.total);
    }
    CHECK(grand == s.grand_total());
    Counts by_kind_sum = s.grand_total(DocKind::post);
    by_kind_sum.add(s.grand_total(DocKind::comment));
    CHECK(by_kind_sum == grand);
}

TEST_CASE("lexicon swap symmetry at the counter level") {
    // Swapping polarities exchanges pos/neg counters; at epsilon 0 the
    // sentiment indexes invert and the emotion indexes are untouched.
    IndexConfig raw;
    raw.epsilon = 0.0;
    Counts c;
    c.n_texts = 10;
    c.n_tokens = 100;
    c.pos_words = 7;
    c.neg_words = 3;
    c.pos_texts = 5;
    c.neg_texts = 2;
    c.neutral_texts = 3;
    Counts sw = c;
    std::swap(sw.pos_words, sw.neg_words);
    std::swap(sw.pos_texts, sw.neg_texts);

    CHECK(word_sentiment_index(sw, raw) ==
          Approx(1.0 / word_sentiment_index(c, raw)).epsilon(1e-12));
    CHECK(text_sentiment_index(sw, raw) ==
          Approx(1.0 / text_sentiment_index(c, raw)).epsilon(1e-12));
    CHECK(word_emotion_index(sw, raw) == word_emotion_index(c, raw));
    CHECK(text_emotion_index(sw, raw) == text_emotion_index(c, raw));
}

TEST_CASE("corpus duplication fixes every index at epsilon 0") {
    IndexConfig raw;
    raw.epsilon = 0.0;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> v(1, 1000);
    for (int iter = 0; iter < 100; ++iter) {
        Counts c;
        c.pos_words = v(rng);
        c.neg_words = v(rng);
        c.pos_texts = v(rng);
        c.neg_texts = v(rng);
        c.neutral_texts = v(rng);
        c.n_texts = c.pos_texts + c.neg_texts + c.neutral_texts;
        c.n_tokens = c.pos_words + c.neg_words + v(rng);
        Counts dbl = c;
        dbl.add(c);
        CHECK(word_sentiment_index(dbl, raw) == word_sentiment_index(c, raw));
        CHECK(text_sentiment_index(dbl, raw) == text_sentiment_index(c, raw));
        CHECK(word_emotion_index(dbl, raw) == word_emotion_index(c, raw));
        CHECK(text_emotion_index(dbl, raw) == text_emotion_index(c, raw));
    }
}

TEST_CASE("dynamic range is max over min of the finite positive values") {
    CounterStore s;
    s.observe(0, DocKind::post, cls(+1, 4, 1, 10));        // s_w = (4+e)/(1+e)
    s.observe(86400, DocKind::post, cls(-1, 1, 2, 10));    // s_w = (1+e)/(2+e)
    s.observe(2 * 86400, DocKind::post, cls(0, 0, 0, 5));  // s_w = 1
    auto rows = series(s);
    auto r = dynamic_range(rows, WhichIndex::s_w);
    REQUIRE(r.has_value());
    double hi = (4 + 1e-6) / (1 + 1e-6), lo = (1 + 1e-6) / (2 + 1e-6);
    CHECK(*r == Approx(hi / lo).epsilon(1e-12));

    CHECK_FALSE(dynamic_range({}, WhichIndex::s_w).has_value());

    // At epsilon 0 infinite/zero/NaN buckets drop out of the range.
    IndexConfig raw;
    raw.epsilon = 0.0;
    CounterStore z(raw);
    z.observe(0, DocKind::post, cls(+1, 4, 0, 10));  // s_w = inf
    z.observe(86400, DocKind::post, cls(0, 0, 0, 5));  // s_w = NaN? 0/0
    auto zr = dynamic_range(series(z), WhichIndex::s_w);
    CHECK_FALSE(zr.has_value());
}

TEST_CASE("csv writer emits headers, dates and round-trip doubles") {
    CounterStore s;
    s.observe(1614556800 + 3600, DocKind::post, cls(+1, 2, 0, 4));
    s.observe(1614556800 + 7200, DocKind::comment, cls(-1, 0, 2, 3));
    auto rows = series(s);

    std::ostringstream out;
    write_series_csv(out, rows, s.config(), /*by_kind=*/false);
    std::string csv = out.str();
    CHECK(csv.starts_with(
        "bucket_start,n_texts,n_tokens,pos_words,neg_words,pos_texts,neg_texts,"
        "neutral_texts,s_w,s_t,e_w,e_t\n"));
    CHECK(csv.find("2021-03-01,2,7,2,2,1,1,0,") != std::string::npos);

    std::ostringstream wide;
    write_series_csv(wide, rows, s.config(), /*by_kind=*/true);
    CHECK(wide.str().find("post_n_texts") != std::string::npos);
    CHECK(wide.str().find("comment_s_w") != std::string::npos);

    // Deterministic output.
    std::ostringstream again;
    write_series_csv(again, rows, s.config(), false);
    CHECK(again.str() == csv);
}
