#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "sentindex/ingest.hpp"
#include "sentindex/timeutil.hpp"

using namespace sentindex;

TEST_CASE("jsonl records parse with integer or iso timestamps") {
    std::istringstream in(
        R"({"id":"a","ts":1614556800,"kind":"post","text":"хороший день"})"
        "\n"
        R"({"id":"b","ts":"2021-03-01T12:00:00Z","kind":"comment","text":"плохо"})"
        "\n"
        R"({"id":"c","ts":"2021-03-02","text":"без типа","extra":42})"
        "\n");
    CorpusReader r(in, CorpusFormat::jsonl);

    auto a = r.next();
    REQUIRE(a);
    CHECK(a->id == "a");
    CHECK(a->ts == 1614556800);
    CHECK(a->kind == DocKind::post);
    CHECK(a->text == "хороший день");

    auto b = r.next();
    REQUIRE(b);
    CHECK(b->ts == 1614556800 + 12 * 3600);
    CHECK(b->kind == DocKind::comment);

    auto c = r.next();  // missing kind defaults to post; extra keys ignored
    REQUIRE(c);
    CHECK(c->kind == DocKind::post);

    CHECK_FALSE(r.next());
    CHECK(r.stats().records_read == 3);
    CHECK(r.stats().records_ok == 3);
    CHECK(r.stats().records_skipped == 0);
}

TEST_CASE("malformed jsonl lines are skipped and counted with samples") {
    std::istringstream in(
        "not json\n"
        R"({"id":"x","ts":"???","text":"bad ts"})"
        "\n"
        R"({"id":"y","text":"no ts"})"
        "\n"
        R"({"id":7,"ts":0,"text":"bad id"})"
        "\n"
        R"({"id":"z","ts":0,"kind":"page","text":"bad kind"})"
        "\n"
        R"(["array"])"
        "\n"
        R"({"id":"ok","ts":0,"text":"fine"})"
        "\n");
    CorpusReader r(in, CorpusFormat::jsonl);
    std::vector<Document> docs;
    while (auto d = r.next()) docs.push_back(*d);
    REQUIRE(docs.size() == 1);
    CHECK(docs[0].id == "ok");
    CHECK(r.stats().records_read == 7);
    CHECK(r.stats().records_ok == 1);
    CHECK(r.stats().records_skipped == 6);
    CHECK(r.stats().records_filtered == 0);
    REQUIRE(r.stats().first_error_samples.size() == 6);
    CHECK(r.stats().first_error_samples[0].first == 1);

    // ok + skipped always equals read.
    CHECK(r.stats().records_ok + r.stats().records_skipped == r.stats().records_read);
}

TEST_CASE("blank lines are ignored, crlf is tolerated") {
    std::istringstream in(
        "\n"
        "{\"id\":\"a\",\"ts\":0,\"text\":\"x\"}\r\n"
        "\n"
        "{\"id\":\"b\",\"ts\":1,\"text\":\"y\"}\n"
        "\n");
    CorpusReader r(in, CorpusFormat::jsonl);
    int n = 0;
    while (auto d = r.next()) {
        CHECK(d->text.find('\r') == std::string::npos);
        ++n;
    }
    CHECK(n == 2);
    CHECK(r.stats().records_read == 2);
}

TEST_CASE("tsv corpus format") {
    std::istringstream in(
        "1614556800\tpost\tхороший день\n"
        "2021-03-01T12:00\tcomment\tтекст с\tтабом\n"
        "bad\tpost\tx\n"
        "1614556800\tpage\tx\n"
        "1614556800\t\tдефолтный вид\n");
    CorpusReader r(in, CorpusFormat::tsv);
    std::vector<Document> docs;
    while (auto d = r.next()) docs.push_back(*d);
    REQUIRE(docs.size() == 3);
    CHECK(docs[0].ts == 1614556800);
    CHECK(docs[0].kind == DocKind::post);
    CHECK(docs[1].kind == DocKind::comment);
    CHECK(docs[1].text == "текст с\tтабом");
    CHECK(docs[2].kind == DocKind::post);  // empty kind defaults
    CHECK(docs[2].text == "дефолтный вид");
    CHECK(r.stats().records_skipped == 2);
    // Synthesized ids are the line numbers.
    CHECK(docs[0].id == "1");
    CHECK(docs[1].id == "2");
}

TEST_CASE("documents come back in file order") {
    std::ostringstream corpus;
    for (int i = 0; i < 100; ++i)
        corpus << "{\"id\":\"d" << i << "\",\"ts\":" << (1000 - i) << ",\"text\":\"t\"}\n";
    std::istringstream in(corpus.str());
    CorpusReader r(in, CorpusFormat::jsonl);
    int i = 0;
    while (auto d = r.next()) {
        CHECK(d->id == "d" + std::to_string(i));
        ++i;
    }
    CHECK(i == 100);
}

TEST_CASE("filter rejections count as filtered and skipped") {
    std::istringstream in(
        "{\"id\":\"a\",\"ts\":0,\"kind\":\"post\",\"text\":\"x\"}\n"
        "{\"id\":\"b\",\"ts\":1,\"kind\":\"comment\",\"text\":\"y\"}\n"
        "{\"id\":\"c\",\"ts\":2,\"kind\":\"post\",\"text\":\"z\"}\n"
        "oops\n");
    CorpusReader r(in, CorpusFormat::jsonl,
                   [](const Document& d) { return d.kind == DocKind::post; });
    std::vector<Document> docs;
    while (auto d = r.next()) docs.push_back(*d);
    REQUIRE(docs.size() == 2);
    CHECK(r.stats().records_read == 4);
    CHECK(r.stats().records_ok == 2);
    CHECK(r.stats().records_skipped == 2);   // 1 malformed + 1 filtered
    CHECK(r.stats().records_filtered == 1);
    CHECK(r.stats().records_ok + r.stats().records_skipped == r.stats().records_read);
}

TEST_CASE("error samples cap at ten") {
    std::ostringstream corpus;
    for (int i = 0; i < 25; ++i) corpus << "junk line\n";
    std::istringstream in(corpus.str());
    CorpusReader r(in, CorpusFormat::jsonl);
    while (r.next()) {
    }
    CHECK(r.stats().records_skipped == 25);
    CHECK(r.stats().first_error_samples.size() == 10);
}

TEST_CASE("write_jsonl round-trips through the reader") {
    Document d;
    d.id = "id-1";
    d.ts = 1614556800;
    d.kind = DocKind::comment;
    d.text = "текст с \"кавычками\" и \\ слэшем";
    std::ostringstream out;
    write_jsonl(out, d);

    std::istringstream in(out.str());
    CorpusReader r(in, CorpusFormat::jsonl);
    auto back = r.next();
    REQUIRE(back);
    CHECK(back->id == d.id);
    CHECK(back->ts == d.ts);
    CHECK(back->kind == d.kind);
    CHECK(back->text == d.text);
}

TEST_CASE("reader streams with constant memory") {
    // A generating streambuf produces ~64 MB of records without ever holding
    // them; peak RSS growth must stay far below the stream size.
    struct GenBuf : std::streambuf {
        std::string chunk;
        long long produced = 0, limit = 64LL << 20;
        int counter = 0;
        int underflow() override {
            if (produced >= limit) return traits_type::eof();
            chunk.clear();
            for (int i = 0; i < 256; ++i) {
                chunk += "{\"id\":\"d";
                chunk += std::to_string(counter);
                chunk += "\",\"ts\":";
                chunk += std::to_string(counter % 1000000);
                chunk += ",\"text\":\"слово слово слово слово слово\"}\n";
                ++counter;
            }
            produced += static_cast<long long>(chunk.size());
            setg(chunk.data(), chunk.data(), chunk.data() + chunk.size());
            return traits_type::to_int_type(chunk[0]);
        }
    };

    auto rss_kb = [] {
        std::ifstream st("/proc/self/status");
        std::string line;
        while (std::getline(st, line)) {
            if (line.rfind("VmRSS:", 0) == 0) return std::stol(line.substr(6));
        }
        return -1L;
    };

    long before = rss_kb();
    GenBuf buf;
    std::istream in(&buf);
    CorpusReader r(in, CorpusFormat::jsonl);
    long long n = 0;
    while (auto d = r.next()) ++n;
    long after = rss_kb();
    CHECK(n > 500000);
    CHECK(r.stats().records_skipped == 0);
    if (before > 0 && after > 0) {
        CHECK(after - before < 32 * 1024);  // well under the 64 MB streamed
    }
}
