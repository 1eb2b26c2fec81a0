// Command-line frontend: classify | index | eval over line-delimited corpora.
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sentindex/eval.hpp"
#include "sentindex/pipeline.hpp"

using namespace sentindex;

namespace {

std::string fmt_double(double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string fmt_fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

struct CommonOpts {
    std::string input = "-";
    std::string format = "jsonl";
    std::string normalizer = "lower-trimmed";
    std::string lexicon_path;
    std::string nb_model_path;
    std::string classifier = "dict";
    double alpha = 0.05;
    double nb_floor = NbModel::kDefaultFloor;
    int workers = 1;
};

void add_corpus_options(CLI::App& cmd, CommonOpts& o) {
    cmd.add_option("corpus", o.input, "Corpus file, or - for stdin")->capture_default_str();
    cmd.add_option("--format", o.format, "Corpus format: jsonl or tsv")
        ->check(CLI::IsMember({"jsonl", "tsv"}))
        ->capture_default_str();
    cmd.add_option("--normalizer", o.normalizer,
                   "lower | lower-trimmed | external:<command>")
        ->capture_default_str();
    cmd.add_option("--lexicon", o.lexicon_path, "Sentiment lexicon TSV (term<TAB>±1)");
    cmd.add_option("--nb-model", o.nb_model_path, "Naive Bayes phrase model TSV");
    cmd.add_option("--classifier", o.classifier, "dict or nb")
        ->check(CLI::IsMember({"dict", "nb"}))
        ->capture_default_str();
    cmd.add_option("--alpha", o.alpha, "Neutrality threshold on |delta|")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd.add_option("--nb-floor", o.nb_floor, "Probability floor for absent NB classes")
        ->capture_default_str();
    cmd.add_option("--workers", o.workers, "Parallel classification workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

// Loaded, validated run pieces shared by classify and index.
struct Runtime {
    std::unique_ptr<Normalizer> norm;
    std::optional<SentimentLexicon> lexicon;
    std::optional<NbModel> nb_model;
    PipelineOptions pipeline;
    std::ifstream file;
    CorpusFormat format = CorpusFormat::jsonl;

    std::istream& corpus_stream() { return file.is_open() ? file : std::cin; }
};

Runtime prepare(const CommonOpts& o) {
    Runtime rt;
    rt.norm = make_normalizer(o.normalizer);

    ClassifierKind kind = o.classifier == "nb" ? ClassifierKind::nb : ClassifierKind::dict;
    if (kind == ClassifierKind::dict && o.lexicon_path.empty()) {
        throw std::invalid_argument("--classifier dict requires --lexicon");
    }
    if (kind == ClassifierKind::nb && o.nb_model_path.empty()) {
        throw std::invalid_argument("--classifier nb requires --nb-model");
    }
    if (!o.lexicon_path.empty()) {
        rt.lexicon = SentimentLexicon::load_file(o.lexicon_path, *rt.norm);
    }
    if (!o.nb_model_path.empty()) {
        rt.nb_model = NbModel::load_file(o.nb_model_path, rt.norm.get(), o.nb_floor);
    }

    rt.pipeline.normalizer = rt.norm.get();
    rt.pipeline.lexicon = rt.lexicon ? &*rt.lexicon : nullptr;
    rt.pipeline.nb_model = rt.nb_model ? &*rt.nb_model : nullptr;
    rt.pipeline.classifier = kind;
    rt.pipeline.alpha = o.alpha;

    rt.format = *parse_format_name(o.format);
    if (o.input != "-") {
        rt.file.open(o.input, std::ios::binary);
        if (!rt.file) throw std::runtime_error("cannot open corpus file: " + o.input);
    }
    return rt;
}

void report_skips(const IngestStats& st) {
    if (st.records_skipped == 0) return;
    std::cerr << "skipped " << st.records_skipped << " of " << st.records_read
              << " records";
    if (st.records_filtered > 0) std::cerr << " (" << st.records_filtered << " filtered)";
    std::cerr << "\n";
    for (const auto& [line, reason] : st.first_error_samples) {
        std::cerr << "  line " << line << ": " << reason << "\n";
    }
}

PipelineResult run(Runtime& rt, CorpusReader& reader, int workers, const DocSink& sink) {
    if (workers <= 1) return run_serial(reader, rt.pipeline, sink);
    return run_parallel(reader, rt.pipeline, workers, sink);
}

int cmd_classify(const CommonOpts& o) {
    Runtime rt = prepare(o);
    CorpusReader reader(rt.corpus_stream(), rt.format);

    std::string line;
    auto sink = [&](const Document& doc, const Classification& c) {
        line.clear();
        line += doc.id;
        line += '\t';
        line += std::to_string(c.label);
        line += '\t';
        line += c.delta ? fmt_double(*c.delta) : "nan";
        line += '\t';
        line += std::to_string(c.pos_hits);
        line += '\t';
        line += std::to_string(c.neg_hits);
        line += '\t';
        line += std::to_string(c.n);
        line += '\n';
        std::cout << line;
    };
    PipelineResult res = run(rt, reader, o.workers, sink);
    report_skips(res.stats);
    if (res.stats.records_ok == 0) {
        std::cerr << "error: no readable documents in the corpus\n";
        return 1;
    }
    return 0;
}

// One summary line: label, posts/comments/combined cells.
void summary_row(std::ostream& out, const std::string& name, const std::string& posts,
                 const std::string& comments, const std::string& combined) {
    out << name;
    for (std::size_t i = name.size(); i < 28; ++i) out << ' ';
    auto cell = [&](const std::string& v) {
        for (std::size_t i = v.size(); i < 12; ++i) out << ' ';
        out << v;
    };
    cell(posts);
    cell(comments);
    cell(combined);
    out << '\n';
}

double pct(std::int64_t part, std::int64_t whole) {
    return whole ? 100.0 * static_cast<double>(part) / static_cast<double>(whole) : 0.0;
}

void print_summary(std::ostream& out, const CounterStore& store,
                   const std::vector<IndexRow>& rows) {
    const IndexConfig& cfg = store.config();
    const Counts posts = store.grand_total(DocKind::post);
    const Counts comments = store.grand_total(DocKind::comment);
    const Counts all = store.grand_total();

    auto pc = [&](auto field) {
        return std::array<std::string, 3>{
            fmt_fixed(field(posts), 2), fmt_fixed(field(comments), 2),
            fmt_fixed(field(all), 2)};
    };
    auto ix = [&](double (*f)(const Counts&, const IndexConfig&)) {
        return std::array<std::string, 3>{fmt_fixed(f(posts, cfg), 3),
                                          fmt_fixed(f(comments, cfg), 3),
                                          fmt_fixed(f(all, cfg), 3)};
    };

    summary_row(out, "", "posts", "comments", "combined");
    auto posw = pc([](const Counts& c) { return pct(c.pos_words, c.n_tokens); });
    summary_row(out, "positive words, %", posw[0], posw[1], posw[2]);
    auto negw = pc([](const Counts& c) { return pct(c.neg_words, c.n_tokens); });
    summary_row(out, "negative words, %", negw[0], negw[1], negw[2]);
    auto ew = ix(word_emotion_index);
    summary_row(out, "word emotion index e_w", ew[0], ew[1], ew[2]);
    auto sw = ix(word_sentiment_index);
    summary_row(out, "word sentiment index s_w", sw[0], sw[1], sw[2]);
    auto post = pc([](const Counts& c) { return pct(c.pos_texts, c.n_texts); });
    summary_row(out, "positive texts, %", post[0], post[1], post[2]);
    auto negt = pc([](const Counts& c) { return pct(c.neg_texts, c.n_texts); });
    summary_row(out, "negative texts, %", negt[0], negt[1], negt[2]);
    auto et = ix(text_emotion_index);
    summary_row(out, "text emotion index e_t", et[0], et[1], et[2]);
    auto st = ix(text_sentiment_index);
    summary_row(out, "text sentiment index s_t", st[0], st[1], st[2]);

    out << "\ndynamic range over " << rows.size() << " " << bucket_name(cfg.bucket)
        << " buckets:";
    const std::pair<const char*, WhichIndex> which[] = {{"s_w", WhichIndex::s_w},
                                                        {"s_t", WhichIndex::s_t},
                                                        {"e_w", WhichIndex::e_w},
                                                        {"e_t", WhichIndex::e_t}};
    for (auto [name, w] : which) {
        auto r = dynamic_range(rows, w);
        out << "  " << name << "=" << (r ? fmt_fixed(*r, 3) : "n/a");
    }
    out << "\n";
}

int cmd_index(const CommonOpts& o, const std::string& epsilon_s, const std::string& bucket_s,
              const std::string& tz_s, bool by_kind, const std::string& out_path) {
    Runtime rt = prepare(o);

    IndexConfig& cfg = rt.pipeline.index;
    double eps = 0;
    auto [p, ec] = std::from_chars(epsilon_s.data(), epsilon_s.data() + epsilon_s.size(), eps);
    if (ec != std::errc{} || p != epsilon_s.data() + epsilon_s.size() || eps < 0 ||
        !std::isfinite(eps)) {
        throw std::invalid_argument("--epsilon must be a finite number >= 0");
    }
    cfg.epsilon = eps;
    auto bucket = parse_bucket_name(bucket_s);
    if (!bucket) throw std::invalid_argument("--bucket must be day, week or month");
    cfg.bucket = *bucket;
    auto tz = parse_tz_offset(tz_s);
    if (!tz) throw std::invalid_argument("--tz must be Z or ±HH:MM");
    cfg.tz_offset_seconds = *tz;

    CorpusReader reader(rt.corpus_stream(), rt.format);
    PipelineResult res = run(rt, reader, o.workers, {});
    report_skips(res.stats);
    if (res.stats.records_ok == 0) {
        std::cerr << "error: no readable documents in the corpus\n";
        return 1;
    }

    auto rows = series(res.store);
    const bool csv_to_stdout = out_path == "-";
    if (csv_to_stdout) {
        write_series_csv(std::cout, rows, cfg, by_kind);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        write_series_csv(out, rows, cfg, by_kind);
    }

    // The human summary goes wherever the CSV is not.
    print_summary(csv_to_stdout ? std::cerr : std::cout, res.store, rows);
    return 0;
}

int cmd_eval(const CommonOpts& o, const std::string& dataset_path, const std::string& sweep,
             const std::string& out_path) {
    if (o.lexicon_path.empty()) throw std::invalid_argument("eval requires --lexicon");
    auto norm = make_normalizer(o.normalizer);
    auto lexicon = SentimentLexicon::load_file(o.lexicon_path, *norm);

    std::vector<LabeledDoc> dataset;
    if (dataset_path == "-") {
        dataset = load_labeled_tsv(std::cin, "<stdin>");
    } else {
        dataset = load_labeled_file(dataset_path);
    }

    std::vector<double> alphas;
    if (sweep.empty()) {
        alphas.push_back(o.alpha);
    } else {
        std::stringstream ss(sweep);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            double a = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), a);
            if (ec != std::errc{} || p != tok.data() + tok.size() || a < 0 || a > 1) {
                throw std::invalid_argument("--sweep expects comma-separated alphas in [0,1]");
            }
            alphas.push_back(a);
        }
        if (alphas.empty()) throw std::invalid_argument("--sweep list is empty");
    }

    auto rows = alpha_sweep(dataset, lexicon, *norm, alphas);

    const bool sweeping = !sweep.empty();
    std::ostringstream table;
    table << "alpha\tMacro_P\tMacro_R\tMacro_F1\tAccuracy\tP_1\tP_0\tP_-1\tR_1\tR_0\tR_-1";
    if (sweeping) table << "\tneutral_fraction";
    table << "\n";
    for (const auto& row : rows) {
        const EvalReport& r = row.report;
        table << fmt_double(row.alpha);
        for (double v : {r.macro_p, r.macro_r, r.macro_f1, r.accuracy,
                         r.precision[label_index(+1)], r.precision[label_index(0)],
                         r.precision[label_index(-1)], r.recall[label_index(+1)],
                         r.recall[label_index(0)], r.recall[label_index(-1)]}) {
            table << '\t' << fmt_fixed(v, 3);
        }
        if (sweeping) table << '\t' << fmt_double(row.neutral_fraction);
        table << "\n";
    }

    std::cout << table.str();
    if (!out_path.empty() && out_path != "-") {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        std::string csv = table.str();
        for (char& ch : csv)
            if (ch == '\t') ch = ',';
        out << csv;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"Corpus sentiment index toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read defaults from an INI file");

    CommonOpts classify_o, index_o, eval_o;

    CLI::App* classify = app.add_subcommand(
        "classify", "Per-document labels: id, label, delta, pos_hits, neg_hits, n");
    add_corpus_options(*classify, classify_o);

    CLI::App* index = app.add_subcommand(
        "index", "Per-bucket sentiment/emotion index series CSV plus a summary");
    add_corpus_options(*index, index_o);
    std::string epsilon = "1e-6", bucket = "day", tz = "Z", out_path = "-";
    bool by_kind = false;
    index->add_option("--epsilon", epsilon, "Smoothing constant")->capture_default_str();
    index->add_option("--bucket", bucket, "day, week or month")->capture_default_str();
    index->add_option("--tz", tz, "Bucket alignment offset, Z or ±HH:MM")
        ->capture_default_str();
    index->add_flag("--by-kind", by_kind, "Add post_*/comment_* column groups");
    index->add_option("--out", out_path, "CSV destination, - for stdout")
        ->capture_default_str();

    CLI::App* eval = app.add_subcommand("eval", "Classifier metrics on a labeled TSV");
    std::string dataset = "-", sweep, eval_out;
    eval->add_option("dataset", dataset, "label<TAB>text file, - for stdin")
        ->capture_default_str();
    eval->add_option("--lexicon", eval_o.lexicon_path, "Sentiment lexicon TSV")->required();
    eval->add_option("--normalizer", eval_o.normalizer,
                     "lower | lower-trimmed | external:<command>")
        ->capture_default_str();
    eval->add_option("--alpha", eval_o.alpha, "Neutrality threshold")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    eval->add_option("--sweep", sweep, "Comma-separated alpha list, one report row each");
    eval->add_option("--out", eval_out, "Also write the table as CSV to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(classify_o);
        if (index->parsed()) {
            return cmd_index(index_o, epsilon, bucket, tz, by_kind, out_path);
        }
        return cmd_eval(eval_o, dataset, sweep, eval_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
