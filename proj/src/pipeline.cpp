#include "sentindex/pipeline.hpp"

#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sentindex {

namespace {

void check_options(const PipelineOptions& opt) {
    if (!opt.normalizer) throw std::invalid_argument("pipeline needs a normalizer");
    if (opt.classifier == ClassifierKind::dict && !opt.lexicon) {
        throw std::invalid_argument("dict classifier needs a lexicon");
    }
    if (opt.classifier == ClassifierKind::nb && !opt.nb_model) {
        throw std::invalid_argument("nb classifier needs a model");
    }
}

}  // namespace

Classification classify_document(const Document& doc, const PipelineOptions& opt) {
    TokenMultiset tokens = normalize_text(doc.text, *opt.normalizer);
    if (opt.classifier == ClassifierKind::dict) {
        return classify_dict(tokens, *opt.lexicon, DictRuleConfig{opt.alpha});
    }
    Classification cls = classify_nb(tokens, *opt.nb_model);
    if (opt.lexicon) {
        // Word-level counters stay lexicon-based even when labels come from
        // the NB model.
        DeltaResult d = emotion_delta(tokens, *opt.lexicon);
        cls.pos_hits = d.pos_hits;
        cls.neg_hits = d.neg_hits;
    }
    return cls;
}

PipelineResult run_serial(CorpusReader& reader, const PipelineOptions& opt, const DocSink& sink) {
    check_options(opt);
    CounterStore store(opt.index);
    while (auto doc = reader.next()) {
        Classification cls = classify_document(*doc, opt);
        store.observe(doc->ts, doc->kind, cls);
        if (sink) sink(*doc, cls);
    }
    return {std::move(store), reader.stats()};
}

PipelineResult run_parallel(CorpusReader& reader, const PipelineOptions& opt, int workers,
                            const DocSink& sink) {
    check_options(opt);
    if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
#ifndef _OPENMP
    (void)workers;
    return run_serial(reader, opt, sink);
#else
    const std::size_t chunk_size = std::max<std::size_t>(1024, 512 * workers);
    std::vector<CounterStore> locals(static_cast<std::size_t>(workers), CounterStore(opt.index));
    std::vector<Document> docs;
    std::vector<Classification> results;
    docs.reserve(chunk_size);

    for (;;) {
        docs.clear();
        while (docs.size() < chunk_size) {
            auto doc = reader.next();
            if (!doc) break;
            docs.push_back(std::move(*doc));
        }
        if (docs.empty()) break;
        results.resize(docs.size());

        const auto count = static_cast<std::int64_t>(docs.size());
#pragma omp parallel num_threads(workers)
        {
            CounterStore& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (std::int64_t i = 0; i < count; ++i) {
                results[static_cast<std::size_t>(i)] = classify_document(docs[i], opt);
                local.observe(docs[i].ts, docs[i].kind, results[i]);
            }
        }
        if (sink) {
            for (std::size_t i = 0; i < docs.size(); ++i) sink(docs[i], results[i]);
        }
    }

    CounterStore store(opt.index);
    for (const auto& local : locals) store.merge(local);
    return {std::move(store), reader.stats()};
#endif
}

}  // namespace sentindex
