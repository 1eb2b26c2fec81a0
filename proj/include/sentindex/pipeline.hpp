#pragma once

#include <functional>

#include "sentindex/classifier.hpp"
#include "sentindex/indexes.hpp"
#include "sentindex/ingest.hpp"

namespace sentindex {

struct PipelineOptions {
    const Normalizer* normalizer = nullptr;        // required
    const SentimentLexicon* lexicon = nullptr;     // required for dict and for word counters
    const NbModel* nb_model = nullptr;             // required for ClassifierKind::nb
    ClassifierKind classifier = ClassifierKind::dict;
    double alpha = 0.05;
    IndexConfig index;
};

struct PipelineResult {
    CounterStore store;
    IngestStats stats;
};

/// Called once per document in corpus order.
using DocSink = std::function<void(const Document&, const Classification&)>;

Classification classify_document(const Document& doc, const PipelineOptions& opt);

/// Reference implementation: one thread, one store, documents in order.
PipelineResult run_serial(CorpusReader& reader, const PipelineOptions& opt,
                          const DocSink& sink = {});

/// OpenMP implementation. Documents are read in chunks, classified in
/// parallel into per-worker stores, and merged at the end; the sink still
/// sees documents in corpus order. Counters are exactly equal to the
/// serial run for any worker count. Falls back to the serial path when
/// built without OpenMP.
PipelineResult run_parallel(CorpusReader& reader, const PipelineOptions& opt, int workers,
                            const DocSink& sink = {});

}  // namespace sentindex
