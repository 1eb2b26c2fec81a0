#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentindex/classifier.hpp"
#include "sentindex/common.hpp"
#include "sentindex/lexicon.hpp"
#include "sentindex/textproc.hpp"

namespace sentindex {

struct ConfusionMatrix {
    std::int64_t cells[3][3] = {};  // [actual][predicted], label_index order
    std::int64_t total = 0;

    void add(int actual, int predicted) {
        cells[label_index(actual)][label_index(predicted)] += 1;
        total += 1;
    }
};

/// Builds the matrix from (actual, predicted) pairs; throws
/// std::invalid_argument naming the offending record on a label outside
/// {-1, 0, +1}.
ConfusionMatrix confusion(std::span<const std::pair<int, int>> pairs);

/// Per-class precision/recall/F1 (label_index order) plus unweighted macro
/// means and accuracy. 0/0 ratios are defined as 0; macro_f1 is the mean of
/// the per-class F1 values.
struct EvalReport {
    double precision[3] = {};
    double recall[3] = {};
    double f1[3] = {};
    double macro_p = 0, macro_r = 0, macro_f1 = 0, accuracy = 0;
};

/// Throws std::invalid_argument when the matrix is empty.
EvalReport report(const ConfusionMatrix& m);

struct LabeledDoc {
    int label = 0;
    std::string text;
};

/// `label<TAB>text`, label in {-1, 0, 1}; `#` and blank lines ignored.
std::vector<LabeledDoc> load_labeled_tsv(std::istream& in,
                                         std::string_view source_name = "<dataset>");
std::vector<LabeledDoc> load_labeled_file(const std::string& path);

struct SweepRow {
    double alpha = 0;
    EvalReport report;
    double neutral_fraction = 0;
};

/// Runs classify_dict at every alpha over the dataset, normalizing each
/// document once. Throws std::invalid_argument on an empty dataset or an
/// empty alpha list.
std::vector<SweepRow> alpha_sweep(std::span<const LabeledDoc> dataset,
                                  const SentimentLexicon& lexicon, const Normalizer& norm,
                                  std::span<const double> alphas);

}  // namespace sentindex
