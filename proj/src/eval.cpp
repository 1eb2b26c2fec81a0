#include "sentindex/eval.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace sentindex {

ConfusionMatrix confusion(std::span<const std::pair<int, int>> pairs) {
    ConfusionMatrix m;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [actual, predicted] = pairs[i];
        if (!valid_label(actual) || !valid_label(predicted)) {
            throw std::invalid_argument("record " + std::to_string(i) +
                                        ": label outside {-1, 0, +1}");
        }
        m.add(actual, predicted);
    }
    return m;
}

EvalReport report(const ConfusionMatrix& m) {
    if (m.total <= 0) throw std::invalid_argument("empty confusion matrix");

    EvalReport r;
    std::int64_t trace = 0;
    for (int c = 0; c < 3; ++c) {
        std::int64_t col = 0, row = 0;
        for (int k = 0; k < 3; ++k) {
            col += m.cells[k][c];
            row += m.cells[c][k];
        }
        const std::int64_t diag = m.cells[c][c];
        trace += diag;
        r.precision[c] = col > 0 ? static_cast<double>(diag) / static_cast<double>(col) : 0.0;
        r.recall[c] = row > 0 ? static_cast<double>(diag) / static_cast<double>(row) : 0.0;
        const double pr = r.precision[c] + r.recall[c];
        r.f1[c] = pr > 0 ? 2.0 * r.precision[c] * r.recall[c] / pr : 0.0;
    }
    r.macro_p = (r.precision[0] + r.precision[1] + r.precision[2]) / 3.0;
    r.macro_r = (r.recall[0] + r.recall[1] + r.recall[2]) / 3.0;
    r.macro_f1 = (r.f1[0] + r.f1[1] + r.f1[2]) / 3.0;
    r.accuracy = static_cast<double>(trace) / static_cast<double>(m.total);
    return r;
}

std::vector<LabeledDoc> load_labeled_tsv(std::istream& in, std::string_view source_name) {
    std::vector<LabeledDoc> docs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw LoadError(source_name, line_no, "expected label<TAB>text");
        }
        std::string_view field = std::string_view(line).substr(0, tab);
        if (field.starts_with('+') && !field.substr(1).starts_with('-')) field.remove_prefix(1);
        int label = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), label);
        if (ec != std::errc{} || ptr != field.data() + field.size() || !valid_label(label)) {
            throw LoadError(source_name, line_no, "label must be -1, 0 or 1");
        }
        docs.push_back({label, line.substr(tab + 1)});
    }
    return docs;
}

std::vector<LabeledDoc> load_labeled_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open dataset file '" + path + "'");
    return load_labeled_tsv(in, path);
}

std::vector<SweepRow> alpha_sweep(std::span<const LabeledDoc> dataset,
                                  const SentimentLexicon& lexicon, const Normalizer& norm,
                                  std::span<const double> alphas) {
    if (dataset.empty()) throw std::invalid_argument("empty dataset");
    if (alphas.empty()) throw std::invalid_argument("empty alpha list");

    std::vector<TokenMultiset> tokens;
    tokens.reserve(dataset.size());
    for (const auto& doc : dataset) tokens.push_back(normalize_text(doc.text, norm));

    std::vector<SweepRow> rows;
    rows.reserve(alphas.size());
    for (double alpha : alphas) {
        ConfusionMatrix m;
        std::int64_t neutral = 0;
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            Classification cls = classify_dict(tokens[i], lexicon, DictRuleConfig{alpha});
            m.add(dataset[i].label, cls.label);
            if (cls.label == 0) ++neutral;
        }
        rows.push_back({alpha, report(m),
                        static_cast<double>(neutral) / static_cast<double>(dataset.size())});
    }
    return rows;
}

}  // namespace sentindex
