#include "sentindex/nb_model.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <istream>
#include <vector>

namespace sentindex {

namespace {

bool parse_prob(std::string_view field, double& out) {
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc{} && ptr == field.data() + field.size() && std::isfinite(out);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::vector<std::string_view> split_spaces(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start < s.size()) {
        auto sp = s.find(' ', start);
        if (sp == std::string_view::npos) sp = s.size();
        if (sp > start) parts.push_back(s.substr(start, sp - start));
        start = sp + 1;
    }
    return parts;
}

}  // namespace

NbModel NbModel::load(std::istream& in, const Normalizer* norm, double floor,
                      std::string_view source_name) {
    if (!(floor > 0.0) || floor > 1.0) {
        throw std::invalid_argument("NB floor must be in (0,1]");
    }
    NbModel model;
    model.floor = floor;

    std::string line;
    std::size_t line_no = 0;
    bool priors_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        if (line[0] == '#') {
            if (!line.starts_with("#priors\t")) continue;  // plain comment
            if (priors_seen) throw LoadError(source_name, line_no, "duplicate #priors header");
            auto fields = split_tabs(line);
            if (fields.size() != 4) {
                throw LoadError(source_name, line_no, "#priors needs 3 probability columns");
            }
            double sum = 0.0;
            for (int c = 0; c < 3; ++c) {
                double p;
                if (!parse_prob(fields[c + 1], p) || !(p > 0.0) || p > 1.0) {
                    throw LoadError(source_name, line_no, "prior out of (0,1]");
                }
                model.priors[c] = p;
                sum += p;
            }
            if (std::fabs(sum - 1.0) > 1e-6) {
                throw LoadError(source_name, line_no, "priors must sum to 1 within 1e-6");
            }
            for (auto& p : model.priors) p /= sum;
            priors_seen = true;
            continue;
        }

        auto fields = split_tabs(line);
        if (fields.size() != 3 && fields.size() != 4) {
            throw LoadError(source_name, line_no,
                            "expected phrase plus 2 or 3 probability columns");
        }
        auto raw_tokens = split_spaces(fields[0]);
        if (raw_tokens.empty()) {
            throw LoadError(source_name, line_no, "empty phrase");
        }
        std::string phrase;
        for (auto tok : raw_tokens) {
            std::string lemma = norm ? norm->normalize(tok) : std::string(tok);
            if (lemma.empty()) {
                throw LoadError(source_name, line_no,
                                "phrase token '" + std::string(tok) + "' normalizes to nothing");
            }
            if (!phrase.empty()) phrase.push_back(' ');
            phrase += lemma;
        }

        Probs probs{};
        double values[3];
        for (std::size_t f = 1; f < fields.size(); ++f) {
            if (!parse_prob(fields[f], values[f - 1]) || !(values[f - 1] > 0.0) ||
                values[f - 1] > 1.0) {
                throw LoadError(source_name, line_no, "probability out of (0,1]");
            }
        }
        if (fields.size() == 3) {
            // p(w|-1), p(w|+1); the neutral column is served at the floor.
            probs.p[label_index(-1)] = values[0];
            probs.p[label_index(0)] = floor;
            probs.p[label_index(+1)] = values[1];
        } else {
            probs.p[label_index(-1)] = values[0];
            probs.p[label_index(0)] = values[1];
            probs.p[label_index(+1)] = values[2];
        }

        auto [it, inserted] = model.phrases.emplace(std::move(phrase), probs);
        if (!inserted) {
            throw LoadError(source_name, line_no, "duplicate phrase '" + it->first + "'");
        }
        model.max_phrase_tokens =
            std::max(model.max_phrase_tokens, static_cast<int>(raw_tokens.size()));
    }
    return model;
}

NbModel NbModel::load_file(const std::string& path, const Normalizer* norm, double floor) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open NB model file '" + path + "'");
    return load(in, norm, floor, path);
}

}  // namespace sentindex
