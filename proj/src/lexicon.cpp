#include "sentindex/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "sentindex/unicode.hpp"

namespace sentindex {

namespace {

bool parse_polarity(std::string_view field, int& value) {
    if (field.empty()) return false;
    std::size_t pos = 0;
    int sign = 1;
    if (field[0] == '+' || field[0] == '-') {
        sign = field[0] == '-' ? -1 : 1;
        pos = 1;
    }
    int digits = 0;
    auto [ptr, ec] = std::from_chars(field.data() + pos, field.data() + field.size(), digits);
    if (ec != std::errc{} || ptr != field.data() + field.size()) return false;
    value = sign * digits;
    return value == 1 || value == -1;
}

bool single_token(std::string_view term) {
    std::size_t i = 0;
    while (i < term.size()) {
        if (uni::is_space(uni::decode(term, i))) return false;
    }
    return true;
}

}  // namespace

SentimentLexicon SentimentLexicon::from_sets(TermSet positive, TermSet negative) {
    for (const auto& term : positive) {
        if (negative.contains(term)) {
            throw std::invalid_argument("term '" + term + "' present in both polarities");
        }
    }
    SentimentLexicon lex;
    lex.positive_ = std::move(positive);
    lex.negative_ = std::move(negative);
    return lex;
}

SentimentLexicon SentimentLexicon::load(std::istream& in, const Normalizer& norm,
                                        std::string_view source_name) {
    SentimentLexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw LoadError(source_name, line_no, "expected 2 tab-separated fields");
        }
        std::string_view raw_term = std::string_view(line).substr(0, tab);
        std::string_view pol_field = std::string_view(line).substr(tab + 1);

        int polarity = 0;
        if (!parse_polarity(pol_field, polarity)) {
            throw LoadError(source_name, line_no, "polarity must be +1 or -1, got '" +
                                                      std::string(pol_field) + "'");
        }
        if (raw_term.empty() || !single_token(raw_term)) {
            throw LoadError(source_name, line_no, "term must be a single non-empty token");
        }
        std::string term = norm.normalize(raw_term);
        if (term.empty()) {
            throw LoadError(source_name, line_no,
                            "term '" + std::string(raw_term) + "' normalizes to nothing");
        }

        auto& mine = polarity > 0 ? lex.positive_ : lex.negative_;
        const auto& other = polarity > 0 ? lex.negative_ : lex.positive_;
        if (other.contains(term)) {
            throw LoadError(source_name, line_no,
                            "term '" + term + "' already listed with the opposite polarity");
        }
        mine.insert(std::move(term));
    }
    return lex;
}

SentimentLexicon SentimentLexicon::load_file(const std::string& path, const Normalizer& norm) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open lexicon file '" + path + "'");
    return load(in, norm, path);
}

void SentimentLexicon::write_tsv(std::ostream& out) const {
    auto dump = [&out](const TermSet& set, const char* polarity) {
        std::vector<std::string_view> terms(set.begin(), set.end());
        std::sort(terms.begin(), terms.end());
        for (auto term : terms) {
            out << term << '\t' << polarity << '\n';
        }
    };
    dump(positive_, "+1");
    dump(negative_, "-1");
}

SentimentLexicon SentimentLexicon::swapped() const {
    SentimentLexicon lex;
    lex.positive_ = negative_;
    lex.negative_ = positive_;
    return lex;
}

}  // namespace sentindex
