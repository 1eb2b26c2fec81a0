#include "sentindex/textproc.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <system_error>

#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include "sentindex/unicode.hpp"

namespace sentindex {

namespace {

bool has_letter(std::string_view token) {
    std::size_t i = 0;
    while (i < token.size()) {
        if (uni::is_letter(uni::decode(token, i))) return true;
    }
    return false;
}

bool is_url(std::string_view token) {
    return token.starts_with("http://") || token.starts_with("https://");
}

// Truncate at the first whitespace so a misbehaving external tool cannot
// smuggle multi-field output into a lemma.
std::string_view first_field(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t start = i;
        if (uni::is_space(uni::decode(s, i))) return s.substr(0, start);
    }
    return s;
}

class LowerNormalizer final : public Normalizer {
public:
    std::string name() const override { return "lower"; }
    std::string normalize(std::string_view token) const override {
        return uni::lower_copy(token);
    }
};

class LowerTrimmedNormalizer final : public Normalizer {
public:
    std::string name() const override { return "lower-trimmed"; }
    std::string normalize(std::string_view token) const override {
        // Strip leading/trailing non-letter code points, then lowercase.
        std::size_t begin = 0, end = token.size();
        std::size_t i = 0;
        std::size_t last_letter_end = 0;
        bool seen_letter = false;
        while (i < token.size()) {
            std::size_t start = i;
            char32_t cp = uni::decode(token, i);
            if (uni::is_letter(cp)) {
                if (!seen_letter) begin = start;
                seen_letter = true;
                last_letter_end = i;
            }
        }
        if (!seen_letter) return {};
        end = last_letter_end;
        return uni::lower_copy(token.substr(begin, end - begin));
    }
};

// Runs a user-supplied lemmatizer as a child process and round-trips one
// token per line. The pipe pair is created once; a mutex serializes calls
// since the protocol is stateful.
class ExternalNormalizer final : public Normalizer {
public:
    explicit ExternalNormalizer(std::string command) : command_(std::move(command)) {
        int to_child[2], from_child[2];
        if (pipe(to_child) != 0 || pipe(from_child) != 0) {
            throw std::system_error(errno, std::generic_category(), "pipe");
        }
        pid_ = fork();
        if (pid_ < 0) throw std::system_error(errno, std::generic_category(), "fork");
        if (pid_ == 0) {
            dup2(to_child[0], STDIN_FILENO);
            dup2(from_child[1], STDOUT_FILENO);
            close(to_child[0]);
            close(to_child[1]);
            close(from_child[0]);
            close(from_child[1]);
            execl("/bin/sh", "sh", "-c", command_.c_str(), (char*)nullptr);
            _exit(127);
        }
        close(to_child[0]);
        close(from_child[1]);
        in_ = fdopen(from_child[0], "r");
        out_ = fdopen(to_child[1], "w");
        if (!in_ || !out_) throw std::runtime_error("external normalizer: fdopen failed");
    }

    ~ExternalNormalizer() override {
        if (out_) fclose(out_);
        if (in_) fclose(in_);
        if (pid_ > 0) waitpid(pid_, nullptr, 0);
    }

    std::string name() const override { return "external:" + command_; }

    std::string normalize(std::string_view token) const override {
        std::lock_guard<std::mutex> lock(mu_);
        fwrite(token.data(), 1, token.size(), out_);
        fputc('\n', out_);
        fflush(out_);
        std::string line;
        int c;
        while ((c = fgetc(in_)) != EOF && c != '\n') line.push_back(static_cast<char>(c));
        if (c == EOF && line.empty()) {
            throw std::runtime_error("external normalizer '" + command_ + "' closed its output");
        }
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return std::string(first_field(line));
    }

private:
    std::string command_;
    pid_t pid_ = -1;
    FILE* in_ = nullptr;
    FILE* out_ = nullptr;
    mutable std::mutex mu_;
};

}  // namespace

std::unique_ptr<Normalizer> make_normalizer(const std::string& name) {
    if (name == "lower") return std::make_unique<LowerNormalizer>();
    if (name == "lower-trimmed") return std::make_unique<LowerTrimmedNormalizer>();
    if (name.starts_with("external:")) {
        std::string cmd = name.substr(std::strlen("external:"));
        if (cmd.empty()) throw std::invalid_argument("external normalizer needs a command");
        return std::make_unique<ExternalNormalizer>(std::move(cmd));
    }
    throw std::invalid_argument("unknown normalizer '" + name +
                                "' (expected lower, lower-trimmed or external:<command>)");
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    std::size_t token_start = 0;
    bool in_token = false;
    auto flush = [&](std::size_t end) {
        if (!in_token) return;
        std::string_view tok = text.substr(token_start, end - token_start);
        in_token = false;
        if (is_url(tok) || !has_letter(tok)) return;
        tokens.emplace_back(tok);
    };
    while (i < text.size()) {
        std::size_t start = i;
        char32_t cp = uni::decode(text, i);
        if (uni::is_space(cp)) {
            flush(start);
        } else if (!in_token) {
            in_token = true;
            token_start = start;
        }
    }
    flush(text.size());
    return tokens;
}

TokenMultiset normalize_text(std::string_view text, const Normalizer& norm) {
    TokenMultiset out;
    for (const auto& token : tokenize(text)) {
        std::string lemma = norm.normalize(token);
        std::string_view clean = first_field(lemma);
        if (clean.empty()) continue;
        if (clean.size() == lemma.size()) {
            out.lemmas.push_back(std::move(lemma));
        } else {
            out.lemmas.emplace_back(clean);
        }
    }
    return out;
}

}  // namespace sentindex
