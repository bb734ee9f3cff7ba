#include "trendtrace/keywords.hpp"

#include "trendtrace/errors.hpp"

#include <cctype>
#include <fstream>
#include <vector>

namespace trendtrace {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

char fold_char(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

/// Trim, collapse internal whitespace runs to single spaces, lowercase.
std::string fold(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (is_space(c)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(fold_char(c));
    }
    return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

/// One rewrite step of the plural rules; returns the token unchanged when
/// no rule applies or applying it would empty the token.
std::string singularize_once(std::string_view token,
                             const std::set<std::string>& exceptions) {
    if (token.size() < 2 || token.back() != 's') return std::string(token);
    if (exceptions.count(std::string(token)) > 0) return std::string(token);
    if (ends_with(token, "ies") && token.size() > 3)
        return std::string(token.substr(0, token.size() - 3)) + "y";
    if (token.size() > 2 &&
        (ends_with(token, "ses") || ends_with(token, "xes") || ends_with(token, "zes") ||
         ends_with(token, "ches") || ends_with(token, "shes")))
        return std::string(token.substr(0, token.size() - 2));
    if (ends_with(token, "ss")) return std::string(token);
    return std::string(token.substr(0, token.size() - 1));
}

std::string strip_line(std::string line) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    while (!line.empty() && is_space(line.back())) line.pop_back();
    std::size_t begin = 0;
    while (begin < line.size() && is_space(line[begin])) ++begin;
    return line.substr(begin);
}

} // namespace

std::string singularize(std::string_view token, const std::set<std::string>& exceptions) {
    // Iterated to a fixed point so normalize stays idempotent even for
    // tokens where one pass leaves a new trailing "s" ("buses" -> "bus").
    std::string cur(token);
    for (;;) {
        std::string next = singularize_once(cur, exceptions);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

CanonicalKeyword normalize(std::string_view raw, const Normalizer& n) {
    std::string folded = fold(raw);
    if (folded.empty()) throw EmptyKeywordError();

    const auto last_space = folded.rfind(' ');
    const std::size_t token_begin = last_space == std::string::npos ? 0 : last_space + 1;
    folded.replace(token_begin, std::string::npos,
                   singularize(std::string_view(folded).substr(token_begin),
                               n.plural_exceptions));

    if (const auto it = n.synonyms.find(folded); it != n.synonyms.end()) return it->second;
    return folded;
}

void Normalizer::add_synonym(std::string_view alias, std::string_view canonical) {
    std::string key = fold(alias);
    if (key.empty()) throw ConfigError("empty synonym alias");
    const auto last_space = key.rfind(' ');
    const std::size_t token_begin = last_space == std::string::npos ? 0 : last_space + 1;
    key.replace(token_begin, std::string::npos,
                singularize(std::string_view(key).substr(token_begin), plural_exceptions));
    std::string value = fold(canonical);
    if (value.empty()) throw ConfigError("empty synonym canonical for alias '" + key + "'");
    synonyms[key] = std::move(value);
}

void Normalizer::add_stopword(std::string_view word) {
    const std::string folded = fold(word);
    if (folded.empty()) return;
    if (folded.find(' ') != std::string::npos)
        throw ConfigError("stopword '" + folded + "' contains whitespace");
    stopwords.insert(folded);
}

void Normalizer::validate() const {
    for (const auto& [alias, canonical] : synonyms) {
        if (normalize(canonical, *this) != canonical)
            throw ConfigError("synonym canonical '" + canonical + "' (alias '" + alias +
                              "') is not a fixed point of normalization");
    }
}

Normalizer load_normalizer(const std::filesystem::path& synonym_file,
                           const std::filesystem::path& stopword_file,
                           const std::filesystem::path& exception_file) {
    Normalizer n;

    const auto for_each_line = [](const std::filesystem::path& path, auto&& fn) {
        if (path.empty()) return;
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open '" + path.string() + "'");
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            line = strip_line(std::move(line));
            if (line.empty()) continue;
            fn(line, line_no);
        }
    };

    // Exceptions first: synonym alias keys are singularized against them.
    for_each_line(exception_file, [&](const std::string& line, std::size_t) {
        n.plural_exceptions.insert(fold(line));
    });
    for_each_line(stopword_file,
                  [&](const std::string& line, std::size_t) { n.add_stopword(line); });
    for_each_line(synonym_file, [&](const std::string& line, std::size_t line_no) {
        const auto arrow = line.find("=>");
        if (arrow == std::string::npos)
            throw ConfigError("synonym file line " + std::to_string(line_no) +
                              ": expected 'alias => canonical'");
        n.add_synonym(line.substr(0, arrow), line.substr(arrow + 2));
    });

    n.validate();
    return n;
}

KeywordSet segment_title(std::string_view title, const KeywordSet& vocabulary,
                         const Normalizer& n) {
    // (a) lowercase, punctuation to spaces; hyphens stay token-internal.
    std::string cleaned;
    cleaned.reserve(title.size());
    for (char c : title) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc) || c == '-' || uc >= 0x80)
            cleaned.push_back(fold_char(c));
        else
            cleaned.push_back(' ');
    }

    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < cleaned.size()) {
        while (pos < cleaned.size() && cleaned[pos] == ' ') ++pos;
        std::size_t end = pos;
        while (end < cleaned.size() && cleaned[end] != ' ') ++end;
        if (end > pos) {
            std::string_view tok(cleaned.data() + pos, end - pos);
            while (!tok.empty() && tok.front() == '-') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == '-') tok.remove_suffix(1);
            if (!tok.empty()) tokens.emplace_back(tok);
        }
        pos = end;
    }

    KeywordSet result;
    std::vector<bool> covered(tokens.size(), false);

    // (b) maximal left-to-right vocabulary n-grams, n <= 4.
    std::size_t i = 0;
    while (i < tokens.size()) {
        std::size_t matched = 0;
        std::string matched_keyword;
        const std::size_t max_n = std::min<std::size_t>(4, tokens.size() - i);
        for (std::size_t len = max_n; len >= 1; --len) {
            std::string phrase = tokens[i];
            for (std::size_t j = 1; j < len; ++j) {
                phrase += ' ';
                phrase += tokens[i + j];
            }
            const std::string canonical = normalize(phrase, n);
            if (vocabulary.count(canonical) > 0) {
                matched = len;
                matched_keyword = canonical;
                break;
            }
        }
        if (matched > 0) {
            result.insert(std::move(matched_keyword));
            for (std::size_t j = 0; j < matched; ++j) covered[i + j] = true;
            i += matched;
        } else {
            ++i;
        }
    }

    // (c) remaining single tokens, minus stopwords.
    for (std::size_t t = 0; t < tokens.size(); ++t) {
        if (covered[t] || n.stopwords.count(tokens[t]) > 0) continue;
        result.insert(normalize(tokens[t], n));
    }
    return result;
}

} // namespace trendtrace
