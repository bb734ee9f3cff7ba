#include "trendtrace/corpus.hpp"

#include "trendtrace/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace trendtrace {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    for (;;) {
        const auto end = s.find(sep, begin);
        parts.emplace_back(trim(s.substr(begin, end - begin)));
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    return parts;
}

/// ";"-separated list cell; blank segments are dropped.
std::vector<std::string> split_list(std::string_view cell) {
    std::vector<std::string> out;
    for (auto& part : split(cell, ';')) {
        if (!part.empty()) out.push_back(std::move(part));
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

constexpr int kFirstIndexedYear = 1978; // journal volume 1, issue 1

const char* kHeader = "DOI\tTI\tAU\tPY\tDE\tID\tSRC";

} // namespace

std::string normalize_doi(std::string_view raw) {
    std::string_view s = trim(raw);
    for (std::string_view prefix : {"https://doi.org/", "http://doi.org/"}) {
        if (s.size() >= prefix.size()) {
            bool match = true;
            for (std::size_t i = 0; i < prefix.size(); ++i) {
                if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) {
                    match = false;
                    break;
                }
            }
            if (match) {
                s.remove_prefix(prefix.size());
                break;
            }
        }
    }
    s = trim(s);
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

KeywordSet resolve_keywords(const ArticleRecord& record, const Normalizer& normalizer,
                            const KeywordSet& vocabulary) {
    KeywordSet out;
    if (!record.author_keywords.empty() || !record.database_keywords.empty()) {
        for (const auto* list : {&record.author_keywords, &record.database_keywords}) {
            for (const auto& raw : *list) {
                if (trim(raw).empty()) continue;
                out.insert(normalize(raw, normalizer));
            }
        }
        return out;
    }
    if (trim(record.title).empty()) return out;
    return segment_title(record.title, vocabulary, normalizer);
}

const ArticleRecord* Corpus::find(const std::string& doi) const {
    const auto it = records_.find(doi);
    return it == records_.end() ? nullptr : &it->second;
}

const KeywordSet& Corpus::keywords_of(const std::string& doi) const {
    static const KeywordSet empty;
    const auto it = record_keywords_.find(doi);
    return it == record_keywords_.end() ? empty : it->second;
}

std::size_t Corpus::papers_with_keyword(const CanonicalKeyword& k) const {
    const auto it = keyword_index_.find(k);
    return it == keyword_index_.end() ? 0 : it->second.size();
}

std::optional<int> Corpus::first_year(const CanonicalKeyword& k) const {
    const auto it = vocabulary_.find(k);
    if (it == vocabulary_.end()) return std::nullopt;
    return it->second;
}

Corpus load_corpus(std::istream& in, const Normalizer& normalizer) {
    Corpus corpus;
    std::string line;
    std::size_t row = 0;

    if (!std::getline(in, line)) throw MalformedRowError(0, "empty input, header expected");

    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const auto cells = split(line, '\t');
        if (cells.size() != 7)
            throw MalformedRowError(row, "expected 7 tab-separated columns, found " +
                                             std::to_string(cells.size()));

        ArticleRecord rec;
        rec.doi = normalize_doi(cells[0]);
        if (rec.doi.empty()) throw MissingDoiError(row);
        rec.title = cells[1];
        rec.authors = split_list(cells[2]);

        try {
            std::size_t used = 0;
            rec.year = std::stoi(cells[3], &used);
            if (used != cells[3].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw MalformedRowError(row, "unparseable year '" + cells[3] + "'");
        }

        rec.author_keywords = split_list(cells[4]);
        rec.database_keywords = split_list(cells[5]);

        if (cells[6] == "wos")
            rec.source = SourceClass::Indexed;
        else if (cells[6] == "onlinefirst")
            rec.source = SourceClass::OnlineFirst;
        else
            throw MalformedRowError(row, "unknown source class '" + cells[6] + "'");

        if (rec.source == SourceClass::Indexed && rec.year < kFirstIndexedYear)
            throw MalformedRowError(row, "indexed record year " + std::to_string(rec.year) +
                                             " precedes " + std::to_string(kFirstIndexedYear));

        if (corpus.records_.count(rec.doi) > 0) throw DuplicateDoiError(rec.doi, row);
        corpus.records_.emplace(rec.doi, std::move(rec));
    }

    // Phrase vocabulary for title segmentation comes from the records that
    // carry explicit keyword fields.
    KeywordSet vocabulary;
    for (const auto& [doi, rec] : corpus.records_) {
        if (rec.author_keywords.empty() && rec.database_keywords.empty()) continue;
        for (const auto& k : resolve_keywords(rec, normalizer, {})) vocabulary.insert(k);
    }

    for (const auto& [doi, rec] : corpus.records_) {
        KeywordSet keywords = resolve_keywords(rec, normalizer, vocabulary);
        for (const auto& k : keywords) {
            corpus.keyword_index_[k].insert(doi);
            auto [it, inserted] = corpus.vocabulary_.emplace(k, rec.year);
            if (!inserted) it->second = std::min(it->second, rec.year);
        }
        corpus.record_keywords_.emplace(doi, std::move(keywords));
    }

    return corpus;
}

Corpus load_corpus_file(const std::filesystem::path& path, const Normalizer& normalizer) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file '" + path.string() + "'");
    return load_corpus(in, normalizer);
}

void serialize_corpus(const Corpus& corpus, std::ostream& out) {
    const auto sanitize = [](std::string s) {
        std::replace(s.begin(), s.end(), '\t', ' ');
        std::replace(s.begin(), s.end(), '\n', ' ');
        return s;
    };
    out << kHeader << '\n';
    for (const auto& [doi, rec] : corpus.records()) {
        out << doi << '\t' << sanitize(rec.title) << '\t' << sanitize(join(rec.authors, ";"))
            << '\t' << rec.year << '\t' << sanitize(join(rec.author_keywords, ";")) << '\t'
            << sanitize(join(rec.database_keywords, ";")) << '\t'
            << (rec.source == SourceClass::Indexed ? "wos" : "onlinefirst") << '\n';
    }
}

} // namespace trendtrace
