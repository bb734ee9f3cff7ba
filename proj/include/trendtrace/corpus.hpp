#pragma once

#include "trendtrace/keywords.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trendtrace {

enum class SourceClass { Indexed, OnlineFirst };

/// One bibliographic item. Keyword fields hold the raw strings from the
/// file; canonical keywords live in the owning Corpus.
struct ArticleRecord {
    std::string doi;
    std::string title;
    std::vector<std::string> authors;
    int year = 0;
    std::vector<std::string> author_keywords;   // DE
    std::vector<std::string> database_keywords; // ID
    SourceClass source = SourceClass::Indexed;

    bool operator==(const ArticleRecord&) const = default;
};

/// Lowercase, trim, and strip a leading doi.org URL prefix.
std::string normalize_doi(std::string_view raw);

/// Canonical keyword set for one record: normalized DE + ID when either
/// is non-empty, otherwise the segmented title.
KeywordSet resolve_keywords(const ArticleRecord& record, const Normalizer& normalizer,
                            const KeywordSet& vocabulary);

/// Immutable bibliographic index keyed by DOI. Safe for unrestricted
/// concurrent reads once built.
class Corpus {
public:
    const std::map<std::string, ArticleRecord>& records() const { return records_; }

    /// Canonical keyword -> DOIs of the records carrying it.
    const std::map<CanonicalKeyword, std::set<std::string>>& keyword_index() const {
        return keyword_index_;
    }

    /// Canonical keyword -> first-appearance year (min over its records).
    const std::map<CanonicalKeyword, int>& vocabulary() const { return vocabulary_; }

    const ArticleRecord* find(const std::string& doi) const;

    /// Resolved canonical keywords of one record; empty set for unknown DOIs.
    const KeywordSet& keywords_of(const std::string& doi) const;

    /// Number of records carrying the keyword; 0 if unknown.
    std::size_t papers_with_keyword(const CanonicalKeyword& k) const;

    /// First-appearance year of the keyword; absent if unknown.
    std::optional<int> first_year(const CanonicalKeyword& k) const;

    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

private:
    friend Corpus load_corpus(std::istream&, const Normalizer&);

    std::map<std::string, ArticleRecord> records_;
    std::map<std::string, KeywordSet> record_keywords_;
    std::map<CanonicalKeyword, std::set<std::string>> keyword_index_;
    std::map<CanonicalKeyword, int> vocabulary_;
};

/// Loads the tab-separated bibliographic format (header row; columns
/// DOI, TI, AU, PY, DE, ID, SRC). Throws DuplicateDoiError,
/// MissingDoiError or MalformedRowError.
Corpus load_corpus(std::istream& in, const Normalizer& normalizer);
Corpus load_corpus_file(const std::filesystem::path& path, const Normalizer& normalizer);

/// Writes the corpus back in the same format, records ordered by DOI.
void serialize_corpus(const Corpus& corpus, std::ostream& out);

} // namespace trendtrace
