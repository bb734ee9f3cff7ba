#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace trendtrace {

/// A canonical keyword is lowercase, trimmed, internally single-spaced,
/// and a fixed point of normalize().
using CanonicalKeyword = std::string;
using KeywordSet = std::set<CanonicalKeyword>;

/// Keyword normalization rules: case folding, plural unification and
/// synonym merging. Immutable once validated; all operations are pure.
struct Normalizer {
    /// Alias -> canonical. Keys are stored in pre-lookup normal form
    /// (folded and singularized); values must be fixed points of
    /// normalize(), checked by validate().
    std::map<std::string, std::string> synonyms;

    /// Lowercase, whitespace-free tokens dropped by title segmentation.
    std::set<std::string> stopwords;

    /// Final tokens never singularized.
    std::set<std::string> plural_exceptions = {"analysis", "thesis", "access"};

    /// Adds one alias -> canonical mapping, folding the alias key.
    void add_synonym(std::string_view alias, std::string_view canonical);

    /// Adds one stopword; throws ConfigError if it contains whitespace.
    void add_stopword(std::string_view word);

    /// Checks that every synonym value is a fixed point of normalize().
    /// Throws ConfigError naming the first offending entry.
    void validate() const;
};

/// Loads synonyms ("alias => canonical" lines), stopwords and plural
/// exceptions (one token per line) from files. "#" starts a comment in
/// all three formats; empty paths are skipped. Validates the result.
Normalizer load_normalizer(const std::filesystem::path& synonym_file,
                           const std::filesystem::path& stopword_file,
                           const std::filesystem::path& exception_file);

/// Singularizes the final token of a folded keyword: "-ies" -> "y",
/// "-ses"/"-xes"/"-zes"/"-ches"/"-shes" drop "es", otherwise a trailing
/// "-s" is dropped unless the token ends in "ss" or is an exception.
/// Applied to a fixed point so the result is stable under re-application;
/// never empties a token.
std::string singularize(std::string_view token, const std::set<std::string>& exceptions);

/// Full pipeline: trim, collapse internal whitespace, lowercase,
/// singularize the final token, then one synonym lookup. The result is a
/// fixed point of normalize. Throws EmptyKeywordError if nothing is left
/// after trimming.
CanonicalKeyword normalize(std::string_view raw, const Normalizer& n);

/// Derives keywords from a title: lowercase, punctuation to spaces
/// (hyphens are token-internal), then every maximal left-to-right token
/// n-gram (n <= 4) whose normalized form is in the vocabulary, plus all
/// remaining non-stopword single tokens, normalized. May return empty.
KeywordSet segment_title(std::string_view title, const KeywordSet& vocabulary,
                         const Normalizer& n);

} // namespace trendtrace
