#ifndef BIBLIO_NORMALIZE_HPP
#define BIBLIO_NORMALIZE_HPP

#include <set>
#include <string>

#include "biblio/publication.hpp"

namespace biblio {

using SourceKey = std::string;
using WordKey = std::string;
using AuthorKey = std::string;
using RefKey = std::string;

class EmptyAfterNormalizationError : public std::runtime_error {
  public:
    explicit EmptyAfterNormalizationError(const std::string& raw)
        : std::runtime_error("nothing survives normalization of: '" + raw + "'") {}
};

struct StopWordList {
    std::set<std::string> words;

    bool contains(const std::string& w) const { return words.count(w) != 0; }
};

// One token per line, '#' comments, UTF-8.
StopWordList parse_stop_words(const std::string& content);
StopWordList default_stop_words();

// The four normalized value sets of one publication.
struct FieldValues {
    std::set<SourceKey> sources;
    std::set<WordKey> title_words;
    std::set<AuthorKey> authors;
    std::set<RefKey> references;

    bool operator==(const FieldValues&) const = default;
};

enum class Field { kSource, kTitleWord, kAuthor, kReference };

constexpr Field kAllFields[] = {Field::kSource, Field::kTitleWord,
                                Field::kAuthor, Field::kReference};

std::string field_name(Field field);

// Lowercase, strip punctuation, collapse whitespace, fold diacritics.
SourceKey normalize_source(const std::string& raw);

// Lowercase, split on non-alphanumerics, drop stop words, tokens
// shorter than 2 chars and all-digit tokens.
std::set<WordKey> tokenize_title(const std::string& raw, const StopWordList& stop);

// Canonical "surname, initials" form, lowercase.
AuthorKey normalize_author(const std::string& raw);

// "firstauthor|year|source" extracted from a comma-separated cited
// reference string; missing components are empty.
RefKey normalize_reference(const std::string& raw);

// RefKey a corpus publication would be cited under.
RefKey ref_key_of(const Publication& p);

// Normalized affiliation string for conflict-of-interest matching.
std::string normalize_affiliation(const std::string& raw);

// Applies the four normalizers; failures of individual values drop
// that value rather than aborting the record.
FieldValues extract_field_values(const Publication& p, const StopWordList& stop);

const std::set<std::string>& field_of(const FieldValues& fv, Field field);

}  // namespace biblio

#endif  // BIBLIO_NORMALIZE_HPP
