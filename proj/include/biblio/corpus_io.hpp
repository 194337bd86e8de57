#ifndef BIBLIO_CORPUS_IO_HPP
#define BIBLIO_CORPUS_IO_HPP

#include <string>
#include <vector>

#include "biblio/publication.hpp"

namespace biblio {

enum class CorpusFormat { kJsonl, kTagged };

CorpusFormat parse_format(const std::string& name);
std::string format_name(CorpusFormat format);

// Parses a whole corpus file. Throws DuplicateIdError, MalformedRecordError
// or MissingFieldError on bad input.
Corpus parse_corpus(const std::string& content, CorpusFormat format);

// jsonl serialization, one record per line in ascending id order.
std::string serialize_corpus(const Corpus& corpus);

// Tagged serialization (same tag set the parser accepts).
std::string serialize_corpus_tagged(const Corpus& corpus);

// Keeps exactly the publications with start_year <= year <= end_year.
Corpus filter_by_period(const Corpus& corpus, int start_year, int end_year);

// One warning per incomplete record (empty authors, empty references).
std::vector<Warning> validate_corpus(const Corpus& corpus);

// Merge corpora; duplicate ids across inputs throw DuplicateIdError.
Corpus merge_corpora(const std::vector<Corpus>& parts);

class InvalidPeriodError : public CorpusError {
  public:
    InvalidPeriodError(int start, int end)
        : CorpusError("invalid period: " + std::to_string(start) + " > " +
                      std::to_string(end)) {}
};

}  // namespace biblio

#endif  // BIBLIO_CORPUS_IO_HPP
