#ifndef BIBLIO_PIPELINE_HPP
#define BIBLIO_PIPELINE_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "biblio/normalize.hpp"
#include "biblio/publication.hpp"

namespace biblio {

// The applicant's own publications (PR).
struct PublicationRecord {
    std::set<std::string> ids;
    std::string owner_label;
};

// PR enlarged with the publications it cites (SR).
struct SeedRecord {
    std::set<std::string> ids;
    PublicationRecord origin;
    std::size_t unresolved_references = 0;
};

struct FieldFrequencyTable {
    Field field = Field::kSource;
    std::map<std::string, std::size_t> counts;
};

struct KeyValueProfile {
    std::set<SourceKey> key_sources;
    std::set<WordKey> key_title_words;
    std::set<AuthorKey> key_authors;
    std::set<RefKey> key_references;
    double threshold = 0.5;
    std::size_t seed_size = 0;

    const std::set<std::string>& keys_of(Field field) const;
};

struct SpecialtyApproximation {
    std::set<std::string> ids;
    KeyValueProfile profile;
    int min_fields = 3;
};

class PipelineError : public std::runtime_error {
  public:
    explicit PipelineError(const std::string& what) : std::runtime_error(what) {}
};

class EmptyRecordError : public PipelineError {
  public:
    EmptyRecordError() : PipelineError("selector matched no publication") {}
};

class UnknownIdError : public PipelineError {
  public:
    explicit UnknownIdError(const std::string& id)
        : PipelineError("unknown publication id: " + id) {}
};

class InvariantViolationError : public PipelineError {
  public:
    explicit InvariantViolationError(const std::string& what) : PipelineError(what) {}
};

// Either an explicit id list or an author key.
struct IdListSelector {
    std::vector<std::string> ids;
};
struct AuthorSelector {
    AuthorKey key;
};
using ApplicantSelector = std::variant<IdListSelector, AuthorSelector>;

PublicationRecord build_publication_record(const Corpus& corpus,
                                           const ApplicantSelector& selector,
                                           const std::string& owner_label = "");

// Phase 1: one hop of cited-publication enlargement, resolved by RefKey.
SeedRecord build_seed_record(const PublicationRecord& pr, const Corpus& corpus);

FieldFrequencyTable field_frequency_table(const SeedRecord& seed, const Corpus& corpus,
                                          Field field, const StopWordList& stop);

// Phase 2 greedy selection: descending count, ascending key on ties,
// until ceil(threshold * seed_size) seed publications are covered.
std::set<std::string> select_key_values(const FieldFrequencyTable& table,
                                        const SeedRecord& seed, const Corpus& corpus,
                                        double threshold, const StopWordList& stop);

// The selected values in selection order, with counts (for reports).
std::vector<std::pair<std::string, std::size_t>> select_key_values_ordered(
    const FieldFrequencyTable& table, const SeedRecord& seed, const Corpus& corpus,
    double threshold, const StopWordList& stop);

KeyValueProfile build_profile(const SeedRecord& seed, const Corpus& corpus,
                              double threshold, const StopWordList& stop);

// Number of fields whose value set intersects the profile's key set.
int match_count(const FieldValues& fv, const KeyValueProfile& profile);

// Phase 3. n_threads <= 1 means sequential; any thread count yields the
// identical result set.
SpecialtyApproximation build_specialty_approximation(const Corpus& corpus,
                                                     const KeyValueProfile& profile,
                                                     int min_fields,
                                                     const StopWordList& stop,
                                                     unsigned n_threads = 1);

KeyFigures key_figures(const std::string& label, const std::string& domain_label,
                       const PublicationRecord& pr, const SeedRecord& sr,
                       const SpecialtyApproximation& sa);

std::string key_figures_csv_header();
std::string key_figures_csv_row(const KeyFigures& kf);

// Profile dump: each field's key values with counts, in selection order.
std::string render_profile(const KeyValueProfile& profile, const SeedRecord& seed,
                           const Corpus& corpus, const StopWordList& stop);

}  // namespace biblio

#endif  // BIBLIO_PIPELINE_HPP
