#ifndef BIBLIO_REVIEWER_HPP
#define BIBLIO_REVIEWER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "biblio/normalize.hpp"
#include "biblio/pipeline.hpp"
#include "biblio/publication.hpp"

namespace biblio {

enum class ExclusionReason {
    kCoauthor,
    kSameAffiliation,
    kLowGrade,
    kApplicantSuggested,
    kKnownCollaborator,
    kIsApplicant,
};

std::string reason_code(ExclusionReason reason);

struct ExclusionData {
    std::set<AuthorKey> applicant_authors;
    std::set<AuthorKey> coauthors;
    std::set<std::string> applicant_affiliations;  // normalized
    std::set<AuthorKey> applicant_suggested;
    std::set<AuthorKey> known_collaborators;
    std::map<AuthorKey, int> grades;  // absent = ungraded, never excluded on grade
    int applicant_grade = 0;
    bool has_applicant_grade = false;
};

// JSON file, keys matching the ExclusionData fields; see README.
ExclusionData parse_exclusion_data(const std::string& content);

struct ReviewerCandidate {
    AuthorKey author;
    std::size_t pub_count = 0;
    std::size_t rank = 0;  // 1-based
    std::set<ExclusionReason> exclusions;

    bool excluded() const { return !exclusions.empty(); }
};

struct SuggestionReport {
    std::vector<ReviewerCandidate> candidates;  // full annotated ranking
    std::vector<AuthorKey> suggested;           // rank order, non-excluded
    std::size_t n_min = 5;
    std::size_t n_max = 7;
    bool shortfall = false;
};

// Authors of the approximation ordered by publication count descending,
// ties by ascending key.
std::vector<std::pair<AuthorKey, std::size_t>> rank_authors(
    const SpecialtyApproximation& sa, const Corpus& corpus);

// Annotates every candidate with every applicable reason; order and
// length preserved.
std::vector<ReviewerCandidate> apply_exclusions(
    const std::vector<std::pair<AuthorKey, std::size_t>>& ranked,
    const ExclusionData& ex, const Corpus& corpus);

SuggestionReport suggest_reviewers(const std::vector<ReviewerCandidate>& candidates,
                                   std::size_t n_min = 5, std::size_t n_max = 7);

struct OverlapReport {
    std::size_t total = 0;
    std::size_t in_sa = 0;
};

OverlapReport overlap_report(const std::set<AuthorKey>& names,
                             const SpecialtyApproximation& sa, const Corpus& corpus);

// Table-style bracket rendering: "30(12)".
std::string render_overlap(const OverlapReport& report);

// Human-readable table plus CSV: rank, author, pub_count, excluded, reasons.
std::string render_suggestions_text(const SuggestionReport& report);
std::string render_suggestions_csv(const SuggestionReport& report);

// Coauthors of the applicant derived from the publication record.
std::set<AuthorKey> coauthors_of(const PublicationRecord& pr, const Corpus& corpus,
                                 const std::set<AuthorKey>& applicant_authors);

}  // namespace biblio

#endif  // BIBLIO_REVIEWER_HPP
