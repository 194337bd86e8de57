#include "biblio/reviewer.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace biblio {

using nlohmann::json;

std::string reason_code(ExclusionReason reason) {
    switch (reason) {
        case ExclusionReason::kCoauthor: return "COAUTHOR";
        case ExclusionReason::kSameAffiliation: return "SAME_AFFILIATION";
        case ExclusionReason::kLowGrade: return "LOW_GRADE";
        case ExclusionReason::kApplicantSuggested: return "APPLICANT_SUGGESTED";
        case ExclusionReason::kKnownCollaborator: return "KNOWN_COLLABORATOR";
        case ExclusionReason::kIsApplicant: return "IS_APPLICANT";
    }
    return "?";
}

ExclusionData parse_exclusion_data(const std::string& content) {
    json j = json::parse(content);
    ExclusionData ex;
    auto read_keys = [&](const char* field, std::set<AuthorKey>& out) {
        if (!j.contains(field)) return;
        for (const auto& name : j[field])
            out.insert(normalize_author(name.get<std::string>()));
    };
    read_keys("applicant_authors", ex.applicant_authors);
    read_keys("coauthors", ex.coauthors);
    read_keys("applicant_suggested", ex.applicant_suggested);
    read_keys("known_collaborators", ex.known_collaborators);
    if (j.contains("applicant_affiliations"))
        for (const auto& aff : j["applicant_affiliations"])
            ex.applicant_affiliations.insert(
                normalize_affiliation(aff.get<std::string>()));
    if (j.contains("grades"))
        for (const auto& [name, grade] : j["grades"].items())
            ex.grades[normalize_author(name)] = grade.get<int>();
    if (j.contains("applicant_grade")) {
        ex.applicant_grade = j["applicant_grade"].get<int>();
        ex.has_applicant_grade = true;
    }
    return ex;
}

std::vector<std::pair<AuthorKey, std::size_t>> rank_authors(
    const SpecialtyApproximation& sa, const Corpus& corpus) {
    std::map<AuthorKey, std::size_t> counts;
    for (const auto& id : sa.ids) {
        const Publication* p = corpus.find(id);
        if (!p) throw UnknownIdError(id);
        std::set<AuthorKey> keys;
        for (const auto& a : p->authors) {
            try {
                keys.insert(normalize_author(a.name));
            } catch (const EmptyAfterNormalizationError&) {
            }
        }
        for (const auto& key : keys) ++counts[key];
    }
    std::vector<std::pair<AuthorKey, std::size_t>> ranked(counts.begin(),
                                                          counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return ranked;
}

std::vector<ReviewerCandidate> apply_exclusions(
    const std::vector<std::pair<AuthorKey, std::size_t>>& ranked,
    const ExclusionData& ex, const Corpus& corpus) {
    // Affiliations observed per author across the whole corpus.
    std::map<AuthorKey, std::set<std::string>> affiliations;
    if (!ex.applicant_affiliations.empty()) {
        for (const auto& [id, p] : corpus.publications) {
            for (const auto& a : p.authors) {
                if (!a.affiliation) continue;
                try {
                    affiliations[normalize_author(a.name)].insert(
                        normalize_affiliation(*a.affiliation));
                } catch (const EmptyAfterNormalizationError&) {
                }
            }
        }
    }

    std::vector<ReviewerCandidate> out;
    out.reserve(ranked.size());
    std::size_t rank = 0;
    for (const auto& [author, count] : ranked) {
        ReviewerCandidate c;
        c.author = author;
        c.pub_count = count;
        c.rank = ++rank;
        if (ex.coauthors.count(author))
            c.exclusions.insert(ExclusionReason::kCoauthor);
        if (ex.applicant_suggested.count(author))
            c.exclusions.insert(ExclusionReason::kApplicantSuggested);
        if (ex.known_collaborators.count(author))
            c.exclusions.insert(ExclusionReason::kKnownCollaborator);
        if (ex.applicant_authors.count(author))
            c.exclusions.insert(ExclusionReason::kIsApplicant);
        if (ex.has_applicant_grade) {
            auto g = ex.grades.find(author);
            if (g != ex.grades.end() && g->second < ex.applicant_grade)
                c.exclusions.insert(ExclusionReason::kLowGrade);
        }
        auto affs = affiliations.find(author);
        if (affs != affiliations.end()) {
            for (const auto& aff : affs->second) {
                if (ex.applicant_affiliations.count(aff)) {
                    c.exclusions.insert(ExclusionReason::kSameAffiliation);
                    break;
                }
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

SuggestionReport suggest_reviewers(const std::vector<ReviewerCandidate>& candidates,
                                   std::size_t n_min, std::size_t n_max) {
    if (n_min < 1 || n_min > n_max)
        throw PipelineError("suggestion bounds must satisfy 1 <= n_min <= n_max");
    SuggestionReport report;
    report.candidates = candidates;
    report.n_min = n_min;
    report.n_max = n_max;
    std::size_t available = 0;
    for (const auto& c : candidates) {
        if (c.excluded()) continue;
        ++available;
        if (report.suggested.size() < n_max) report.suggested.push_back(c.author);
    }
    report.shortfall = available < n_min;
    return report;
}

OverlapReport overlap_report(const std::set<AuthorKey>& names,
                             const SpecialtyApproximation& sa,
                             const Corpus& corpus) {
    std::set<AuthorKey> sa_authors;
    for (const auto& id : sa.ids) {
        const Publication* p = corpus.find(id);
        if (!p) throw UnknownIdError(id);
        for (const auto& a : p->authors) {
            try {
                sa_authors.insert(normalize_author(a.name));
            } catch (const EmptyAfterNormalizationError&) {
            }
        }
    }
    OverlapReport report;
    report.total = names.size();
    for (const auto& n : names)
        if (sa_authors.count(n)) ++report.in_sa;
    return report;
}

std::string render_overlap(const OverlapReport& report) {
    return std::to_string(report.total) + "(" + std::to_string(report.in_sa) + ")";
}

namespace {

std::string reasons_joined(const ReviewerCandidate& c) {
    std::string out;
    for (const auto& r : c.exclusions) {
        if (!out.empty()) out += '+';
        out += reason_code(r);
    }
    return out;
}

}  // namespace

std::string render_suggestions_text(const SuggestionReport& report) {
    std::ostringstream os;
    os << "suggested reviewers (" << report.suggested.size() << ", bounds "
       << report.n_min << "-" << report.n_max << ")";
    if (report.shortfall) os << " [SHORTFALL]";
    os << "\n";
    for (std::size_t i = 0; i < report.suggested.size(); ++i)
        os << "  " << (i + 1) << ". " << report.suggested[i] << "\n";
    os << "candidate pool\n";
    for (const auto& c : report.candidates) {
        os << "  " << c.rank << ". " << c.author << " (" << c.pub_count << ")";
        if (c.excluded()) os << " excluded: " << reasons_joined(c);
        os << "\n";
    }
    return os.str();
}

std::string render_suggestions_csv(const SuggestionReport& report) {
    std::ostringstream os;
    os << "rank,author,pub_count,excluded,reasons\n";
    for (const auto& c : report.candidates) {
        os << c.rank << ",\"" << c.author << "\"," << c.pub_count << ","
           << (c.excluded() ? "Y" : "N") << "," << reasons_joined(c) << "\n";
    }
    return os.str();
}

std::set<AuthorKey> coauthors_of(const PublicationRecord& pr, const Corpus& corpus,
                                 const std::set<AuthorKey>& applicant_authors) {
    std::set<AuthorKey> out;
    for (const auto& id : pr.ids) {
        const Publication* p = corpus.find(id);
        if (!p) throw UnknownIdError(id);
        for (const auto& a : p->authors) {
            try {
                AuthorKey key = normalize_author(a.name);
                if (!applicant_authors.count(key)) out.insert(key);
            } catch (const EmptyAfterNormalizationError&) {
            }
        }
    }
    return out;
}

}  // namespace biblio
