#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biblio/reviewer.hpp"
#include "biblio/synth.hpp"

using namespace biblio;

namespace {

Publication make_pub(std::string id, std::vector<std::string> authors,
                     std::vector<std::string> affiliations = {}) {
    Publication p;
    p.id = std::move(id);
    p.title = "Some Title " + p.id;
    p.source = "Journal X";
    p.year = 2016;
    for (std::size_t i = 0; i < authors.size(); ++i) {
        Author a{authors[i], std::nullopt};
        if (i < affiliations.size() && !affiliations[i].empty())
            a.affiliation = affiliations[i];
        p.authors.push_back(std::move(a));
    }
    return p;
}

Corpus make_corpus(std::vector<Publication> pubs) {
    Corpus c;
    for (auto& p : pubs) c.publications.emplace(p.id, std::move(p));
    return c;
}

SpecialtyApproximation approximation_of(const Corpus& c) {
    SpecialtyApproximation sa;
    for (const auto& [id, p] : c.publications) sa.ids.insert(id);
    return sa;
}

}  // namespace

TEST_CASE("rank_authors orders by count then key") {
    Corpus c = make_corpus({
        make_pub("P1", {"A, X.", "B, Y."}),
        make_pub("P2", {"A, X.", "B, Y."}),
        make_pub("P3", {"A, X.", "B, Y.", "C, Z."}),
    });
    auto ranked = rank_authors(approximation_of(c), c);
    REQUIRE(ranked.size() == 3);
    CHECK(ranked[0] == std::pair<AuthorKey, std::size_t>{"a, x", 3});
    CHECK(ranked[1] == std::pair<AuthorKey, std::size_t>{"b, y", 3});
    CHECK(ranked[2] == std::pair<AuthorKey, std::size_t>{"c, z", 1});
}

TEST_CASE("empty approximation ranks nobody") {
    Corpus c;
    SpecialtyApproximation sa;
    CHECK(rank_authors(sa, c).empty());
}

TEST_CASE("rank_authors counts equal a nested-loop recount") {
    SynthParams params;
    params.n_publications = 120;
    params.rng_seed = 77;
    Corpus c = generate_corpus(params);
    SpecialtyApproximation sa;
    int i = 0;
    for (const auto& [id, p] : c.publications)
        if (i++ % 2 == 0) sa.ids.insert(id);

    auto ranked = rank_authors(sa, c);
    std::map<AuthorKey, std::size_t> recount;
    for (const auto& id : sa.ids)
        for (const auto& a : c.find(id)->authors)
            ++recount[normalize_author(a.name)];
    REQUIRE(ranked.size() == recount.size());
    for (const auto& [author, count] : ranked) CHECK(recount.at(author) == count);
    // Total order, stable across runs.
    CHECK(rank_authors(sa, c) == ranked);
    for (std::size_t k = 1; k < ranked.size(); ++k) {
        bool ok = ranked[k - 1].second > ranked[k].second ||
                  (ranked[k - 1].second == ranked[k].second &&
                   ranked[k - 1].first < ranked[k].first);
        CHECK(ok);
    }
}

TEST_CASE("empty exclusion data excludes nobody") {
    Corpus c = make_corpus({make_pub("P1", {"A, X.", "B, Y."})});
    auto candidates =
        apply_exclusions(rank_authors(approximation_of(c), c), ExclusionData{}, c);
    for (const auto& cand : candidates) CHECK(!cand.excluded());
}

TEST_CASE("every applicable reason is annotated") {
    Corpus c = make_corpus({
        make_pub("P1", {"A, X.", "B, Y."}, {"Univ One", "Univ Two"}),
        make_pub("P2", {"C, Z."}, {"Univ One"}),
        make_pub("P3", {"D, W."}),
    });
    ExclusionData ex;
    ex.applicant_authors = {"a, x"};
    ex.coauthors = {"b, y"};
    ex.applicant_affiliations = {normalize_affiliation("Univ One")};
    ex.applicant_suggested = {"d, w", "b, y"};
    ex.known_collaborators = {"b, y"};
    ex.grades = {{"c, z", 1}, {"d, w", 5}};
    ex.applicant_grade = 3;
    ex.has_applicant_grade = true;

    auto candidates = apply_exclusions(rank_authors(approximation_of(c), c), ex, c);
    REQUIRE(candidates.size() == 4);
    std::map<AuthorKey, const ReviewerCandidate*> by_key;
    for (const auto& cand : candidates) by_key[cand.author] = &cand;

    // "a, x": applicant, and affiliated with Univ One.
    CHECK(by_key.at("a, x")->exclusions ==
          std::set<ExclusionReason>{ExclusionReason::kIsApplicant,
                                    ExclusionReason::kSameAffiliation});
    // "b, y": three list-based rules at once.
    CHECK(by_key.at("b, y")->exclusions ==
          std::set<ExclusionReason>{ExclusionReason::kCoauthor,
                                    ExclusionReason::kApplicantSuggested,
                                    ExclusionReason::kKnownCollaborator});
    // "c, z": low grade plus same affiliation.
    CHECK(by_key.at("c, z")->exclusions ==
          std::set<ExclusionReason>{ExclusionReason::kLowGrade,
                                    ExclusionReason::kSameAffiliation});
    // "d, w": graded above the applicant; only the suggestion rule fires.
    CHECK(by_key.at("d, w")->exclusions ==
          std::set<ExclusionReason>{ExclusionReason::kApplicantSuggested});
}

TEST_CASE("ungraded authors are never excluded on grade") {
    Corpus c = make_corpus({make_pub("P1", {"A, X."})});
    ExclusionData ex;
    ex.applicant_grade = 9;
    ex.has_applicant_grade = true;
    auto candidates = apply_exclusions(rank_authors(approximation_of(c), c), ex, c);
    CHECK(!candidates[0].excluded());
}

TEST_CASE("apply_exclusions preserves order and length") {
    SynthParams params;
    params.n_publications = 60;
    params.rng_seed = 13;
    Corpus c = generate_corpus(params);
    auto ranked = rank_authors(approximation_of(c), c);
    ExclusionData ex;
    SplitMix64 rng(4);
    for (const auto& [author, count] : ranked)
        if (rng.next_double() < 0.4) ex.coauthors.insert(author);
    auto candidates = apply_exclusions(ranked, ex, c);
    REQUIRE(candidates.size() == ranked.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        CHECK(candidates[i].author == ranked[i].first);
        CHECK(candidates[i].pub_count == ranked[i].second);
        CHECK(candidates[i].rank == i + 1);
    }
}

namespace {

std::vector<ReviewerCandidate> synthetic_candidates(
    const std::vector<bool>& excluded_mask) {
    std::vector<ReviewerCandidate> out;
    for (std::size_t i = 0; i < excluded_mask.size(); ++i) {
        ReviewerCandidate c;
        c.author = "author" + std::to_string(i) + ", x";
        c.pub_count = excluded_mask.size() - i;
        c.rank = i + 1;
        if (excluded_mask[i]) c.exclusions.insert(ExclusionReason::kCoauthor);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

TEST_CASE("suggest_reviewers takes the top non-excluded candidates") {
    auto candidates = synthetic_candidates(std::vector<bool>(10, false));
    auto report = suggest_reviewers(candidates);
    CHECK(report.suggested.size() == 7);
    CHECK(report.suggested.front() == "author0, x");
    CHECK(!report.shortfall);
}

TEST_CASE("too few candidates raises the shortfall flag") {
    auto report = suggest_reviewers(synthetic_candidates({false, false, false}));
    CHECK(report.suggested.size() == 3);
    CHECK(report.shortfall);
}

TEST_CASE("interleaved exclusions filter then truncate") {
    // Excluded at ranks 1, 3, 5; eligible ranks 2,4,6,7,8,9,10,11.
    std::vector<bool> mask = {true, false, true, false, true,
                              false, false, false, false, false, false};
    auto report = suggest_reviewers(synthetic_candidates(mask));
    REQUIRE(report.suggested.size() == 7);
    CHECK(report.suggested[0] == "author1, x");
    CHECK(report.suggested[1] == "author3, x");
    CHECK(report.suggested[2] == "author5, x");
    CHECK(report.suggested[6] == "author9, x");
    CHECK(!report.shortfall);
}

TEST_CASE("no suggested reviewer is ever excluded (randomized)") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<bool> mask(rng.next() % 20);
        std::size_t eligible = 0;
        for (std::size_t i = 0; i < mask.size(); ++i) {
            mask[i] = rng.next_double() < 0.4;
            if (!mask[i]) ++eligible;
        }
        auto candidates = synthetic_candidates(mask);
        auto report = suggest_reviewers(candidates);
        std::set<AuthorKey> excluded_keys;
        for (const auto& c : candidates)
            if (c.excluded()) excluded_keys.insert(c.author);
        for (const auto& s : report.suggested) CHECK(!excluded_keys.count(s));
        CHECK(report.suggested.size() <= 7);
        if (eligible >= 5) CHECK(report.suggested.size() >= 5);
        CHECK(report.shortfall == (eligible < 5));
    }
}

TEST_CASE("overlap_report reproduces the bracket convention") {
    // 30 suggested names, 12 of which author publications in the corpus.
    std::vector<Publication> pubs;
    std::set<AuthorKey> names;
    for (int i = 0; i < 12; ++i) {
        std::string name = "In" + std::to_string(i) + ", A.";
        pubs.push_back(make_pub("P" + std::to_string(i), {name}));
        names.insert(normalize_author(name));
    }
    for (int i = 0; i < 18; ++i) names.insert("out" + std::to_string(i) + ", b");
    Corpus c = make_corpus(std::move(pubs));
    auto report = overlap_report(names, approximation_of(c), c);
    CHECK(report.total == 30);
    CHECK(report.in_sa == 12);
    CHECK(render_overlap(report) == "30(12)");
}

TEST_CASE("overlap of disjoint names is zero") {
    Corpus c = make_corpus({make_pub("P1", {"A, X."})});
    std::set<AuthorKey> names = {"q, q", "r, r"};
    auto report = overlap_report(names, approximation_of(c), c);
    CHECK(report.total == 2);
    CHECK(report.in_sa == 0);
    CHECK(report.in_sa <= report.total);
    CHECK(render_overlap(report) == "2(0)");
}

TEST_CASE("eleven coordinator names with three present") {
    std::vector<Publication> pubs;
    std::set<AuthorKey> names;
    for (int i = 0; i < 3; ++i) {
        std::string name = "Core" + std::to_string(i) + ", C.";
        pubs.push_back(make_pub("P" + std::to_string(i), {name}));
        names.insert(normalize_author(name));
    }
    for (int i = 0; i < 8; ++i) names.insert("away" + std::to_string(i) + ", d");
    Corpus c = make_corpus(std::move(pubs));
    CHECK(render_overlap(overlap_report(names, approximation_of(c), c)) == "11(3)");
}

TEST_CASE("coauthors_of derives collaborators from the publication record") {
    Corpus c = make_corpus({
        make_pub("P1", {"Rons, N.", "Doe, J."}),
        make_pub("P2", {"Rons, N.", "Smith, A."}),
        make_pub("P3", {"Stranger, S."}),
    });
    PublicationRecord pr;
    pr.ids = {"P1", "P2"};
    auto co = coauthors_of(pr, c, {"rons, n"});
    CHECK(co == std::set<AuthorKey>{"doe, j", "smith, a"});
}

TEST_CASE("suggestion reports render both shapes") {
    std::vector<bool> mask = {false, true, false};
    auto report = suggest_reviewers(synthetic_candidates(mask), 2, 2);
    std::string text = render_suggestions_text(report);
    CHECK(text.find("author0, x") != std::string::npos);
    CHECK(text.find("excluded: COAUTHOR") != std::string::npos);
    std::string csv = render_suggestions_csv(report);
    CHECK(csv.find("rank,author,pub_count,excluded,reasons") == 0);
    CHECK(csv.find("2,\"author1, x\",2,Y,COAUTHOR") != std::string::npos);
}

TEST_CASE("exclusion files parse and normalize names") {
    std::string json = R"({
      "applicant_authors": ["Rons, N."],
      "coauthors": ["John Doe"],
      "applicant_affiliations": ["Vrije Universiteit Brussel"],
      "applicant_suggested": ["Smith, A."],
      "known_collaborators": ["Jones, B."],
      "grades": {"Smith, A.": 2},
      "applicant_grade": 4
    })";
    ExclusionData ex = parse_exclusion_data(json);
    CHECK(ex.applicant_authors == std::set<AuthorKey>{"rons, n"});
    CHECK(ex.coauthors == std::set<AuthorKey>{"doe, j"});
    CHECK(ex.applicant_affiliations ==
          std::set<std::string>{"vrije universiteit brussel"});
    CHECK(ex.grades.at("smith, a") == 2);
    CHECK(ex.has_applicant_grade);
    CHECK(ex.applicant_grade == 4);
}
