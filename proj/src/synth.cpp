#include "biblio/synth.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace biblio {

std::uint64_t SplitMix64::next_in(std::uint64_t lo, std::uint64_t hi) {
    // Modulo bias is negligible for the small ranges used here.
    return lo + next() % (hi - lo + 1);
}

PowerLawSampler::PowerLawSampler(double exponent, std::uint64_t support_max) {
    if (exponent <= 0.0) throw InfeasibleParamsError("exponent must be > 0");
    if (support_max < 1) throw InfeasibleParamsError("support_max must be >= 1");
    cdf_.resize(support_max);
    double acc = 0.0;
    for (std::uint64_t k = 1; k <= support_max; ++k) {
        acc += std::pow(static_cast<double>(k), -exponent);
        cdf_[k - 1] = acc;
    }
    for (double& c : cdf_) c /= acc;
    cdf_.back() = 1.0;
}

std::uint64_t PowerLawSampler::sample(SplitMix64& rng) const {
    double u = rng.next_double();
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return static_cast<std::uint64_t>(it - cdf_.begin()) + 1;
}

std::uint64_t sample_power_law(SplitMix64& rng, double exponent,
                               std::uint64_t support_max) {
    return PowerLawSampler(exponent, support_max).sample(rng);
}

void validate_params(const SynthParams& p) {
    if (p.n_publications < 1) throw InfeasibleParamsError("n_publications < 1");
    if (p.n_authors < 1) throw InfeasibleParamsError("n_authors < 1");
    if (p.vocabulary_size < 1) throw InfeasibleParamsError("vocabulary_size < 1");
    if (p.n_sources < 1) throw InfeasibleParamsError("n_sources < 1");
    if (p.lotka_exponent <= 0.0) throw InfeasibleParamsError("lotka_exponent <= 0");
    if (p.zipf_exponent <= 0.0) throw InfeasibleParamsError("zipf_exponent <= 0");
    if (p.source_skew <= 0.0) throw InfeasibleParamsError("source_skew <= 0");
    if (p.refs_per_pub.first > p.refs_per_pub.second)
        throw InfeasibleParamsError("refs_per_pub range is empty");
    if (p.authors_per_pub.first > p.authors_per_pub.second ||
        p.authors_per_pub.first < 1)
        throw InfeasibleParamsError("authors_per_pub range is empty");
    if (p.year_range.first > p.year_range.second ||
        p.year_range.first < kMinYear || p.year_range.second > kMaxYear)
        throw InfeasibleParamsError("year_range invalid");
    if (p.title_words_per_pub < 1)
        throw InfeasibleParamsError("title_words_per_pub < 1");
}

namespace {

// Per-author productivity cap; keeps the realized log-log histogram
// steep enough to read the exponent off directly.
constexpr std::uint64_t kMaxProductivity = 50;

std::string zero_pad(std::size_t value, int width) {
    std::string s = std::to_string(value);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

std::string author_name(std::size_t index) {
    // "Auth0042, A" normalizes to "auth0042, a".
    return "Auth" + zero_pad(index, 4) + ", A";
}

std::string cited_author(std::size_t index) {
    // Surname-first cited form of the same author.
    return "Auth" + zero_pad(index, 4) + " A";
}

std::string source_name(std::size_t index) {
    return "Journal Src" + zero_pad(index, 3);
}

std::string word(std::size_t index) { return "w" + zero_pad(index, 4); }

}  // namespace

Corpus generate_corpus(const SynthParams& params) {
    validate_params(params);
    SplitMix64 rng(params.rng_seed);

    // Author slots per publication, drawn up front so the total deck
    // size is known.
    std::vector<std::size_t> slots_per_pub(params.n_publications);
    std::size_t total_slots = 0;
    for (auto& s : slots_per_pub) {
        s = static_cast<std::size_t>(
            rng.next_in(params.authors_per_pub.first, params.authors_per_pub.second));
        total_slots += s;
    }

    // Lotka: each author gets a drawn productivity; the deck realizes
    // those counts exactly (up to the final truncated author).
    PowerLawSampler lotka(params.lotka_exponent, kMaxProductivity);
    std::vector<std::size_t> deck;
    deck.reserve(total_slots);
    std::size_t author_index = 0;
    while (deck.size() < total_slots) {
        std::uint64_t k = lotka.sample(rng);
        for (std::uint64_t i = 0; i < k && deck.size() < total_slots; ++i)
            deck.push_back(author_index);
        author_index = (author_index + 1) % params.n_authors;
    }
    // Fisher-Yates with the portable generator.
    for (std::size_t i = deck.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_in(0, i - 1));
        std::swap(deck[i - 1], deck[j]);
    }

    PowerLawSampler zipf_words(params.zipf_exponent, params.vocabulary_size);
    PowerLawSampler zipf_sources(params.source_skew, params.n_sources);

    const int id_width =
        static_cast<int>(std::to_string(params.n_publications - 1).size());

    Corpus corpus;
    corpus.provenance = "synthetic seed=" + std::to_string(params.rng_seed);
    std::vector<const Publication*> generated;
    generated.reserve(params.n_publications);
    // Citation endpoints drawn so far; re-picking from this list gives
    // the rich-get-richer reference pattern.
    std::vector<std::size_t> endpoints;
    std::size_t deck_pos = 0;

    for (std::size_t i = 0; i < params.n_publications; ++i) {
        Publication p;
        p.id = "S" + zero_pad(i, id_width);
        p.year = static_cast<int>(rng.next_in(
            static_cast<std::uint64_t>(params.year_range.first),
            static_cast<std::uint64_t>(params.year_range.second)));
        p.source = source_name(zipf_sources.sample(rng) - 1);

        std::string title;
        std::set<std::size_t> seen_words;
        for (std::size_t w = 0; w < params.title_words_per_pub; ++w)
            seen_words.insert(zipf_words.sample(rng) - 1);
        for (std::size_t w : seen_words) {
            if (!title.empty()) title += ' ';
            title += word(w);
        }
        p.title = title;

        std::set<std::size_t> pub_authors;
        for (std::size_t s = 0; s < slots_per_pub[i]; ++s) {
            // Skip within-publication duplicates; fall back to a linear
            // probe over the author space when the deck runs dry.
            std::size_t tries = 0;
            std::size_t a;
            do {
                a = deck_pos < deck.size()
                        ? deck[deck_pos++]
                        : static_cast<std::size_t>(rng.next_in(0, params.n_authors - 1));
                ++tries;
            } while (pub_authors.count(a) && tries < 8);
            while (pub_authors.count(a)) a = (a + 1) % params.n_authors;
            pub_authors.insert(a);
            p.authors.push_back({author_name(a), std::nullopt});
        }

        // References point strictly backwards; counts are clamped to
        // what exists.
        std::size_t want = static_cast<std::size_t>(
            rng.next_in(params.refs_per_pub.first, params.refs_per_pub.second));
        want = std::min(want, i);
        std::set<std::size_t> targets;
        std::size_t attempts = 0;
        while (targets.size() < want && attempts < want * 8 + 8) {
            ++attempts;
            std::size_t t;
            if (!endpoints.empty() && rng.next_double() < 0.5) {
                t = endpoints[static_cast<std::size_t>(
                    rng.next_in(0, endpoints.size() - 1))];
            } else {
                t = static_cast<std::size_t>(rng.next_in(0, i - 1));
            }
            if (t < i) targets.insert(t);
        }
        for (std::size_t t : targets) {
            endpoints.push_back(t);
            const Publication& cited = *generated[t];
            p.references.push_back(cited_author(std::stoul(
                                       cited.authors.front().name.substr(4, 4))) +
                                   ", " + std::to_string(cited.year) + ", " +
                                   cited.source);
        }

        auto [it, ok] = corpus.publications.emplace(p.id, std::move(p));
        (void)ok;
        generated.push_back(&it->second);
    }
    return corpus;
}

}  // namespace biblio
