#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "biblio/corpus_io.hpp"
#include "biblio/normalize.hpp"
#include "biblio/synth.hpp"

using namespace biblio;

TEST_CASE("degenerate support always draws one") {
    SplitMix64 rng(1);
    for (int i = 0; i < 100; ++i) CHECK(sample_power_law(rng, 2.0, 1) == 1);
}

TEST_CASE("fixed seed reproduces the draw sequence") {
    PowerLawSampler sampler(1.5, 1000);
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(sampler.sample(a) == sampler.sample(b));
}

TEST_CASE("P(k=1) approaches 1/zeta(2) for exponent 2") {
    // 1/zeta(2) = 6/pi^2 ~ 0.6079.
    PowerLawSampler sampler(2.0, 1000000);
    SplitMix64 rng(7);
    int ones = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
        if (sampler.sample(rng) == 1) ++ones;
    double p1 = static_cast<double>(ones) / draws;
    CHECK(p1 == doctest::Approx(6.0 / (M_PI * M_PI)).epsilon(0.033));
}

TEST_CASE("single publication has no references") {
    SynthParams params;
    params.n_publications = 1;
    params.refs_per_pub = {3, 5};
    Corpus c = generate_corpus(params);
    REQUIRE(c.size() == 1);
    CHECK(c.publications.begin()->second.references.empty());
}

TEST_CASE("generation is byte-deterministic") {
    SynthParams params;
    params.n_publications = 50;
    params.rng_seed = 42;
    CHECK(serialize_corpus(generate_corpus(params)) ==
          serialize_corpus(generate_corpus(params)));
    params.rng_seed = 43;
    std::string other = serialize_corpus(generate_corpus(params));
    params.rng_seed = 42;
    CHECK(serialize_corpus(generate_corpus(params)) != other);
}

TEST_CASE("generated corpora round-trip and validate cleanly") {
    SynthParams params;
    params.n_publications = 150;
    params.refs_per_pub = {1, 4};
    params.rng_seed = 9;
    Corpus c = generate_corpus(params);
    CHECK(parse_corpus(serialize_corpus(c), CorpusFormat::kJsonl) == c);
    for (const auto& w : validate_corpus(c)) {
        // Only the earliest publications may lack references.
        CHECK(w.message == "no references");
    }
}

TEST_CASE("references are acyclic: targets have earlier ids") {
    SynthParams params;
    params.n_publications = 100;
    params.refs_per_pub = {1, 5};
    params.rng_seed = 3;
    Corpus c = generate_corpus(params);

    // Resolve each reference back to generated publications by key.
    std::map<std::string, std::string> id_by_ref_key;
    for (const auto& [id, p] : c.publications) {
        auto [it, fresh] = id_by_ref_key.emplace(ref_key_of(p), id);
        if (!fresh && id < it->second) it->second = id;
    }
    for (const auto& [id, p] : c.publications) {
        for (const auto& raw : p.references) {
            auto key = normalize_reference(raw);
            auto it = id_by_ref_key.find(key);
            REQUIRE(it != id_by_ref_key.end());
            CHECK(it->second < id);  // zero-padded ids order by generation index
        }
    }
}

TEST_CASE("author productivity follows the requested exponent") {
    SynthParams params;
    params.n_publications = 10000;
    params.n_authors = 20000;
    params.lotka_exponent = 2.0;
    params.rng_seed = 2024;
    Corpus c = generate_corpus(params);

    std::map<std::string, std::size_t> pubs_per_author;
    for (const auto& [id, p] : c.publications)
        for (const auto& a : p.authors) ++pubs_per_author[a.name];
    std::map<std::size_t, std::size_t> histogram;
    for (const auto& [author, k] : pubs_per_author) ++histogram[k];

    // Least-squares slope of log n_k vs log k.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& [k, nk] : histogram) {
        double x = std::log(static_cast<double>(k));
        double y = std::log(static_cast<double>(nk));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope > -2.3);
    CHECK(slope < -1.7);
}

TEST_CASE("infeasible parameters are rejected") {
    SynthParams params;
    params.n_publications = 0;
    CHECK_THROWS_AS(validate_params(params), InfeasibleParamsError);
    params = SynthParams{};
    params.lotka_exponent = 0.0;
    CHECK_THROWS_AS(validate_params(params), InfeasibleParamsError);
    params = SynthParams{};
    params.authors_per_pub = {3, 2};
    CHECK_THROWS_AS(validate_params(params), InfeasibleParamsError);
    params = SynthParams{};
    params.year_range = {2017, 2014};
    CHECK_THROWS_AS(generate_corpus(params), InfeasibleParamsError);
}
