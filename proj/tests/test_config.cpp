#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biblio/config.hpp"

using namespace biblio;

TEST_CASE("minimal config applies the documented defaults") {
    RunConfig cfg = load_config(
        "corpus = corpus.jsonl\n"
        "applicant_author = Rons, N.\n");
    CHECK(cfg.coverage_threshold == 0.5);
    CHECK(cfg.min_fields == 3);
    CHECK(cfg.n_min == 5);
    CHECK(cfg.n_max == 7);
    CHECK(cfg.format == CorpusFormat::kJsonl);
    CHECK(!cfg.period.has_value());
    CHECK(std::get<AuthorSelector>(cfg.applicant).key == "rons, n");
}

TEST_CASE("full config parses every key") {
    RunConfig cfg = load_config(
        "# demo\n"
        "corpus = a.jsonl, b.jsonl\n"
        "format = tagged\n"
        "period = 2014-2017\n"
        "coverage_threshold = 0.8\n"
        "min_fields = 4\n"
        "n_min = 3\n"
        "n_max = 9\n"
        "stopwords = stop.txt\n"
        "applicant_ids = P1, P2\n"
        "applicant_label = A_2\n"
        "applicant_domain = Biology\n"
        "exclusions = ex.json\n"
        "output_dir = out\n"
        "threads = 4\n");
    CHECK(cfg.corpus_paths == std::vector<std::string>{"a.jsonl", "b.jsonl"});
    CHECK(cfg.format == CorpusFormat::kTagged);
    CHECK(cfg.period == std::pair<int, int>{2014, 2017});
    CHECK(cfg.coverage_threshold == 0.8);
    CHECK(cfg.min_fields == 4);
    CHECK(std::get<IdListSelector>(cfg.applicant).ids ==
          std::vector<std::string>{"P1", "P2"});
    CHECK(cfg.exclusion_path == "ex.json");
    CHECK(cfg.n_threads == 4);
}

TEST_CASE("invalid values name the offending key") {
    auto base = [](const std::string& extra) {
        return "corpus = c.jsonl\napplicant_ids = P1\n" + extra;
    };
    try {
        load_config(base("coverage_threshold = 1.5\n"));
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "coverage_threshold");
    }
    CHECK_THROWS_AS(load_config(base("min_fields = 5\n")), ConfigError);
    CHECK_THROWS_AS(load_config(base("n_min = 9\n")), ConfigError);
    CHECK_THROWS_AS(load_config(base("period = nope\n")), ConfigError);
    CHECK_THROWS_AS(load_config(base("mystery_key = 1\n")), ConfigError);
    CHECK_THROWS_AS(load_config("applicant_ids = P1\n"), ConfigError);
    CHECK_THROWS_AS(load_config("corpus = c.jsonl\n"), ConfigError);
    CHECK_THROWS_AS(
        load_config("corpus = c.jsonl\napplicant_ids = P1\napplicant_author = X Y\n"),
        ConfigError);
}

TEST_CASE("load-dump-load round trip") {
    const char* configs[] = {
        "corpus = corpus.jsonl\napplicant_author = Rons, N.\n",
        "corpus = a.jsonl, b.jsonl\nformat = tagged\nperiod = 2014-2017\n"
        "coverage_threshold = 0.8\nmin_fields = 4\nn_min = 3\nn_max = 9\n"
        "stopwords = stop.txt\napplicant_ids = P1,P2\napplicant_label = A_2\n"
        "applicant_domain = Biology\nexclusions = ex.json\noutput_dir = out\n"
        "threads = 4\n",
    };
    for (const char* text : configs) {
        RunConfig cfg = load_config(text);
        RunConfig again = load_config(dump_config(cfg));
        CHECK(again == cfg);
        CHECK(dump_config(again) == dump_config(cfg));
    }
}
