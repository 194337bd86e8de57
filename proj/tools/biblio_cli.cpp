#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "biblio/config.hpp"
#include "biblio/corpus_io.hpp"
#include "biblio/run.hpp"
#include "biblio/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPipeline = 1;
constexpr int kExitConfig = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw biblio::PipelineError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Overrides {
    std::string config_path;
    double coverage_threshold = -1.0;
    int min_fields = -1;
    long n_min = -1;
    long n_max = -1;
    std::string period;
    std::string format;
    std::string output_dir;
    unsigned threads = 0;
};

void add_override_flags(CLI::App* cmd, Overrides& ov) {
    cmd->add_option("--config", ov.config_path, "run configuration file")
        ->required();
    cmd->add_option("--coverage-threshold", ov.coverage_threshold,
                    "coverage threshold override");
    cmd->add_option("--min-fields", ov.min_fields, "matched-fields override");
    cmd->add_option("--n-min", ov.n_min, "minimum suggestion count override");
    cmd->add_option("--n-max", ov.n_max, "maximum suggestion count override");
    cmd->add_option("--period", ov.period, "period override, e.g. 2014-2017");
    cmd->add_option("--format", ov.format, "corpus format override");
    cmd->add_option("--output-dir", ov.output_dir, "output directory override");
    cmd->add_option("--threads", ov.threads, "phase-3 scan threads");
}

biblio::RunConfig resolve_config(const Overrides& ov) {
    biblio::RunConfig cfg = biblio::load_config(read_file(ov.config_path));
    if (ov.coverage_threshold >= 0.0) {
        if (ov.coverage_threshold > 1.0)
            throw biblio::ConfigError("coverage_threshold", "must be in [0, 1]");
        cfg.coverage_threshold = ov.coverage_threshold;
    }
    if (ov.min_fields > 0) {
        if (ov.min_fields > 4)
            throw biblio::ConfigError("min_fields", "must be in [1, 4]");
        cfg.min_fields = ov.min_fields;
    }
    if (ov.n_min > 0) cfg.n_min = static_cast<std::size_t>(ov.n_min);
    if (ov.n_max > 0) cfg.n_max = static_cast<std::size_t>(ov.n_max);
    if (cfg.n_min > cfg.n_max)
        throw biblio::ConfigError("n_min", "must satisfy n_min <= n_max");
    if (!ov.period.empty()) {
        auto dash = ov.period.find('-');
        if (dash == std::string::npos)
            throw biblio::ConfigError("period", ov.period);
        try {
            cfg.period = {std::stoi(ov.period.substr(0, dash)),
                          std::stoi(ov.period.substr(dash + 1))};
        } catch (...) {
            throw biblio::ConfigError("period", ov.period);
        }
        if (cfg.period->first > cfg.period->second)
            throw biblio::ConfigError("period", "start year after end year");
    }
    if (!ov.format.empty()) {
        try {
            cfg.format = biblio::parse_format(ov.format);
        } catch (const biblio::CorpusError&) {
            throw biblio::ConfigError("format", ov.format);
        }
    }
    if (!ov.output_dir.empty()) cfg.output_dir = ov.output_dir;
    if (ov.threads > 0) cfg.n_threads = ov.threads;
    return cfg;
}

int cmd_validate(const std::vector<std::string>& paths, const std::string& format) {
    biblio::CorpusFormat fmt = biblio::parse_format(format);
    std::size_t total = 0, warned = 0;
    for (const auto& path : paths) {
        biblio::Corpus corpus = biblio::parse_corpus(read_file(path), fmt);
        total += corpus.size();
        for (const auto& w : biblio::validate_corpus(corpus)) {
            ++warned;
            std::cout << path << ": " << w.id << ": " << w.message << "\n";
        }
    }
    std::cout << total << " records, " << warned << " warnings\n";
    return kExitOk;
}

int cmd_keyfigures(const std::string& rows_path, const std::string& out_path) {
    std::ostringstream os;
    os << biblio::key_figures_csv_header() << "\n";
    std::istringstream iss(read_file(rows_path));
    std::string line;
    while (std::getline(iss, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string label, domain, pr_s, sr_s, sa_s;
        if (!std::getline(ls, label, ',') || !std::getline(ls, domain, ',') ||
            !std::getline(ls, pr_s, ',') || !std::getline(ls, sr_s, ',') ||
            !std::getline(ls, sa_s, ','))
            throw biblio::PipelineError("bad key-figures row: " + line);
        biblio::KeyFigures kf;
        kf.applicant_label = label;
        kf.domain_label = domain;
        kf.pr_count = std::stoul(pr_s);
        kf.sr_count = std::stoul(sr_s);
        kf.sa_count = std::stoul(sa_s);
        if (kf.sr_count < kf.pr_count)
            throw biblio::PipelineError("row violates |SR| >= |PR|: " + line);
        os << biblio::key_figures_csv_row(kf) << "\n";
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << os.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bibliometric specialty approximation and reviewer suggestion"};
    app.require_subcommand(1);

    // validate
    auto* validate = app.add_subcommand("validate", "lint corpus files");
    std::vector<std::string> validate_paths;
    std::string validate_format = "jsonl";
    validate->add_option("--corpus", validate_paths, "corpus file")->required();
    validate->add_option("--format", validate_format, "jsonl or tagged");

    // approximate
    auto* approximate =
        app.add_subcommand("approximate", "run phases 1-3 and write key figures");
    Overrides approx_ov;
    add_override_flags(approximate, approx_ov);

    // suggest
    auto* suggest =
        app.add_subcommand("suggest", "reviewer suggestions (runs phases 1-3 in-run)");
    Overrides suggest_ov;
    add_override_flags(suggest, suggest_ov);

    // synth
    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
    biblio::SynthParams params;
    std::string synth_out;
    synth->add_option("--out", synth_out, "output jsonl path (default stdout)");
    synth->add_option("--n-publications", params.n_publications, "publication count");
    synth->add_option("--n-authors", params.n_authors, "author pool size");
    synth->add_option("--lotka-exponent", params.lotka_exponent, "author law exponent");
    synth->add_option("--zipf-exponent", params.zipf_exponent, "title word exponent");
    synth->add_option("--vocabulary-size", params.vocabulary_size, "title vocabulary");
    synth->add_option("--n-sources", params.n_sources, "source pool size");
    synth->add_option("--source-skew", params.source_skew, "source skew exponent");
    synth->add_option("--refs-min", params.refs_per_pub.first, "min references");
    synth->add_option("--refs-max", params.refs_per_pub.second, "max references");
    synth->add_option("--authors-min", params.authors_per_pub.first, "min authors");
    synth->add_option("--authors-max", params.authors_per_pub.second, "max authors");
    synth->add_option("--year-start", params.year_range.first, "first year");
    synth->add_option("--year-end", params.year_range.second, "last year");
    synth->add_option("--seed", params.rng_seed, "rng seed");

    // keyfigures
    auto* keyfigures =
        app.add_subcommand("keyfigures", "render a key-figures CSV from count rows");
    std::string kf_rows, kf_out;
    keyfigures
        ->add_option("--rows", kf_rows,
                     "input rows: label,domain,pr,sr,sa per line")
        ->required();
    keyfigures->add_option("--out", kf_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*validate) return cmd_validate(validate_paths, validate_format);
        if (*approximate) {
            biblio::run_pipeline(resolve_config(approx_ov));
            return kExitOk;
        }
        if (*suggest) {
            biblio::RunConfig cfg = resolve_config(suggest_ov);
            if (!cfg.exclusion_path)
                throw biblio::ConfigError("exclusions",
                                          "suggest requires an exclusions file");
            biblio::run_pipeline(cfg);
            return kExitOk;
        }
        if (*synth) {
            std::string out = biblio::serialize_corpus(biblio::generate_corpus(params));
            if (synth_out.empty()) {
                std::cout << out;
            } else {
                std::ofstream f(synth_out, std::ios::binary);
                if (!f) throw biblio::PipelineError("cannot write: " + synth_out);
                f << out;
            }
            return kExitOk;
        }
        if (*keyfigures) return cmd_keyfigures(kf_rows, kf_out);
    } catch (const biblio::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPipeline;
    }
    return kExitOk;
}
